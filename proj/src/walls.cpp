#include <stabkit/walls.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace stabkit {

namespace {

struct LineKey {
    bool vertical;
    Rational a, b;  // (xi0, 0) or (slope, intercept)

    friend bool operator<(const LineKey& x, const LineKey& y) {
        if (x.vertical != y.vertical) return x.vertical < y.vertical;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

LineKey key_of(const XiLine& l) {
    return l.vertical ? LineKey{true, l.xi0, Rational(0)} : LineKey{false, l.slope, l.intercept};
}

std::array<Rational, 3> sub3(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) {
    return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}

int cmp3(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) {
    for (int i = 0; i < 3; ++i) {
        if (x[i] < y[i]) return -1;
        if (y[i] < x[i]) return 1;
    }
    return 0;
}

Rational disc3(const std::array<Rational, 3>& x) {
    return x[1] * x[1] - Rational(2) * x[0] * x[2];
}

}  // namespace

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("STABKIT_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::optional<Rational> Wall::alpha_sq_at(const Rational& b) const {
    // A vertical wall line never crosses a vertical scan line above the
    // parabola.
    if (line.vertical) return std::nullopt;
    Rational xi = b + Rational(5, 4);
    Rational eta = line.slope * xi + line.intercept;
    Rational a2 = Rational(2) * eta - xi * xi;
    if (a2.sign() <= 0) return std::nullopt;
    return a2;
}

Wall numerical_wall_line(const ChernVector& target, const ChernVector& w) {
    ChernVector::require_same(target, w);
    VPoint vt = v_point(target), vw = v_point(w);
    XiLine line{};
    if (vt.finite && vw.finite) {
        if (vt.x == vw.x && vt.y == vw.y)
            throw std::domain_error("numerical_wall_line: no wall (proportional characters)");
        line = line_between(XiEta{vt.x, vt.y}, XiEta{vw.x, vw.y});
    } else if (vt.finite) {
        line = line_through_vpoint(XiEta{vt.x, vt.y}, vw);
    } else if (vw.finite) {
        line = line_through_vpoint(XiEta{vw.x, vw.y}, vt);
    } else {
        throw std::domain_error("numerical_wall_line: no wall (both characters have rank zero)");
    }
    if (!line.vertical) {
        Rational disc = line.slope * line.slope + Rational(2) * line.intercept;
        if (disc.sign() <= 0)
            throw std::domain_error("numerical_wall_line: no wall (line misses the region above the parabola)");
    }
    auto [e1, e2] = gamma_intersect_line(line);
    Wall wall{line, e1, e2, Rational(0), Rational(0), {}};
    return wall;
}

std::vector<Wall> destabilizer_search(const ChernVector& target, const Rational& beta, int bound,
                                      int threads) {
    if (bound < 0) throw std::invalid_argument("destabilizer_search: negative bound");
    if (target.X != Variety::proj(3))
        throw std::invalid_argument("destabilizer_search: expected a P^3 character");
    const auto tc = char_at(target, beta);
    std::optional<KClassC0> target_k;
    try {
        target_k = kclass_from_ch(target);
    } catch (const std::domain_error&) {
        target_k = std::nullopt;
    }
    if (bound == 0 || tc[1].sign() <= 0) return {};

    // Characters of the basis classes at this beta.
    std::array<std::array<Rational, 3>, 4> basis_char;
    for (int j = -1; j <= 2; ++j) basis_char[j + 1] = char_at(ch_clifford(j, 3), beta);

    struct Hit {
        Rational alpha_sq;
        DestabCandidate cand;
    };

    const int span = 2 * bound + 1;
    std::vector<std::vector<Hit>> partition_hits(span);
    std::atomic<int> next{0};

    auto run_partition = [&](int idx) {
        long cm1 = -bound + idx;
        auto& hits = partition_hits[idx];
        for (long c0 = -bound; c0 <= bound; ++c0)
            for (long c1 = -bound; c1 <= bound; ++c1)
                for (long c2 = -bound; c2 <= bound; ++c2) {
                    if (cm1 == 0 && c0 == 0 && c1 == 0 && c2 == 0) continue;
                    std::array<Rational, 3> wc{};
                    long coeffs[4] = {cm1, c0, c1, c2};
                    for (int k = 0; k < 4; ++k) {
                        if (coeffs[k] == 0) continue;
                        Rational f(coeffs[k]);
                        for (int i = 0; i < 3; ++i) wc[i] += f * basis_char[k][i];
                    }
                    // Heart interval: 0 < Im Z(w) < Im Z(target).
                    if (!(wc[1].sign() > 0 && wc[1] < tc[1])) continue;
                    // Equal tilt at some alpha^2 > 0:
                    //   c_w B - C b_w = alpha^2/2 (a_w B - A b_w).
                    Rational denom = wc[0] * tc[1] - tc[0] * wc[1];
                    if (denom.is_zero()) continue;
                    Rational alpha_sq = Rational(2) * (wc[2] * tc[1] - tc[2] * wc[1]) / denom;
                    if (alpha_sq.sign() <= 0) continue;
                    auto qc = sub3(tc, wc);
                    Rational dsub = disc3(wc), dquot = disc3(qc);
                    if (dsub.sign() < 0 || dquot.sign() < 0) continue;
                    // Canonical orientation: keep the representative whose
                    // character is lexicographically >= the quotient's, so
                    // each sub/quotient swap appears once.
                    if (cmp3(wc, qc) < 0) continue;
                    DestabCandidate cand;
                    cand.sub = KClassC0(Int(cm1), Int(c0), Int(c1), Int(c2));
                    cand.sub_char = wc;
                    cand.quot_char = qc;
                    if (target_k) cand.quot = *target_k - cand.sub;
                    cand.delta_sub = dsub;
                    cand.delta_quot = dquot;
                    std::ostringstream rep;
                    rep << "im=" << wc[1].str() << "/" << tc[1].str() << " alpha_sq=" << alpha_sq.str()
                        << " delta_sub=" << dsub.str() << " delta_quot=" << dquot.str();
                    cand.constraints_report = rep.str();
                    hits.push_back({alpha_sq, std::move(cand)});
                }
    };

    int nthreads = std::min(resolve_threads(threads), span);
    if (nthreads <= 1) {
        for (int i = 0; i < span; ++i) run_partition(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < span; i = next.fetch_add(1)) run_partition(i);
            });
        for (auto& th : pool) th.join();
    }

    // Merge in canonical (partition, enumeration) order and group into
    // walls keyed by the supporting line.
    std::map<LineKey, Wall> walls;
    for (int i = 0; i < span; ++i) {
        for (auto& hit : partition_hits[i]) {
            Wall skeleton = numerical_wall_line(target, ch_of(hit.cand.sub));
            LineKey key = key_of(skeleton.line);
            auto it = walls.find(key);
            if (it == walls.end()) {
                skeleton.beta = beta;
                skeleton.alpha_sq = hit.alpha_sq;
                it = walls.emplace(key, std::move(skeleton)).first;
            }
            it->second.realizers.push_back(std::move(hit.cand));
        }
    }

    std::vector<Wall> out;
    out.reserve(walls.size());
    for (auto& [key, wall] : walls) out.push_back(std::move(wall));
    std::sort(out.begin(), out.end(),
              [](const Wall& x, const Wall& y) { return x.alpha_sq < y.alpha_sq; });
    return out;
}

WallReport wall_scan(const ChernVector& target, const WallWindow& window, int bound, int threads) {
    WallReport report{target, window, bound, {}, {}};
    if (window.xi_min > window.xi_max || window.eta_min > window.eta_max) return report;
    std::map<LineKey, Wall> merged;
    // Quarter-integer xi grid across the window.
    Rational step(1, 4);
    Rational xi = Rational((window.xi_min / step).ceil()) * step;
    for (; xi <= window.xi_max; xi += step) {
        Rational beta = xi - Rational(5, 4);
        auto walls = destabilizer_search(target, beta, bound, threads);
        std::vector<Rational> cuts;
        for (auto& w : walls) {
            // Keep walls whose scan point lands inside the eta window.
            Rational eta = (w.alpha_sq + xi * xi) / Rational(2);
            if (eta < window.eta_min || eta > window.eta_max) continue;
            cuts.push_back(w.alpha_sq);
            LineKey key = key_of(w.line);
            auto it = merged.find(key);
            if (it == merged.end()) merged.emplace(key, std::move(w));
        }
        report.chambers.emplace_back(beta, std::move(cuts));
    }
    for (auto& [key, wall] : merged) report.walls.push_back(std::move(wall));
    return report;
}

namespace {

nlohmann::ordered_json int_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

nlohmann::ordered_json coeffs_json(const KClassC0& k) {
    return {int_json(k.c[0]), int_json(k.c[1]), int_json(k.c[2]), int_json(k.c[3])};
}

std::string coeffs_str(const KClassC0& k) {
    std::ostringstream os;
    os << k.c[0].get_str() << ":" << k.c[1].get_str() << ":" << k.c[2].get_str() << ":"
       << k.c[3].get_str();
    return os.str();
}

}  // namespace

std::string wall_report_csv(const WallReport& report) {
    std::ostringstream os;
    os << "beta,alpha_sq,sub_coeffs,quot_coeffs,delta_sub,delta_quot\n";
    for (const auto& wall : report.walls)
        for (const auto& r : wall.realizers)
            os << wall.beta.str() << "," << wall.alpha_sq.str() << "," << coeffs_str(r.sub) << ","
               << (r.quot ? coeffs_str(*r.quot) : "") << "," << r.delta_sub.str() << ","
               << r.delta_quot.str() << "\n";
    return os.str();
}

std::string wall_report_json(const WallReport& report) {
    nlohmann::ordered_json j;
    j["bound"] = report.bound;
    j["window"] = {{"xi_min", report.window.xi_min.str()},
                   {"xi_max", report.window.xi_max.str()},
                   {"eta_min", report.window.eta_min.str()},
                   {"eta_max", report.window.eta_max.str()}};
    j["walls"] = nlohmann::ordered_json::array();
    for (const auto& wall : report.walls) {
        nlohmann::ordered_json wj;
        if (wall.line.vertical) {
            wj["line"] = {{"vertical", true}, {"xi", wall.line.xi0.str()}};
        } else {
            wj["line"] = {{"vertical", false},
                          {"slope", wall.line.slope.str()},
                          {"intercept", wall.line.intercept.str()}};
        }
        wj["beta"] = wall.beta.str();
        wj["alpha_sq"] = wall.alpha_sq.str();
        wj["endpoints"] = {{"xi1", wall.e1.xi.str()},
                           {"eta1", wall.e1.eta.str()},
                           {"xi2", wall.e2.xi.str()},
                           {"eta2", wall.e2.eta.str()}};
        wj["realizers"] = nlohmann::ordered_json::array();
        for (const auto& r : wall.realizers) {
            nlohmann::ordered_json rj;
            rj["sub"] = {{"basis", "clifford"}, {"coeffs", coeffs_json(r.sub)}};
            if (r.quot)
                rj["quotient"] = {{"basis", "clifford"}, {"coeffs", coeffs_json(*r.quot)}};
            rj["sub_char"] = {r.sub_char[0].str(), r.sub_char[1].str(), r.sub_char[2].str()};
            rj["quot_char"] = {r.quot_char[0].str(), r.quot_char[1].str(), r.quot_char[2].str()};
            rj["delta_sub"] = r.delta_sub.str();
            rj["delta_quot"] = r.delta_quot.str();
            rj["constraints"] = r.constraints_report;
            wj["realizers"].push_back(std::move(rj));
        }
        j["walls"].push_back(std::move(wj));
    }
    nlohmann::ordered_json chambers = nlohmann::ordered_json::array();
    for (const auto& [beta, cuts] : report.chambers) {
        nlohmann::ordered_json cj;
        cj["beta"] = beta.str();
        cj["alpha_sq_walls"] = nlohmann::ordered_json::array();
        for (const auto& c : cuts) cj["alpha_sq_walls"].push_back(c.str());
        chambers.push_back(std::move(cj));
    }
    j["chambers"] = std::move(chambers);
    return j.dump(2) + "\n";
}

}  // namespace stabkit
