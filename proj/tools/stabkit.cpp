#include <stabkit/charspec.hpp>
#include <stabkit/serre.hpp>
#include <stabkit/svg.hpp>
#include <stabkit/verify.hpp>
#include <stabkit/walls.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace stabkit;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::map<std::string, std::string> load_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    if (path.empty()) return kv;
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

WallWindow parse_window(const std::string& s) {
    std::istringstream is(s);
    std::string part;
    std::vector<Rational> vals;
    while (std::getline(is, part, ',')) vals.push_back(Rational::parse(part));
    if (vals.size() != 4)
        throw CLI::ValidationError("--window", "expected xi_min,xi_max,eta_min,eta_max");
    return {vals[0], vals[1], vals[2], vals[3]};
}

std::string maybe_float(const Rational& r, bool with_float) {
    return with_float ? r.str() + " (" + r.decimal(12) + ")" : r.str();
}

int cmd_pair(const std::string& basis, bool as_json, const std::string& out) {
    std::vector<std::vector<Rational>> g;
    std::string note;
    if (basis == "clifford3") {
        g = gram_clifford(3);
    } else if (basis == "clifford2") {
        g = gram_clifford(2);
    } else if (basis == "kappaY") {
        ChernVector k1 = ch_kappa1_y(), k2 = ch_kappa2_y();
        g = {{euler_pairing(k1, k1), euler_pairing(k1, k2)},
             {euler_pairing(k2, k1), euler_pairing(k2, k2)}};
    } else if (basis == "kappabar") {
        KClassC0 b1 = kubar1(), b2 = kubar2();
        g = {{Rational(chi_c0(b1, b1)), Rational(chi_c0(b1, b2))},
             {Rational(chi_c0(b2, b1)), Rational(chi_c0(b2, b2))}};
    } else {
        throw CLI::ValidationError("--basis", "unknown basis '" + basis + "'");
    }
    Rational det = gram_determinant(g);
    std::ostringstream text;
    for (const auto& row : g) {
        for (size_t j = 0; j < row.size(); ++j) text << (j ? " " : "") << row[j].str();
        text << "\n";
    }
    text << "det = " << det.str();
    if (det.abs() == Rational(1)) text << " (unimodular)";
    text << "\n";

    nlohmann::ordered_json j;
    j["basis"] = basis;
    j["matrix"] = nlohmann::ordered_json::array();
    for (const auto& row : g) {
        nlohmann::ordered_json rj = nlohmann::ordered_json::array();
        for (const auto& x : row) rj.push_back(x.str());
        j["matrix"].push_back(rj);
    }
    j["det"] = det.str();
    j["unimodular"] = det.abs() == Rational(1);

    std::string payload = as_json ? j.dump(2) + "\n" : text.str();
    if (out.empty())
        std::cout << payload;
    else
        write_file(out, payload);
    return kExitOk;
}

int cmd_walls(const std::string& charspec, const std::string& beta_s, int bound,
              const std::string& window_s, const std::string& out, bool as_json, bool with_float,
              int threads) {
    ResolvedCharacter target = resolve_character(charspec);
    Rational beta = Rational::parse(beta_s);

    Rational xi = beta + Rational(5, 4);
    WallReport report{target.ch, {xi, xi, Rational(0), Rational(0)}, bound, {}, {}};
    if (!window_s.empty()) {
        report = wall_scan(target.ch, parse_window(window_s), bound, threads);
    } else {
        report.walls = destabilizer_search(target.ch, beta, bound, threads);
        std::vector<Rational> cuts;
        for (const auto& w : report.walls) cuts.push_back(w.alpha_sq);
        report.chambers.emplace_back(beta, cuts);
    }

    std::string csv = wall_report_csv(report);
    std::string json = wall_report_json(report);
    if (!out.empty()) {
        write_file(out + ".csv", csv);
        write_file(out + ".json", json);
        XiEtaPlotOptions opt;
        opt.points = {resolve_builtin("C0"), resolve_builtin("C1")};
        opt.walls = report.walls;
        write_file(out + ".svg", plot_xieta(opt));
    }
    if (as_json) {
        std::cout << json;
    } else {
        std::cout << "character " << target.name << ", beta = " << beta.str() << ", bound " << bound
                  << ": " << report.walls.size() << " wall(s)\n";
        for (const auto& w : report.walls) {
            std::cout << "  alpha_sq = " << maybe_float(w.alpha_sq, with_float) << ", "
                      << w.realizers.size() << " realizer(s)";
            if (!w.realizers.empty()) {
                const auto& r = w.realizers.front();
                std::cout << ", factors (" << r.sub_char[0].str() << "," << r.sub_char[1].str()
                          << "," << r.sub_char[2].str() << ") / (" << r.quot_char[0].str() << ","
                          << r.quot_char[1].str() << "," << r.quot_char[2].str() << ")";
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_plot(const std::string& figure, const std::string& points_s, const std::string& ray,
             const std::string& window_s, const std::string& out) {
    bool ray_ell0 = false;
    if (!ray.empty()) {
        if (ray != "ell0") throw CLI::ValidationError("--ray", "unknown ray '" + ray + "'");
        ray_ell0 = true;
    }
    std::string svg;
    if (figure == "hexagon") {
        svg = plot_hexagon();
    } else if (figure == "xieta") {
        XiEtaPlotOptions opt;
        opt.ell0 = ray_ell0;
        if (!window_s.empty()) {
            WallWindow w = parse_window(window_s);
            opt.xi_min = w.xi_min;
            opt.xi_max = w.xi_max;
            opt.eta_min = w.eta_min;
            opt.eta_max = w.eta_max;
        }
        if (!points_s.empty()) {
            std::istringstream is(points_s);
            std::string name;
            while (std::getline(is, name, ',')) opt.points.push_back(resolve_character(name));
        }
        svg = plot_xieta(opt);
    } else {
        throw CLI::ValidationError("plot", "unknown figure '" + figure + "'");
    }
    if (out.empty())
        std::cout << svg;
    else
        write_file(out, svg);
    return kExitOk;
}

int cmd_verify(const std::string& out, int threads) {
    VerifyReport report = run_verify(threads);
    std::cout << verify_report_text(report);
    write_file(out.empty() ? "stabkit_verify.json" : out, verify_report_json(report));
    return report.failures() == 0 ? kExitOk : kExitCheckFailures;
}

int cmd_pick(long a, long b, bool as_json) {
    KClassKu v{Int(a), Int(b)};
    if (!is_primitive(v)) {
        Int g = v.is_zero() ? Int(0) : gcd(v.a, v.b);
        throw CLI::ValidationError("pick", "not primitive (gcd " + g.get_str() + ")");
    }
    auto tree = nonempty_tree(v);

    std::function<void(const NonemptyNode&, int)> print_text = [&](const NonemptyNode& n, int depth) {
        std::cout << std::string(2 * depth, ' ') << n.v.str() << " norm_form=" << norm_form(n.v).get_str();
        if (n.leaf())
            std::cout << " leaf [" << n.orbit_tag() << "]\n";
        else {
            std::cout << " chi(v+,v-)=" << n.chi_plus_minus.get_str() << "\n";
            print_text(*n.minus, depth + 1);
            print_text(*n.plus, depth + 1);
        }
    };
    std::function<nlohmann::ordered_json(const NonemptyNode&)> to_json =
        [&](const NonemptyNode& n) -> nlohmann::ordered_json {
        nlohmann::ordered_json j;
        j["v"] = {{"basis", "kappa"}, {"coeffs", {n.v.a.get_si(), n.v.b.get_si()}}};
        j["norm_form"] = norm_form(n.v).get_si();
        if (n.leaf()) {
            j["leaf"] = true;
            j["orbit"] = n.orbit_tag();
        } else {
            j["leaf"] = false;
            j["chi_plus_minus"] = n.chi_plus_minus.get_si();
            j["minus"] = to_json(*n.minus);
            j["plus"] = to_json(*n.plus);
        }
        return j;
    };

    if (as_json)
        std::cout << to_json(*tree).dump(2) << "\n";
    else
        print_text(*tree, 0);
    return kExitOk;
}

int cmd_char(const std::string& charspec) {
    std::cout << character_json(resolve_character(charspec));
    return kExitOk;
}

int cmd_tilt(const std::string& charspec, const std::string& alpha_sq_s, const std::string& beta_s,
             bool with_float) {
    ResolvedCharacter rc = resolve_character(charspec);
    if (rc.ch.X != Variety::proj(3))
        throw CLI::ValidationError("--char", "tilt data requires a P3-side character");
    TiltParam p{Rational::parse(alpha_sq_s), Rational::parse(beta_s)};
    auto [re, im] = z_tilt(rc.ch, p);
    auto [re0, im0] = z0(rc.ch, p);
    ExtRat slope = nu(rc.ch, p);
    std::cout << "character " << rc.name << " at alpha_sq=" << p.alpha_sq.str()
              << " beta=" << p.beta.str() << "\n";
    std::cout << "  Z      = (" << maybe_float(re, with_float) << ", " << maybe_float(im, with_float)
              << ")\n";
    std::cout << "  Z0     = (" << maybe_float(re0, with_float) << ", "
              << maybe_float(im0, with_float) << ")\n";
    std::cout << "  nu     = " << slope.str() << "\n";
    std::cout << "  delta  = " << maybe_float(delta_c0(rc.ch), with_float) << "\n";
    VPoint vp = v_point(rc.ch);
    if (vp.finite)
        std::cout << "  vpoint = (" << vp.x.str() << ", " << vp.y.str() << ")\n";
    else
        std::cout << "  vpoint = infinite, " << (vp.vertical ? "vertical" : "slope " + vp.slope.str())
                  << "\n";
    std::cout << "  in V   = " << (in_region_v(p) ? "yes" : "no") << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for lattice and tilt-stability computations on the "
                 "Kuznetsov component of a cubic 5-fold"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value config file (bound, window)");

    // pair
    auto* pair = app.add_subcommand("pair", "print a Gram matrix of Euler pairings");
    std::string basis = "clifford3";
    bool pair_json = false;
    std::string pair_out;
    pair->add_option("--basis", basis, "clifford3|clifford2|kappaY|kappabar");
    pair->add_flag("--json", pair_json, "emit JSON");
    pair->add_option("--out", pair_out, "write to file instead of stdout");

    // walls
    auto* walls = app.add_subcommand("walls", "numerical wall search for a character");
    std::string wchar, wbeta = "-5/4", wwindow, wout;
    int wbound = 5;
    bool wjson = false, wfloat = false;
    int wthreads = 0;
    bool wbound_set = false, wwindow_set = false;
    walls->add_option("--char", wchar, "character spec (builtin name or JSON)")->required();
    walls->add_option("--beta", wbeta, "scan line beta (rational)");
    walls->add_option("--bound", wbound, "coefficient bound for the brute-force scan")
        ->each([&](const std::string&) { wbound_set = true; });
    walls->add_option("--window", wwindow, "xi_min,xi_max,eta_min,eta_max scan window")
        ->each([&](const std::string&) { wwindow_set = true; });
    walls->add_option("--out", wout, "output prefix for .csv/.json/.svg");
    walls->add_flag("--json", wjson, "print JSON report to stdout");
    walls->add_flag("--float", wfloat, "add decimal renderings next to exact fractions");
    walls->add_option("--threads", wthreads, "worker threads (0 = STABKIT_THREADS or auto)");

    // plot
    auto* plot = app.add_subcommand("plot", "deterministic SVG figures");
    std::string figure, ppoints, pwindow, pout, pray;
    plot->add_option("figure", figure, "hexagon|xieta")->required();
    plot->add_option("--points", ppoints, "comma-separated characters to mark");
    plot->add_option("--ray", pray, "named ray to draw (ell0)");
    plot->add_option("--window", pwindow, "xi_min,xi_max,eta_min,eta_max");
    plot->add_option("--out", pout, "output SVG path (stdout when omitted)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the full exact verification suite");
    std::string vout;
    int vthreads = 0;
    verify->add_option("--out", vout, "JSON report path (default stabkit_verify.json)");
    verify->add_option("--threads", vthreads, "worker threads (0 = STABKIT_THREADS or auto)");

    // pick
    auto* pick = app.add_subcommand("pick", "lattice-vector decomposition tree");
    long pa = 0, pb = 0;
    bool pick_json = false;
    pick->add_option("a", pa, "first coordinate")->required();
    pick->add_option("b", pb, "second coordinate")->required();
    pick->add_flag("--json", pick_json, "emit JSON");

    // char
    auto* chr = app.add_subcommand("char", "resolve and print a character");
    std::string cchar;
    chr->add_option("--char", cchar, "character spec")->required();

    // tilt
    auto* tilt = app.add_subcommand("tilt", "charge, slope and plane data of a character");
    std::string tchar, talpha = "1/100", tbeta = "-5/4";
    bool tfloat = false;
    tilt->add_option("--char", tchar, "character spec")->required();
    tilt->add_option("--alpha-sq", talpha, "alpha^2 (positive rational)");
    tilt->add_option("--beta", tbeta, "beta (rational)");
    tilt->add_flag("--float", tfloat, "add decimal renderings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        auto config = load_config(config_path);
        if (config.count("bound") && !wbound_set) wbound = std::stoi(config["bound"]);
        if (config.count("window")) {
            if (!wwindow_set && wwindow.empty()) wwindow = config["window"];
            if (pwindow.empty()) pwindow = config["window"];
        }

        if (*pair) return cmd_pair(basis, pair_json, pair_out);
        if (*walls)
            return cmd_walls(wchar, wbeta, wbound, wwindow, wout, wjson, wfloat, wthreads);
        if (*plot) return cmd_plot(figure, ppoints, pray, pwindow, pout);
        if (*verify) return cmd_verify(vout, vthreads);
        if (*pick) return cmd_pick(pa, pb, pick_json);
        if (*chr) return cmd_char(cchar);
        if (*tilt) return cmd_tilt(tchar, talpha, tbeta, tfloat);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailures;
    }
    return kExitUsage;
}
