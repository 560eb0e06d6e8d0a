#include <stabkit/knum.hpp>

#include <algorithm>
#include <sstream>

namespace stabkit {

std::string KClassC0::str() const {
    std::ostringstream os;
    os << "(" << c[0].get_str() << "," << c[1].get_str() << "," << c[2].get_str() << ","
       << c[3].get_str() << ")";
    return os.str();
}

ChernVector ch_of(const KClassC0& v, int m) {
    HSeries s(m);
    for (int j = -1; j <= 2; ++j) s = s + Rational(v.coeff(j)) * ch_clifford(j, m).ch;
    return {Variety::proj(m), s};
}

namespace {

// Solves the 4x4 rational system expressing a dim-3 series in the
// characters of C_-1..C_2 by Gaussian elimination.
std::array<Rational, 4> solve_basis_coords(const HSeries& s) {
    if (s.dim() != 3) throw std::invalid_argument("kclass_from_ch: need a P^3 character");
    Rational m[4][5];
    for (int row = 0; row < 4; ++row) {
        for (int j = -1; j <= 2; ++j) m[row][j + 1] = ch_clifford(j, 3).ch[row];
        m[row][4] = s[row];
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row)
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::domain_error("kclass_from_ch: singular basis matrix");
        for (int k = 0; k < 5; ++k) std::swap(m[col][k], m[pivot][k]);
        for (int row = 0; row < 4; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational f = m[row][col] / m[col][col];
            for (int k = col; k < 5; ++k) m[row][k] -= f * m[col][k];
        }
    }
    std::array<Rational, 4> x;
    for (int i = 0; i < 4; ++i) x[i] = m[i][4] / m[i][i];
    return x;
}

}  // namespace

KClassC0 kclass_from_ch(const ChernVector& v) {
    if (v.X != Variety::proj(3)) throw std::invalid_argument("kclass_from_ch: expected P^3 side");
    auto x = solve_basis_coords(v.ch);
    KClassC0 out;
    for (int i = 0; i < 4; ++i) {
        if (!x[i].is_integer())
            throw std::domain_error("kclass_from_ch: non-integral coordinate " + x[i].str() +
                                    " (lattice violation)");
        out.c[i] = x[i].num();
    }
    return out;
}

std::vector<std::vector<Rational>> gram_clifford(int m) {
    int lo = (m == 3) ? -1 : 0;
    int n = (m == 3) ? 4 : 3;
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = euler_pairing_c0(lo + i, lo + j, m);
    return g;
}

Rational gram_determinant(const std::vector<std::vector<Rational>>& g) {
    auto m = g;
    size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Rational f = m[row][col] / m[col][col];
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

Int chi_c0(const KClassC0& u, const KClassC0& w) {
    Rational chi(0);
    for (int i = -1; i <= 2; ++i) {
        if (u.coeff(i) == 0) continue;
        for (int j = -1; j <= 2; ++j) {
            if (w.coeff(j) == 0) continue;
            chi += Rational(u.coeff(i)) * Rational(w.coeff(j)) * euler_pairing_c0(i, j, 3);
        }
    }
    return chi.num();
}

KClassC0 twist_c0(const KClassC0& v, int k) {
    ChernVector vc = ch_of(v);
    HSeries twisted = vc.ch * HSeries::exponential(Rational(k, 2), 3);
    return kclass_from_ch({Variety::proj(3), twisted});
}

KClassC0 serre_db_c0(const KClassC0& v) { return -twist_c0(v, -2); }

KClassC0 kubar1() { return {0, 1, -3, 1}; }
KClassC0 kubar2() { return {-1, 4, -4, 1}; }

bool in_kubar_span(const KClassC0& v) {
    // a*kubar1 + b*kubar2 has C_{-1}-coefficient -b and C_0-coefficient a+4b.
    Int b = -v.c[0];
    Int a = v.c[1] - 4 * b;
    return from_kubar({a, b}) == v;
}

KClassKu kubar_coords(const KClassC0& v) {
    Int b = -v.c[0];
    Int a = v.c[1] - 4 * b;
    KClassKu k{a, b};
    if (from_kubar(k) != v)
        throw std::domain_error("kubar_coords: " + v.str() + " is outside the Kuznetsov lattice");
    return k;
}

KClassC0 from_kubar(const KClassKu& v) { return v.a * kubar1() + v.b * kubar2(); }

KClassC0 rotation_ku_c0(const KClassC0& v) {
    if (!in_kubar_span(v))
        throw std::domain_error("rotation_ku_c0: " + v.str() + " is outside the Kuznetsov lattice");
    KClassC0 t = twist_c0(v, 1);
    Int coef = chi_c0(KClassC0(0, 0, 1, 0), t);
    return t - coef * KClassC0(0, 0, 1, 0);
}

ExceptionalRecord::ExceptionalRecord(std::string l, ChernVector c) : label(std::move(l)), ch(std::move(c)) {
    if (euler_pairing(ch, ch) != Rational(1))
        throw std::domain_error("ExceptionalRecord '" + label + "': chi(E,E) != 1");
}

ChernVector mutate_left_k(const ExceptionalRecord& e, const ChernVector& f) {
    ChernVector::require_same(e.ch, f);
    return f - (euler_pairing(e.ch, f) * e.ch);
}

ChernVector mutate_right_k(const ExceptionalRecord& e, const ChernVector& f) {
    ChernVector::require_same(e.ch, f);
    return f - (euler_pairing(f, e.ch) * e.ch);
}

KClassKu project_ku_y(const ChernVector& f) {
    Variety Y = Variety::cubic(5);
    if (f.X != Y) throw std::invalid_argument("project_ku_y: expected a class on the cubic 5-fold");
    ExceptionalRecord o1("O(1)", ch_line(1, Y)), o0("O", ch_line(0, Y));
    ExceptionalRecord om2("O(-2)", ch_line(-2, Y)), om1("O(-1)", ch_line(-1, Y));
    ChernVector r = mutate_right_k(om1, mutate_right_k(om2, mutate_left_k(o0, mutate_left_k(o1, f))));
    // Solve r = a*kappa_1 + b*kappa_2 from the H^0 and H^1 coefficients,
    // then require the remaining coefficients to match.
    ChernVector k1 = ch_kappa1_y(), k2 = ch_kappa2_y();
    Rational a = r.ch[0] / Rational(3);
    Rational b = r.ch[1] + a;
    ChernVector expect = a * k1 + b * k2;
    if (expect.ch != r.ch)
        throw std::domain_error("project_ku_y: residual class not in the Kuznetsov component lattice");
    if (!a.is_integer() || !b.is_integer())
        throw std::domain_error("project_ku_y: non-integral Kuznetsov coordinates");
    return {a.num(), b.num()};
}

Int chi_ku(const KClassKu& u, const KClassKu& w) { return -(u.a * w.a + u.a * w.b + u.b * w.b); }

KClassKu serre_ku(const KClassKu& v) { return {-v.b, v.a + v.b}; }

KClassKu rotation_ku(const KClassKu& v) { return {-v.a - v.b, v.a}; }

Int norm_form(const KClassKu& v) { return v.a * v.a + v.a * v.b + v.b * v.b; }

std::vector<KClassKu> serre_orbit(const KClassKu& v) {
    if (v.is_zero()) throw std::domain_error("serre_orbit: zero class");
    std::vector<KClassKu> orbit;
    KClassKu w = v;
    for (int i = 0; i < 12; ++i) {
        if (std::find(orbit.begin(), orbit.end(), w) != orbit.end()) {
            if (i > 6) throw std::logic_error("serre_orbit: matrix order exceeded 6");
            return orbit;
        }
        orbit.push_back(w);
        w = serre_ku(w);
    }
    throw std::logic_error("serre_orbit: did not close after 12 iterations");
}

bool is_primitive(const KClassKu& v) {
    if (v.is_zero()) return false;
    Int g = gcd(v.a, v.b);
    return g == 1;
}

namespace {

Int norm2(const KClassKu& v) { return v.a * v.a + v.b * v.b; }

Int wedge(const KClassKu& u, const KClassKu& w) { return u.a * w.b - u.b * w.a; }

}  // namespace

std::pair<KClassKu, KClassKu> pick_decompose(const KClassKu& v) {
    if (!is_primitive(v)) {
        Int g = v.is_zero() ? Int(0) : gcd(v.a, v.b);
        throw std::domain_error("pick_decompose: not primitive (gcd " + g.get_str() + ")");
    }
    Int n2 = norm2(v);
    if (n2 < 2) throw std::domain_error("pick_decompose: |v| too small to decompose");
    // wedge(v_-, v_+) = wedge(v_-, v) = 1 is linear, so every candidate
    // v_- sits on the line m0 + t v with m0 a particular solution of
    // x v.b - y v.a = 1. The length constraint |m0 + t v| < |v| confines t
    // to a window of width < 2 around -<m0,v>/|v|^2; the admissible pair
    // is unique and uniqueness is checked, not assumed.
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v.b.get_mpz_t(), v.a.get_mpz_t());
    if (g != 1) throw std::logic_error("pick_decompose: gcd recheck failed");
    KClassKu m0{s, -t};  // m0.a v.b - m0.b v.a = 1
    Int dot0 = m0.a * v.a + m0.b * v.b;
    Int tmid;
    mpz_fdiv_q(tmid.get_mpz_t(), Int(-dot0).get_mpz_t(), n2.get_mpz_t());
    std::vector<std::pair<KClassKu, KClassKu>> found;
    for (Int tt = tmid - 2; tt <= tmid + 2; tt += 1) {
        KClassKu minus{m0.a + tt * v.a, m0.b + tt * v.b};
        if (minus.is_zero() || norm2(minus) >= n2) continue;
        KClassKu plus = v - minus;
        if (plus.is_zero() || norm2(plus) >= n2) continue;
        if (wedge(minus, plus) != 1) throw std::logic_error("pick_decompose: wedge drifted");
        found.emplace_back(minus, plus);
    }
    if (found.empty()) throw std::logic_error("pick_decompose: no admissible pair (contradicts Pick)");
    if (found.size() > 1) throw std::logic_error("pick_decompose: admissible pair not unique");
    return found.front();
}

std::string NonemptyNode::orbit_tag() const {
    if (!leaf()) return "";
    Int n = norm_form(v);
    if (n == 1) return "kappa2-orbit";
    if (n == 3) return "kappa1+kappa2-orbit";
    return "unclassified";
}

std::unique_ptr<NonemptyNode> nonempty_tree(const KClassKu& v) {
    if (!is_primitive(v)) throw std::domain_error("nonempty_tree: class must be primitive and nonzero");
    auto node = std::make_unique<NonemptyNode>();
    node->v = v;
    Int n = norm_form(v);
    if (n <= 3) {
        if (n != 1 && n != 3) throw std::logic_error("nonempty_tree: base norm form must be 1 or 3");
        return node;
    }
    auto [minus, plus] = pick_decompose(v);
    node->chi_plus_minus = chi_ku(plus, minus);
    if (node->chi_plus_minus >= 0)
        throw std::logic_error("nonempty_tree: chi(v_+, v_-) = " + node->chi_plus_minus.get_str() +
                               " is not negative at " + v.str());
    node->minus = nonempty_tree(minus);
    node->plus = nonempty_tree(plus);
    return node;
}

}  // namespace stabkit
