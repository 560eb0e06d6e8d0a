#include <stabkit/chow.hpp>

namespace stabkit {

ChernVector ch_line(int k, Variety X) {
    return {X, HSeries::exponential(Rational(k), X.dim)};
}

std::vector<int> clifford_weights(int j) {
    // C_{2q} = O(q) + O(q-1)^3 + O(q-2)^3 + O(q-3),
    // C_{2q+1} = O(q)^3 + O(q-1)^2 + O(q-2)^3.
    int q = j >= 0 ? j / 2 : -((-j + 1) / 2);  // floor(j/2)
    if (((j % 2) + 2) % 2 == 0) return {q, q - 1, q - 1, q - 1, q - 2, q - 2, q - 2, q - 3};
    return {q, q, q, q - 1, q - 1, q - 2, q - 2, q - 2};
}

ChernVector ch_clifford(int j, int m) {
    if (m != 2 && m != 3) throw std::invalid_argument("ch_clifford: m must be 2 or 3");
    Variety X = Variety::proj(m);
    HSeries s(m);
    for (int k : clifford_weights(j)) s = s + HSeries::exponential(Rational(k), m);
    return {X, s};
}

ChernVector todd(Variety X) {
    int d = X.dim;
    // (1 - exp(-t*h))/(t*h) has coefficients (-t)^k/(k+1)!.
    auto one_minus_exp_over = [&](long t) {
        HSeries s(d);
        Rational term(1);
        s[0] = term;
        for (int k = 1; k <= d; ++k) {
            term = term * Rational(-t) / Rational(k + 1);
            s[k] = term;
        }
        return s;
    };
    HSeries td_factor = one_minus_exp_over(1).inverse();  // h/(1-exp(-h))
    if (X.kind == VarietyKind::projective_space) return {X, td_factor.pow(d + 1)};
    // Cubic n-fold in P^{n+1}: td(T_{P^{n+2}}|_Y)/td(O_Y(3)).
    return {X, td_factor.pow(d + 2) * one_minus_exp_over(3)};
}

ChernVector mukai_dual(const ChernVector& v) {
    HSeries s = v.ch;
    for (int k = 1; k <= s.dim(); k += 2) s[k] = -s[k];
    return {v.X, s};
}

Rational euler_pairing(const ChernVector& vE, const ChernVector& vF) {
    ChernVector::require_same(vE, vF);
    return vE.X.integrate(mukai_dual(vE).ch * vF.ch * todd(vE.X).ch);
}

Int euler_pairing_int(const ChernVector& vE, const ChernVector& vF) {
    Rational chi = euler_pairing(vE, vF);
    if (!chi.is_integer())
        throw std::domain_error("euler_pairing: non-integer chi = " + chi.str() +
                                " for classes flagged as genuine K-classes");
    return chi.num();
}

Rational chi_line_pm(int k, int m) {
    return binomial(Rational(k + m), static_cast<unsigned>(m));
}

Rational euler_pairing_c0(int i, int j, int m) {
    Rational chi(0);
    for (int k : clifford_weights(j - i)) chi += chi_line_pm(k, m);
    return chi;
}

std::vector<Int> coh_split(const std::vector<int>& ks, int m) {
    std::vector<Int> h(m + 1, Int(0));
    for (int k : ks) {
        if (k >= 0)
            h[0] += binomial(Rational(k + m), static_cast<unsigned>(m)).num();
        else if (k <= -m - 1)
            h[m] += binomial(Rational(-k - 1), static_cast<unsigned>(m)).num();
    }
    return h;
}

namespace {

const Variety Y5 = Variety::cubic(5);

ChernVector ch_structure_hyperplane() {
    // 0 -> O(-H) -> O -> O_H -> 0
    return ch_line(0, Y5) - ch_line(-1, Y5);
}

}  // namespace

ChernVector ch_kappa1_y() {
    return {Y5, HSeries(5, {Rational(3), Rational(-1), Rational(-1, 2), Rational(1, 6),
                            Rational(1, 8), Rational(-13, 360)})};
}

ChernVector ch_kappa2_y() {
    return {Y5, HSeries(5, {Rational(0), Rational(1), Rational(-1, 2), Rational(-1, 6),
                            Rational(1, 8), Rational(13, 360)})};
}

ChernVector ch_plane_in_y() {
    // ch(O_Pi) = ch(O_H) - ch(kappa_2): the class of a plane inside Y.
    return ch_structure_hyperplane() - ch_kappa2_y();
}

ChernVector ch_ideal_plane(int twist) {
    ChernVector ideal = ch_line(0, Y5) - ch_plane_in_y();
    return {Y5, ideal.ch * HSeries::exponential(Rational(twist), 5)};
}

std::vector<ChernVector> y_integral_basis() {
    ChernVector oY = ch_line(0, Y5);
    ChernVector oH = ch_structure_hyperplane();
    ChernVector oH2{Y5, oH.ch * oH.ch};
    ChernVector oPi = ch_plane_in_y();
    // A line L in Y: ch(O_L) = L - P with L = H^4/3, P = H^5/3.
    ChernVector oL{Y5, HSeries(5, {Rational(0), Rational(0), Rational(0), Rational(0),
                                   Rational(1, 3), Rational(-1, 3)})};
    ChernVector oP{Y5, HSeries(5, {Rational(0), Rational(0), Rational(0), Rational(0),
                                   Rational(0), Rational(1, 3)})};
    return {oY, oH, oH2, oPi, oL, oP};
}

}  // namespace stabkit
