#pragma once

#include <stabkit/hseries.hpp>

#include <string>
#include <vector>

namespace stabkit {

enum class VarietyKind { projective_space, cubic_hypersurface };

/// Ambient variety for numerical Chern characters. Integration on P^m reads
/// off the coefficient of h^m; on a cubic n-fold the top power of the
/// hyperplane class is three times the point class, so integration reads
/// off three times the coefficient of H^n.
struct Variety {
    VarietyKind kind;
    int dim;

    static Variety proj(int m) { return {VarietyKind::projective_space, m}; }
    static Variety cubic(int n) { return {VarietyKind::cubic_hypersurface, n}; }

    Rational integrate(const HSeries& s) const {
        Rational top = s[dim];
        return kind == VarietyKind::cubic_hypersurface ? Rational(3) * top : top;
    }

    friend bool operator==(const Variety& a, const Variety& b) {
        return a.kind == b.kind && a.dim == b.dim;
    }
    friend bool operator!=(const Variety& a, const Variety& b) { return !(a == b); }

    std::string name() const {
        return (kind == VarietyKind::projective_space ? "P" : "Y") + std::to_string(dim);
    }
};

/// Numerical Chern character of a class on X.
struct ChernVector {
    Variety X;
    HSeries ch;

    ChernVector(Variety v, HSeries s) : X(v), ch(std::move(s)) {
        if (ch.dim() != X.dim) throw std::invalid_argument("ChernVector: series degree != dim X");
    }

    const Rational& operator[](int k) const { return ch[k]; }
    friend bool operator==(const ChernVector& a, const ChernVector& b) {
        return a.X == b.X && a.ch == b.ch;
    }
    friend bool operator!=(const ChernVector& a, const ChernVector& b) { return !(a == b); }

    ChernVector operator-() const { return {X, -ch}; }
    friend ChernVector operator+(const ChernVector& a, const ChernVector& b) {
        require_same(a, b);
        return {a.X, a.ch + b.ch};
    }
    friend ChernVector operator-(const ChernVector& a, const ChernVector& b) {
        require_same(a, b);
        return {a.X, a.ch - b.ch};
    }
    friend ChernVector operator*(const Rational& s, const ChernVector& a) { return {a.X, s * a.ch}; }

    static void require_same(const ChernVector& a, const ChernVector& b) {
        if (a.X != b.X) throw std::invalid_argument("ChernVector: variety mismatch");
    }
};

/// ch of O_X(k) = exp(k h) truncated at dim X.
ChernVector ch_line(int k, Variety X);

/// The eight line-bundle twists splitting the rank-8 sheaf C_j.
std::vector<int> clifford_weights(int j);

/// ch of the Clifford sheaf C_j on P^m, m in {2,3}.
ChernVector ch_clifford(int j, int m);

/// Exact Todd class of P^m or of a cubic hypersurface.
ChernVector todd(Variety X);

/// Dual character: coefficient of h^k multiplied by (-1)^k.
ChernVector mukai_dual(const ChernVector& v);

/// Euler pairing chi(E,F) = integral of ch(E)^dual * ch(F) * td(X).
Rational euler_pairing(const ChernVector& vE, const ChernVector& vF);

/// Same, with an integrality assertion for genuine K-classes.
Int euler_pairing_int(const ChernVector& vE, const ChernVector& vF);

/// chi(P^m, O(k)) = binomial(k+m, m).
Rational chi_line_pm(int k, int m);

/// chi_{C_0}(C_i, C_j) = chi(P^m, C_{j-i}).
Rational euler_pairing_c0(int i, int j, int m);

/// h^0..h^m of a direct sum of line bundles O(k), k in ks, on P^m.
std::vector<Int> coh_split(const std::vector<int>& ks, int m);

// Fixed classes on the cubic 5-fold Y.
ChernVector ch_kappa1_y();        // 3 - H - H^2/2 + H^3/6 + H^4/8 - 13/360 H^5
ChernVector ch_kappa2_y();        // H - H^2/2 - H^3/6 + H^4/8 + 13/360 H^5
ChernVector ch_plane_in_y();      // ch of the structure sheaf of a plane
ChernVector ch_ideal_plane(int twist);  // ch of I_Pi(twist)

/// The integral basis {O_Y, O_H, O_{H^2}, O_Pi, O_L, O_P} as Chern vectors.
std::vector<ChernVector> y_integral_basis();

}  // namespace stabkit
