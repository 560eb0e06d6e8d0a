#pragma once

#include <stabkit/angle.hpp>
#include <stabkit/knum.hpp>
#include <stabkit/tilt.hpp>

#include <array>

namespace stabkit {

/// 2x2 matrix over a quadratic extension; column-vector convention.
struct Mat2 {
    QuadExt m[2][2];

    static Mat2 identity() {
        Mat2 r;
        r.m[0][0] = QuadExt(Rational(1));
        r.m[1][1] = QuadExt(Rational(1));
        return r;
    }
    static Mat2 diag(QuadExt d0, QuadExt d1) {
        Mat2 r;
        r.m[0][0] = std::move(d0);
        r.m[1][1] = std::move(d1);
        return r;
    }
    static Mat2 of(QuadExt a, QuadExt b, QuadExt c, QuadExt d) {
        Mat2 r;
        r.m[0][0] = std::move(a);
        r.m[0][1] = std::move(b);
        r.m[1][0] = std::move(c);
        r.m[1][1] = std::move(d);
        return r;
    }

    QuadExt det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    QuadExt trace() const { return m[0][0] + m[1][1]; }

    Mat2 inverse() const {
        QuadExt d = det();
        if (d.is_zero()) throw std::domain_error("Mat2: singular matrix");
        return of(m[1][1] / d, -m[0][1] / d, -m[1][0] / d, m[0][0] / d);
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
        return r;
    }

    std::array<QuadExt, 2> apply(const QuadExt& x, const QuadExt& y) const {
        return {m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y};
    }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (x.m[i][j] != y.m[i][j]) return false;
        return true;
    }
};

/// Central charge as a matrix sending kappabar-coordinates (a,b) to
/// (Re Z, Im Z); columns are the charges of the two basis classes.
struct ChargeMatrix {
    Mat2 z;

    std::array<QuadExt, 2> charge(const KClassKu& v) const {
        return z.apply(QuadExt(Rational(v.a)), QuadExt(Rational(v.b)));
    }
    Angle charge_angle(const KClassKu& v) const {
        auto c = charge(v);
        return Angle(c[0], c[1]);
    }
};

/// Element (M, branch) of the universal cover of GL2+: M acts on charges,
/// the integer branch fixes the lift of the induced map on phases, with
/// g(0) in (branch-1, branch+1].
struct GLTilde {
    Mat2 M;
    int branch = 0;
};

/// Rank-2 lattice matrices (column-coordinate action). The Serre matrix
/// has order 6 and is also the kappabar-side rotation action; the second
/// matrix is the rotation action in the Y-side kappa basis, order 3.
Mat2 serre_matrix_k();     // kappa_1 -> kappa_2, kappa_2 -> kappa_2 - kappa_1
Mat2 rotation_matrix_k();  // kappa_1 -> kappa_2 - kappa_1, kappa_2 -> -kappa_1

/// Second-tilt charge matrix at p, columns z0(kappabar_1), z0(kappabar_2);
/// the determinant is checked against 16 alpha^2 + 16 (beta+5/4)^2 + 7.
ChargeMatrix charge_matrix(const TiltParam& p);

/// Closed form of det(charge_matrix).
Rational charge_matrix_det(const TiltParam& p);

/// The unique M with M^{-1} Z0 = Z0 O^{-1}_* on the lattice; det M > 0.
Mat2 serre_inv_matrix(const TiltParam& p);

/// Rescaling of Z0 at beta = -5/4 onto the standard hexagonal lattice:
/// diag(4, (16 alpha^2 + 7) / (2 sqrt 3)), with the branch normalized so
/// the lift maps (0,1] into (0,2].
GLTilde hex_normalizer(const TiltParam& p);

/// True iff Z S_* = R(pi/3) Z exactly over Q(sqrt 3).
bool gepner_rotation_check(const ChargeMatrix& zm);

/// Rotation by pi/3 over Q(sqrt 3).
Mat2 rotation_pi_3();

struct PhaseJumpResult {
    Rational fractional;  // always 1/3, asserted exactly
    int branch_k;         // 1 under the canonical Serre lift: jump 7/3
};

/// Exact argument jump of the Serre action on charges: asserts that
/// Z(S v) = R(pi/3) Z(v) up to positive scale, reports the fractional
/// jump 1/3 and the branch contribution of the canonical lift.
PhaseJumpResult phase_jump(const ChargeMatrix& zm, const KClassKu& v);

/// Right action (M,g) . Z = M^{-1} Z; branches compose additively.
ChargeMatrix gl_act(const GLTilde& gt, const ChargeMatrix& zm);
GLTilde gl_compose(const GLTilde& g, const GLTilde& h);
GLTilde gl_inverse(const GLTilde& g);

/// The lifted phase map g of a cover element, evaluated exactly: the ray
/// of the input phase is pushed through M, the winding is tracked by
/// comparing against the image of the reference ray, and the branch pins
/// g(0) inside (branch-1, branch+1]. Satisfies g(phi+1) = g(phi)+1 and is
/// increasing; M applied to a ray of phase phi points along phase g(phi).
Phase gl_lift(const GLTilde& gt, const Phase& phi);

/// Explicit shear in GL2+ over Q(sqrt 3) taking the hexagonal charge
/// lattice Z*(-1,0) + Z*(-1/2, sqrt3/2) onto the standard square lattice.
GLTilde square_lattice_shear();

/// Charge-level bookkeeping for the sheared stability data: the Serre
/// action on directions advances every ray by at most half a turn and
/// never retreats, keeping the lifted jump within [2, 5/2]. Checked as
/// positive-semidefiniteness of two quadratic forms.
bool shear_keeps_gldim_bound(const GLTilde& shear, const ChargeMatrix& hex_charge);

}  // namespace stabkit
