#pragma once

#include <stabkit/angle.hpp>
#include <stabkit/chow.hpp>

#include <array>
#include <utility>

namespace stabkit {

/// Rational extended by +infinity (slopes of rank-zero classes).
struct ExtRat {
    bool infinite = false;
    Rational value;

    static ExtRat inf() { return {true, Rational(0)}; }
    static ExtRat of(Rational r) { return {false, std::move(r)}; }

    friend bool operator==(const ExtRat& x, const ExtRat& y) {
        return x.infinite == y.infinite && (x.infinite || x.value == y.value);
    }
    friend bool operator<(const ExtRat& x, const ExtRat& y) {
        if (x.infinite) return false;
        if (y.infinite) return true;
        return x.value < y.value;
    }
    friend bool operator<=(const ExtRat& x, const ExtRat& y) { return x < y || x == y; }
    std::string str() const { return infinite ? "inf" : value.str(); }
};

/// Tilt-stability parameter; alpha enters only through alpha^2 so every
/// charge value stays rational.
struct TiltParam {
    Rational alpha_sq;
    Rational beta;

    TiltParam(Rational a2, Rational b) : alpha_sq(std::move(a2)), beta(std::move(b)) {
        if (alpha_sq.sign() <= 0) throw std::invalid_argument("TiltParam: alpha^2 must be positive");
    }
};

struct XiEta {
    Rational xi, eta;
};

/// Point of the (xi,eta)-plane representing a class: finite when ch_0 != 0,
/// otherwise a point at infinity carrying the slope ch_2/ch_1 of the
/// parallel wall family (vertical when ch_1 = 0 as well).
struct VPoint {
    bool finite;
    Rational x, y;      // finite case
    bool vertical;      // infinite case with ch_1 = 0
    Rational slope;     // infinite case, ch_1 != 0
    Rational dir_x, dir_y;  // infinite case: ray direction (ch_1, ch_2)
};

/// mu_h slope ch_1/ch_0; +infinity for rank zero.
ExtRat mu_slope(const ChernVector& v);

/// Twisted character exp(-beta h) * ch.
ChernVector ch_beta(const ChernVector& v, const Rational& beta);

/// Modified character ch * (1 - 3/8 h^2); P^m side only.
ChernVector ch_mod(const ChernVector& v);

/// First three coefficients of the twisted modified character.
std::array<Rational, 3> char_at(const ChernVector& v, const Rational& beta);

/// Discriminant of the modified character: ch_1^2 - 2 ch_0 ch_2 evaluated
/// on ch_mod (equivalently ch_1^2 - 2 ch_0 ch_2 + 3/4 ch_0^2 on raw ch).
Rational delta_c0(const ChernVector& v);

/// Unmodified discriminant ch_1^2 - 2 ch_0 ch_2.
Rational delta_unmodified(const ChernVector& v);

/// Central charge (Re, Im) of the first tilt at (alpha^2, beta).
std::pair<Rational, Rational> z_tilt(const ChernVector& v, const TiltParam& p);

/// Tilt slope -Re/Im of z_tilt; +infinity when Im = 0.
ExtRat nu(const ChernVector& v, const TiltParam& p);

/// Closed form of nu(C_j): ((2b-j+3)^2 - 4a^2) / (4j - 8b - 12).
Rational nu_clifford_closed(int j, const TiltParam& p);

/// Second-tilt charge: z0 = -i * z_tilt.
std::pair<Rational, Rational> z0(const ChernVector& v, const TiltParam& p);

XiEta to_xieta(const TiltParam& p);
TiltParam from_xieta(const XiEta& q);  // requires eta > xi^2/2

VPoint v_point(const ChernVector& v);

/// True on the open region V of valid restriction parameters.
bool in_region_v(const TiltParam& p);

/// Character-level torsion-pair predicates for the first and second tilt.
bool t_side_beta(const ChernVector& v, const Rational& beta);  // mu > beta, or rank 0
bool f_side_beta(const ChernVector& v, const Rational& beta);  // rank != 0 and mu <= beta
bool t_side_nu(const ChernVector& v, const TiltParam& p);      // nu > 0, or Im Z = 0
bool f_side_nu(const ChernVector& v, const TiltParam& p);      // nu <= 0 (finite)

/// Exact ray from P through v(E), measured from the downward vertical.
/// For rank-zero classes the ray points in the direction (ch_1, ch_2) of
/// the twisted modified character.
Angle phase_angle(const XiEta& P, const ChernVector& v);

/// Line in the (xi,eta)-plane, eta = slope*xi + intercept, or vertical.
struct XiLine {
    bool vertical;
    Rational xi0;  // vertical case
    Rational slope, intercept;
};

XiLine line_between(const XiEta& P, const XiEta& Q);
XiLine line_through_vpoint(const XiEta& P, const VPoint& vp);

/// Point on the parabola eta = xi^2/2, coordinates in one quadratic extension.
struct GammaPoint {
    QuadExt xi, eta;
};

/// Intersection of a line with the parabola, ordered xi(E1) >= xi(E2).
/// A vertical line is tangent-like: both endpoints coincide.
std::pair<GammaPoint, GammaPoint> gamma_intersect_line(const XiLine& line);

/// Endpoints of the line through P and v(E) on the parabola.
std::pair<GammaPoint, GammaPoint> gamma_intersect(const XiEta& P, const ChernVector& v);

enum class Placement { heart, shifted_heart };

struct PhaseInterval {
    Phase lo, hi;
};

/// Admissible phase window at Q for the Harder-Narasimhan factors of a
/// class that is stable at P: [phi_Q(E1), phi_Q(E2)+1] in the heart case,
/// shifted down by one otherwise. Phases of the endpoints are taken in
/// (-1, 1].
PhaseInterval lz19_bounds(const XiEta& P, const XiEta& Q, const ChernVector& v, Placement placement);

/// phi_Q of a parabola point in the (-1,1] branch.
Phase gamma_phase(const XiEta& Q, const GammaPoint& E);

/// Character action of tensoring with C_1: multiplication by exp(h/2).
ChernVector tensor_c1_ch(const ChernVector& v);

/// True iff v(E) lies on the ray {xi <= -1/4, eta = 1/32}.
bool on_ell0(const ChernVector& v);

}  // namespace stabkit
