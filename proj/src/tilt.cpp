#include <stabkit/tilt.hpp>

namespace stabkit {

namespace {

const Rational kAnchorBeta(-5, 4);

void require_proj(const ChernVector& v, const char* who) {
    if (v.X.kind != VarietyKind::projective_space)
        throw std::invalid_argument(std::string(who) + ": expected a projective-space character");
}

}  // namespace

ExtRat mu_slope(const ChernVector& v) {
    require_proj(v, "mu_slope");
    bool zero = true;
    for (const Rational& c : v.ch.coeffs())
        if (!c.is_zero()) zero = false;
    if (zero) throw std::domain_error("mu_slope: zero character");
    if (v.ch[0].is_zero()) return ExtRat::inf();
    return ExtRat::of(v.ch[1] / v.ch[0]);
}

ChernVector ch_beta(const ChernVector& v, const Rational& beta) {
    return {v.X, v.ch * HSeries::exponential(-beta, v.X.dim)};
}

ChernVector ch_mod(const ChernVector& v) {
    require_proj(v, "ch_mod");
    HSeries corr(v.X.dim);
    corr[0] = Rational(1);
    if (v.X.dim >= 2) corr[2] = Rational(-3, 8);
    return {v.X, v.ch * corr};
}

std::array<Rational, 3> char_at(const ChernVector& v, const Rational& beta) {
    ChernVector w = ch_beta(ch_mod(v), beta);
    return {w.ch[0], w.ch[1], w.ch[2]};
}

Rational delta_c0(const ChernVector& v) {
    ChernVector w = ch_mod(v);
    return w.ch[1] * w.ch[1] - Rational(2) * w.ch[0] * w.ch[2];
}

Rational delta_unmodified(const ChernVector& v) {
    require_proj(v, "delta_unmodified");
    return v.ch[1] * v.ch[1] - Rational(2) * v.ch[0] * v.ch[2];
}

std::pair<Rational, Rational> z_tilt(const ChernVector& v, const TiltParam& p) {
    if (v.X != Variety::proj(3)) throw std::invalid_argument("z_tilt: expected a P^3 character");
    auto [a, b, c] = char_at(v, p.beta);
    return {-(c - p.alpha_sq / Rational(2) * a), b};
}

ExtRat nu(const ChernVector& v, const TiltParam& p) {
    if (v.ch == HSeries(v.ch.dim())) throw std::domain_error("nu: zero character");
    auto [re, im] = z_tilt(v, p);
    if (im.is_zero()) return ExtRat::inf();
    return ExtRat::of(-re / im);
}

Rational nu_clifford_closed(int j, const TiltParam& p) {
    Rational t = Rational(2) * p.beta - Rational(j) + Rational(3);
    return (t * t - Rational(4) * p.alpha_sq) /
           (Rational(4 * j) - Rational(8) * p.beta - Rational(12));
}

std::pair<Rational, Rational> z0(const ChernVector& v, const TiltParam& p) {
    auto [re, im] = z_tilt(v, p);
    return {im, -re};
}

XiEta to_xieta(const TiltParam& p) {
    Rational xi = p.beta + Rational(5, 4);
    return {xi, (p.alpha_sq + xi * xi) / Rational(2)};
}

TiltParam from_xieta(const XiEta& q) {
    Rational alpha_sq = Rational(2) * q.eta - q.xi * q.xi;
    if (alpha_sq.sign() <= 0)
        throw std::domain_error("from_xieta: point on or below the parabola");
    return {alpha_sq, q.xi - Rational(5, 4)};
}

VPoint v_point(const ChernVector& v) {
    auto [a, b, c] = char_at(v, kAnchorBeta);
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw std::domain_error("v_point: truncated character vanishes");
    VPoint out{};
    if (!a.is_zero()) {
        out.finite = true;
        out.x = b / a;
        out.y = c / a;
        return out;
    }
    out.finite = false;
    out.dir_x = b;
    out.dir_y = c;
    if (b.is_zero()) {
        out.vertical = true;
    } else {
        out.vertical = false;
        out.slope = c / b;
    }
    return out;
}

bool in_region_v(const TiltParam& p) {
    if (!(Rational(-3, 2) < p.beta && p.beta < Rational(-1))) return false;
    Rational lo = p.beta + Rational(3, 2), hi = Rational(-1) - p.beta;
    Rational m = lo < hi ? lo : hi;
    return p.alpha_sq.sign() > 0 && p.alpha_sq < m * m;
}

bool t_side_beta(const ChernVector& v, const Rational& beta) {
    ExtRat mu = mu_slope(v);
    return mu.infinite || beta < mu.value;
}

bool f_side_beta(const ChernVector& v, const Rational& beta) {
    ExtRat mu = mu_slope(v);
    return !mu.infinite && mu.value <= beta;
}

bool t_side_nu(const ChernVector& v, const TiltParam& p) {
    ExtRat n = nu(v, p);
    return n.infinite || n.value.sign() > 0;
}

bool f_side_nu(const ChernVector& v, const TiltParam& p) {
    ExtRat n = nu(v, p);
    return !n.infinite && n.value.sign() <= 0;
}

Angle phase_angle(const XiEta& P, const ChernVector& v) {
    if (Rational(2) * P.eta <= P.xi * P.xi)
        throw std::domain_error("phase_angle: base point not above the parabola");
    VPoint vp = v_point(v);
    if (vp.finite) {
        Rational dx = vp.x - P.xi, dy = vp.y - P.eta;
        if (dx.is_zero() && dy.is_zero())
            throw std::domain_error("phase_angle: v(E) coincides with the base point");
        return Angle(QuadExt(dx), QuadExt(dy));
    }
    return Angle(QuadExt(vp.dir_x), QuadExt(vp.dir_y));
}

XiLine line_between(const XiEta& P, const XiEta& Q) {
    if (P.xi == Q.xi) {
        if (P.eta == Q.eta) throw std::invalid_argument("line_between: coincident points");
        return {true, P.xi, Rational(0), Rational(0)};
    }
    Rational slope = (Q.eta - P.eta) / (Q.xi - P.xi);
    return {false, Rational(0), slope, P.eta - slope * P.xi};
}

XiLine line_through_vpoint(const XiEta& P, const VPoint& vp) {
    if (vp.finite) return line_between(P, XiEta{vp.x, vp.y});
    if (vp.vertical) return {true, P.xi, Rational(0), Rational(0)};
    return {false, Rational(0), vp.slope, P.eta - vp.slope * P.xi};
}

std::pair<GammaPoint, GammaPoint> gamma_intersect_line(const XiLine& line) {
    if (line.vertical) {
        QuadExt xi{line.xi0};
        QuadExt eta{line.xi0 * line.xi0 / Rational(2)};
        return {GammaPoint{xi, eta}, GammaPoint{xi, eta}};
    }
    // xi^2/2 = s*xi + q  =>  xi = s +- sqrt(s^2 + 2q)
    Rational disc = line.slope * line.slope + Rational(2) * line.intercept;
    if (disc.sign() < 0)
        throw std::domain_error("gamma_intersect: line misses the parabola");
    QuadExt root = QuadExt::sqrt(disc);
    QuadExt s{line.slope};
    QuadExt x1 = s + root, x2 = s - root;
    auto on_gamma = [](const QuadExt& x) { return x * x / QuadExt(Rational(2)); };
    return {GammaPoint{x1, on_gamma(x1)}, GammaPoint{x2, on_gamma(x2)}};
}

std::pair<GammaPoint, GammaPoint> gamma_intersect(const XiEta& P, const ChernVector& v) {
    if (Rational(2) * P.eta <= P.xi * P.xi)
        throw std::domain_error("gamma_intersect: base point not above the parabola");
    return gamma_intersect_line(line_through_vpoint(P, v_point(v)));
}

Phase gamma_phase(const XiEta& Q, const GammaPoint& E) {
    QuadExt dx = E.xi - QuadExt(Q.xi), dy = E.eta - QuadExt(Q.eta);
    Angle dir(dx, dy);
    // Branch (-1, 1]: angles in [0, pi] keep shift 0, the rest drop by one
    // full turn.
    int shift = dir.sector() <= 4 ? 0 : -1;
    return Phase{dir, shift};
}

PhaseInterval lz19_bounds(const XiEta& P, const XiEta& Q, const ChernVector& v, Placement placement) {
    if (Rational(2) * Q.eta <= Q.xi * Q.xi)
        throw std::domain_error("lz19_bounds: Q not above the parabola");
    auto [e1, e2] = gamma_intersect(P, v);
    Phase p1 = gamma_phase(Q, e1), p2 = gamma_phase(Q, e2);
    PhaseInterval out = (placement == Placement::heart)
                            ? PhaseInterval{p1, p2.plus(1)}
                            : PhaseInterval{p1.plus(-1), p2};
    if (!(out.lo <= out.hi)) throw std::logic_error("lz19_bounds: inverted phase interval");
    return out;
}

ChernVector tensor_c1_ch(const ChernVector& v) {
    require_proj(v, "tensor_c1_ch");
    return {v.X, v.ch * HSeries::exponential(Rational(1, 2), v.X.dim)};
}

bool on_ell0(const ChernVector& v) {
    VPoint vp = v_point(v);
    return vp.finite && vp.y == Rational(1, 32) && vp.x <= Rational(-1, 4);
}

}  // namespace stabkit
