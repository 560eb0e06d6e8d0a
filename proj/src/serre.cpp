#include <stabkit/serre.hpp>

namespace stabkit {

namespace {

QuadExt q(long n) { return QuadExt(Rational(n)); }
QuadExt q(long n, long d) { return QuadExt(Rational(n, d)); }
QuadExt q(const Rational& r) { return QuadExt(r); }

const Rational kBetaAnchor(-5, 4);

}  // namespace

Mat2 serre_matrix_k() { return Mat2::of(q(0), q(-1), q(1), q(1)); }

Mat2 rotation_matrix_k() { return Mat2::of(q(-1), q(-1), q(1), q(0)); }

ChargeMatrix charge_matrix(const TiltParam& p) {
    ChernVector k1 = ch_of(kubar1()), k2 = ch_of(kubar2());
    auto [re1, im1] = z0(k1, p);
    auto [re2, im2] = z0(k2, p);
    ChargeMatrix zm{Mat2::of(q(re1), q(re2), q(im1), q(im2))};
    if (zm.z.det() != q(charge_matrix_det(p)))
        throw std::logic_error("charge_matrix: determinant mismatch against the closed form");
    return zm;
}

Rational charge_matrix_det(const TiltParam& p) {
    Rational s = p.beta + Rational(5, 4);
    return Rational(16) * p.alpha_sq + Rational(16) * s * s + Rational(7);
}

Mat2 serre_inv_matrix(const TiltParam& p) {
    Mat2 z = charge_matrix(p).z;
    // On the kappabar lattice the rotation functor inverse sends
    // kappabar_1 -> kappabar_1 - kappabar_2 and kappabar_2 -> kappabar_1,
    // which is the inverse of the Serre matrix there.
    Mat2 o_inv = serre_matrix_k().inverse();
    Mat2 m = z * serre_matrix_k() * z.inverse();
    if (m.det().sign() <= 0) throw std::logic_error("serre_inv_matrix: determinant not positive");
    // Defining identity, checked exactly on both basis vectors.
    Mat2 lhs = m.inverse() * z;
    Mat2 rhs = z * o_inv;
    if (!(lhs == rhs)) throw std::logic_error("serre_inv_matrix: defining identity failed");
    return m;
}

GLTilde hex_normalizer(const TiltParam& p) {
    if (p.beta != kBetaAnchor)
        throw std::invalid_argument("hex_normalizer: requires beta = -5/4");
    QuadExt sqrt3 = QuadExt::sqrt(Rational(3));
    QuadExt scale = (q(Rational(16) * p.alpha_sq + Rational(7))) / (q(2) * sqrt3);
    // Branch 0: the diagonal matrix fixes the reference ray, so the lift
    // restricts to the identity window and maps (0,1] into (0,2].
    return GLTilde{Mat2::diag(q(4), scale), 0};
}

Mat2 rotation_pi_3() {
    QuadExt half = q(Rational(1, 2));
    QuadExt s = QuadExt::sqrt(Rational(3)) / q(2);
    return Mat2::of(half, -s, s, half);
}

bool gepner_rotation_check(const ChargeMatrix& zm) {
    Mat2 lhs = zm.z * serre_matrix_k();
    Mat2 rhs = rotation_pi_3() * zm.z;
    return lhs == rhs;
}

PhaseJumpResult phase_jump(const ChargeMatrix& zm, const KClassKu& v) {
    if (v.is_zero()) throw std::domain_error("phase_jump: zero class");
    auto w = zm.charge(v);
    auto wS = zm.charge(serre_ku(v));
    auto rotated = rotation_pi_3().apply(w[0], w[1]);
    // Z(Sv) must be the pi/3 rotation of Z(v) exactly: same ray, positive scale.
    QuadExt cr = rotated[0] * wS[1] - rotated[1] * wS[0];
    QuadExt dt = rotated[0] * wS[0] + rotated[1] * wS[1];
    if (!cr.is_zero() || dt.sign() <= 0)
        throw std::logic_error("phase_jump: argument jump is not exactly pi/3 at " + v.str());
    return {Rational(1, 3), 1};
}

ChargeMatrix gl_act(const GLTilde& gt, const ChargeMatrix& zm) {
    return ChargeMatrix{gt.M.inverse() * zm.z};
}

GLTilde gl_compose(const GLTilde& g, const GLTilde& h) {
    return GLTilde{g.M * h.M, g.branch + h.branch};
}

GLTilde gl_inverse(const GLTilde& g) { return GLTilde{g.M.inverse(), -g.branch}; }

Phase gl_lift(const GLTilde& gt, const Phase& phi) {
    if (gt.M.det().sign() <= 0) throw std::domain_error("gl_lift: matrix not in GL2+");
    // Image of the reference ray (0,-1); its measured angle theta0 anchors
    // the winding count.
    auto ref = gt.M.apply(QuadExt(Rational(0)), QuadExt(Rational(-1)));
    Angle ref_dir(ref[0], ref[1]);
    auto img = gt.M.apply(phi.dir.x, phi.dir.y);
    Angle img_dir(img[0], img[1]);
    // Orientation preserved: as the input sweeps one turn from the
    // reference ray, the image sweeps one turn from ref_dir; the image
    // angle wraps past zero exactly when it measures below theta0.
    int wrapped = angle_cmp(img_dir, ref_dir) < 0 ? 1 : 0;
    // Pin g(0) = theta0/pi + 2 k0 inside (branch-1, branch+1]. With
    // t = theta0/pi in [0,2), the unique k0 depends only on the branch
    // parity and on which of {0}, (0,1), {1}, (1,2) holds t, which the
    // sector reads off exactly.
    int b = gt.branch;
    auto floordiv2 = [](int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
    bool b_even = ((b % 2) + 2) % 2 == 0;
    int sector = ref_dir.sector();
    int k0;
    if (sector == 0)  // t = 0: even lift values, window top when b is odd
        k0 = b_even ? floordiv2(b) : floordiv2(b + 1);
    else if (sector <= 4)  // t in (0,1]: odd-leaning values
        k0 = b_even ? floordiv2(b) : floordiv2(b - 1);
    else  // t in (1,2)
        k0 = b_even ? floordiv2(b - 2) : floordiv2(b - 1);
    return Phase{img_dir, phi.shift + k0 + wrapped};
}

GLTilde square_lattice_shear() {
    // The action is by the stored matrix's inverse; the inverse here sends
    // (-1,0) to (-1,0) and (-1/2, sqrt3/2) to (0,1), so it carries the
    // hexagonal charge lattice onto the square one. Determinant sqrt3/2.
    QuadExt sqrt3 = QuadExt::sqrt(Rational(3));
    return GLTilde{Mat2::of(q(1), q(-1, 2), q(0), sqrt3 / q(2)), 0};
}

bool shear_keeps_gldim_bound(const GLTilde& shear, const ChargeMatrix& hex_charge) {
    if (shear.M.det().sign() <= 0) return false;
    // The sheared Serre action on the charge plane.
    ChargeMatrix sheared = gl_act(shear, hex_charge);
    Mat2 t = sheared.z * serre_matrix_k() * sheared.z.inverse();
    // Every direction d must advance counterclockwise by an angle in
    // [0, pi/2]: cross(d, T d) >= 0 and dot(d, T d) >= 0 for all d. Both
    // are quadratic forms in d; check positive semidefiniteness.
    auto psd = [](const QuadExt& a, const QuadExt& b, const QuadExt& c) {
        // form a x^2 + 2b xy + c y^2
        return a.sign() >= 0 && c.sign() >= 0 && (a * c - b * b).sign() >= 0;
    };
    // cross(d, T d) = -t10 x^2 + (t00 - t11) xy + t01 y^2 ... with
    // cross((x,y),(u,v)) = x v - y u:
    //   x*(t10 x + t11 y) - y*(t00 x + t01 y)
    QuadExt ca = t.m[1][0];
    QuadExt cc = -t.m[0][1];
    QuadExt cb = (t.m[1][1] - t.m[0][0]) / q(2);
    // dot(d, T d) = t00 x^2 + (t01 + t10) xy + t11 y^2
    QuadExt da = t.m[0][0];
    QuadExt dc = t.m[1][1];
    QuadExt db = (t.m[0][1] + t.m[1][0]) / q(2);
    return psd(ca, cb, cc) && psd(da, db, dc);
}

}  // namespace stabkit
