#pragma once

#include <stabkit/quadext.hpp>

#include <stdexcept>

namespace stabkit {

/// Nonzero plane vector identified with the ray it spans from the origin.
/// Angles are measured counterclockwise from the downward vertical ray
/// (0,-1), range [0, 2*pi). Comparison is exact: quadrant classification
/// plus a cross-product sign, no trigonometry.
struct Angle {
    QuadExt x, y;

    Angle(QuadExt px, QuadExt py) : x(std::move(px)), y(std::move(py)) {
        if (x.is_zero() && y.is_zero()) throw std::domain_error("Angle: zero vector");
    }

    /// Octant of the measured angle: 0 at the reference ray, even values on
    /// the four half-axes, odd values inside the open quadrants.
    int sector() const {
        // Rotate by +90 degrees so the reference ray lands on the positive
        // x-axis, then classify by coordinate signs.
        int sx = (-y).sign(), sy = x.sign();
        if (sy == 0) return sx > 0 ? 0 : 4;
        if (sy > 0) return sx > 0 ? 1 : (sx == 0 ? 2 : 3);
        return sx < 0 ? 5 : (sx == 0 ? 6 : 7);
    }

    friend QuadExt cross(const Angle& u, const Angle& v) { return u.x * v.y - u.y * v.x; }
    friend QuadExt dot(const Angle& u, const Angle& v) { return u.x * v.x + u.y * v.y; }
};

/// -1, 0, +1 as the angle of u is below, equal to, or above the angle of v.
inline int angle_cmp(const Angle& u, const Angle& v) {
    int su = u.sector(), sv = v.sector();
    if (su != sv) return su < sv ? -1 : 1;
    int c = cross(u, v).sign();
    return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

/// Angle plus an even-integer phase shift: the exact value is
/// theta/pi + 2*shift with theta in [0, 2*pi).
struct Phase {
    Angle dir;
    int shift = 0;

    /// Phase k/2 for integer k: one of the four half-axis rays, with the
    /// wrap folded into the shift.
    static Phase half_integer(long k) {
        long m = ((k % 4) + 4) % 4;
        static const int rays[4][2] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};
        Angle a(QuadExt(Rational(rays[m][0])), QuadExt(Rational(rays[m][1])));
        return Phase{a, static_cast<int>((k - m) / 4)};
    }

    Phase plus(int whole) const {
        // Adding 1 to the phase rotates the ray by pi; the shift absorbs
        // the wrap past 2*pi.
        Phase p = *this;
        bool negate = (whole % 2) != 0;
        int effective = whole;
        if (negate) {
            bool lower_half = p.dir.sector() < 4;  // theta < pi
            p.dir = Angle(-p.dir.x, -p.dir.y);
            effective = whole - 1 + (lower_half ? 0 : 2);
        }
        if (effective % 2 != 0) throw std::logic_error("Phase: internal shift parity");
        p.shift += effective / 2;
        return p;
    }
};

inline int phase_cmp(const Phase& p, const Phase& q) {
    if (p.shift != q.shift) return p.shift < q.shift ? -1 : 1;
    return angle_cmp(p.dir, q.dir);
}

inline bool operator<(const Phase& p, const Phase& q) { return phase_cmp(p, q) < 0; }
inline bool operator<=(const Phase& p, const Phase& q) { return phase_cmp(p, q) <= 0; }

}  // namespace stabkit
