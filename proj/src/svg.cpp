#include <stabkit/svg.hpp>
#include <stabkit/tilt.hpp>

#include <sstream>

namespace stabkit {

namespace {

// Rational approximation of sqrt(3), used only to place plot elements;
// all figure coordinates stay in exact rational arithmetic so rendering
// is reproducible.
const Rational kSqrt3(Int("1732050807568877"), Int("1000000000000000"));

struct Frame {
    // world -> canvas: X = ox + sx*(x - wx), Y = oy - sy*(y - wy)
    Rational wx, wy, sx, sy, ox, oy;

    std::string X(const Rational& x) const { return (ox + sx * (x - wx)).decimal(2); }
    std::string Y(const Rational& y) const { return (oy - sy * (y - wy)).decimal(2); }
};

void text(std::ostringstream& os, const Frame& f, const Rational& x, const Rational& y,
          const std::string& label, const char* anchor = "start") {
    os << "<text x=\"" << f.X(x) << "\" y=\"" << f.Y(y) << "\" font-size=\"12\" text-anchor=\""
       << anchor << "\">" << label << "</text>\n";
}

void dot(std::ostringstream& os, const Frame& f, const Rational& x, const Rational& y) {
    os << "<circle cx=\"" << f.X(x) << "\" cy=\"" << f.Y(y) << "\" r=\"3\" fill=\"black\"/>\n";
}

void seg(std::ostringstream& os, const Frame& f, const Rational& x1, const Rational& y1,
         const Rational& x2, const Rational& y2, const char* style) {
    os << "<line x1=\"" << f.X(x1) << "\" y1=\"" << f.Y(y1) << "\" x2=\"" << f.X(x2) << "\" y2=\""
       << f.Y(y2) << "\" " << style << "/>\n";
}

std::string header(int w, int h) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
       << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    return os.str();
}

}  // namespace

std::string plot_hexagon() {
    const int W = 640, H = 560;
    Frame f{Rational(0), Rational(0), Rational(120), Rational(120),
            Rational(W, 2), Rational(H, 2)};
    std::ostringstream os;
    os << header(W, H);

    auto embed = [&](long a, long b) {
        // (a,b) -> a*(1,0) + b*(1/2, sqrt3/2)
        return std::pair<Rational, Rational>(Rational(a) + Rational(b) / Rational(2),
                                             Rational(b) * kSqrt3 / Rational(2));
    };

    // Axes rays.
    auto [ax, ay] = embed(2, 0);
    auto [bx, by] = embed(0, 2);
    seg(os, f, -ax, -ay, ax, ay, "stroke=\"gray\" stroke-dasharray=\"4 3\"");
    seg(os, f, -bx, -by, bx, by, "stroke=\"gray\" stroke-dasharray=\"4 3\"");
    text(os, f, ax, ay + Rational(1, 10), "kappa1-axis");
    text(os, f, bx + Rational(1, 20), by, "kappa2-axis");

    // Lattice shell out to radius 2 for context.
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            if (a == 0 && b == 0) continue;
            long n = a * a + a * b + b * b;
            if (n > 4) continue;
            auto [x, y] = embed(a, b);
            dot(os, f, x, y);
        }

    struct Label {
        long a, b;
        const char* label;
        const char* anchor;
    };
    const Label labels[] = {
        {1, 0, "kappa1 = [F]", "start"},   {0, 1, "kappa2 = [P]", "start"},
        {-1, 1, "kappa2-kappa1", "end"},   {-1, 0, "-kappa1", "end"},
        {0, -1, "-kappa2", "end"},         {1, -1, "kappa1-kappa2 = [K]", "start"},
        {1, 1, "kappa1+kappa2", "start"},
    };
    for (const auto& l : labels) {
        auto [x, y] = embed(l.a, l.b);
        text(os, f, x + Rational(1, 25), y - Rational(3, 25), l.label, l.anchor);
    }

    // Rotation arcs near the origin (fixed sixth/third-turn markers).
    os << "<path d=\"M " << f.X(Rational(2, 5)) << " " << f.Y(Rational(0)) << " A 48 48 0 0 0 "
       << f.X(Rational(1, 5)) << " " << f.Y(Rational(1, 5) * kSqrt3) << "\" fill=\"none\" "
       << "stroke=\"black\" marker-end=\"none\"/>\n";
    text(os, f, Rational(2, 5), Rational(7, 25), "S");
    os << "<path d=\"M " << f.X(Rational(1, 4)) << " " << f.Y(Rational(0)) << " A 30 30 0 0 0 "
       << f.X(Rational(-1, 8)) << " " << f.Y(Rational(1, 8) * kSqrt3) << "\" fill=\"none\" "
       << "stroke=\"black\"/>\n";
    text(os, f, Rational(-9, 25), Rational(6, 25), "O");

    os << "</svg>\n";
    return os.str();
}

std::string plot_xieta(const XiEtaPlotOptions& opt) {
    const int W = 640, H = 480;
    Rational spanx = opt.xi_max - opt.xi_min, spany = opt.eta_max - opt.eta_min;
    if (spanx.sign() <= 0 || spany.sign() <= 0)
        throw std::invalid_argument("plot_xieta: empty window");
    Frame f{opt.xi_min, opt.eta_min, Rational(W - 40) / spanx, Rational(H - 40) / spany,
            Rational(20), Rational(H - 20)};
    std::ostringstream os;
    os << header(W, H);

    // Axes.
    if (opt.xi_min.sign() <= 0 && opt.xi_max.sign() >= 0)
        seg(os, f, Rational(0), opt.eta_min, Rational(0), opt.eta_max, "stroke=\"gray\"");
    if (opt.eta_min.sign() <= 0 && opt.eta_max.sign() >= 0)
        seg(os, f, opt.xi_min, Rational(0), opt.xi_max, Rational(0), "stroke=\"gray\"");

    // Parabola eta = xi^2/2 as a single quadratic Bezier, exact: control
    // point ((x0+x1)/2, x0*x1/2).
    {
        Rational x0 = opt.xi_min, x1 = opt.xi_max;
        Rational y0 = x0 * x0 / Rational(2), y1 = x1 * x1 / Rational(2);
        Rational cx = (x0 + x1) / Rational(2), cy = x0 * x1 / Rational(2);
        os << "<path d=\"M " << f.X(x0) << " " << f.Y(y0) << " Q " << f.X(cx) << " " << f.Y(cy)
           << " " << f.X(x1) << " " << f.Y(y1) << "\" fill=\"none\" stroke=\"black\"/>\n";
        text(os, f, x1 - spanx / Rational(10), y1, "Gamma");
    }

    if (opt.ell0) {
        Rational y(1, 32);
        seg(os, f, opt.xi_min, y, Rational(-1, 4), y,
            "stroke=\"black\" stroke-width=\"2\"");
        text(os, f, opt.xi_min + spanx / Rational(40), y + spany / Rational(30), "ell0");
    }

    for (const auto& wall : opt.walls) {
        if (wall.line.vertical) continue;
        if (wall.e1.xi.is_rational() && wall.e2.xi.is_rational()) {
            seg(os, f, wall.e2.xi.as_rational(), wall.e2.eta.as_rational(),
                wall.e1.xi.as_rational(), wall.e1.eta.as_rational(),
                "stroke=\"blue\" stroke-width=\"1.5\"");
        } else {
            // Surd endpoints: draw through the window range along the line.
            Rational x0 = opt.xi_min, x1 = opt.xi_max;
            Rational y0 = wall.line.slope * x0 + wall.line.intercept;
            Rational y1 = wall.line.slope * x1 + wall.line.intercept;
            seg(os, f, x0, y0, x1, y1, "stroke=\"blue\" stroke-width=\"1.5\"");
        }
    }

    for (const auto& rc : opt.points) {
        VPoint vp = v_point(rc.ch);
        if (!vp.finite) continue;
        dot(os, f, vp.x, vp.y);
        text(os, f, vp.x + spanx / Rational(60), vp.y + spany / Rational(40), rc.name);
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace stabkit
