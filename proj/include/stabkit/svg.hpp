#pragma once

#include <stabkit/charspec.hpp>
#include <stabkit/walls.hpp>

#include <string>
#include <vector>

namespace stabkit {

/// Hexagonal-lattice figure: the six unit-shell classes with their labels,
/// the kappa axes, and the two rotation arcs. Fixed canvas, hand-emitted
/// elements in a fixed order; output is byte-identical across runs.
std::string plot_hexagon();

struct XiEtaPlotOptions {
    Rational xi_min = Rational(-3, 4);
    Rational xi_max = Rational(3, 4);
    Rational eta_min = Rational(-1, 8);
    Rational eta_max = Rational(1, 4);
    bool ell0 = false;
    std::vector<ResolvedCharacter> points;
    std::vector<Wall> walls;
};

/// The (xi,eta)-plane: parabola (one exact quadratic Bezier), axes,
/// optional ray {xi <= -1/4, eta = 1/32}, labelled character points and
/// wall segments.
std::string plot_xieta(const XiEtaPlotOptions& opt);

}  // namespace stabkit
