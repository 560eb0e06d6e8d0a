#pragma once

#include <stabkit/knum.hpp>
#include <stabkit/tilt.hpp>

#include <optional>
#include <string>
#include <vector>

namespace stabkit {

/// One sub/quotient split realizing a wall. The truncated characters are
/// the twisted modified (ch_0, ch_1, ch_2) at the search beta; quotient
/// lattice coordinates are present when the target itself is a lattice
/// class.
struct DestabCandidate {
    KClassC0 sub;
    std::array<Rational, 3> sub_char, quot_char;
    std::optional<KClassC0> quot;
    Rational delta_sub, delta_quot;
    std::string constraints_report;
};

/// Numerical wall: supporting line in the (xi,eta)-plane, endpoints on the
/// parabola, and the realizing splits found along the scan line.
struct Wall {
    XiLine line;
    GammaPoint e1, e2;
    Rational beta;
    Rational alpha_sq;
    std::vector<DestabCandidate> realizers;

    /// alpha^2 of the wall point over a given beta (vertical scan line),
    /// absent when the wall does not reach that beta.
    std::optional<Rational> alpha_sq_at(const Rational& beta) const;
};

/// Supporting line of the wall where w destabilizes the target: the line
/// through v(target) and v(w) (parallel-family rule when the target has
/// rank zero), clipped to the parabola.
Wall numerical_wall_line(const ChernVector& target, const ChernVector& w);

/// Brute-force destabilizer scan at fixed beta. Enumerates sub-classes
/// with Clifford coefficients bounded by `bound`, keeps those that share
/// the target's tilt at some alpha^2 > 0 inside the heart interval
/// 0 < Im Z(w) < Im Z(target) with both discriminants nonnegative,
/// deduplicates sub/quotient swaps, and groups survivors into walls keyed
/// by the supporting line. Deterministic output for any thread count.
///
/// Two caveats. The scan is exhaustive only within the coefficient bound,
/// which the report records; and it keeps every character-level survivor,
/// while finer information about actual objects can rule some of them
/// out. Neither is filtered here.
std::vector<Wall> destabilizer_search(const ChernVector& target, const Rational& beta, int bound,
                                      int threads = 0);

struct WallWindow {
    Rational xi_min, xi_max, eta_min, eta_max;
};

struct WallReport {
    ChernVector target;
    WallWindow window;
    int bound;
    std::vector<Wall> walls;
    /// alpha^2 chamber boundaries per sampled beta, ascending.
    std::vector<std::pair<Rational, std::vector<Rational>>> chambers;
};

/// Scans destabilizer_search across the window's beta range (at the
/// lattice of quarter-integer xi values inside the window) and assembles
/// the chamber decomposition.
WallReport wall_scan(const ChernVector& target, const WallWindow& window, int bound,
                     int threads = 0);

std::string wall_report_csv(const WallReport& report);
std::string wall_report_json(const WallReport& report);

/// Thread count resolution: explicit argument wins, else STABKIT_THREADS
/// (0 = auto), else hardware concurrency.
int resolve_threads(int requested);

}  // namespace stabkit
