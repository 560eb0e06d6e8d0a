#pragma once

#include <string>
#include <vector>

namespace stabkit {

struct VerifyCheck {
    std::string id;
    std::string desc;
    std::string expected;
    std::string computed;
    bool pass;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    int failures() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

/// Runs the complete battery of exact checks (lattice pairings, Todd and
/// character identities, tilt-slope formulas, the wall search, the Pick
/// induction, hexagonal normalization, geometry, cohomology, writer
/// determinism). Check ids are stable across versions.
VerifyReport run_verify(int threads = 0);

std::string verify_report_json(const VerifyReport& report);
std::string verify_report_text(const VerifyReport& report);

}  // namespace stabkit
