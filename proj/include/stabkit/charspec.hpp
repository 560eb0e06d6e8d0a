#pragma once

#include <stabkit/knum.hpp>

#include <optional>
#include <string>
#include <vector>

namespace stabkit {

/// A parsed character: the Chern vector it denotes plus whatever lattice
/// coordinates are known for it.
struct ResolvedCharacter {
    std::string name;
    ChernVector ch;
    std::optional<KClassC0> clifford;  // C_0-side lattice class
    std::optional<KClassKu> ku;        // rank-2 coordinates
    std::string ku_basis;              // "kappa", "kappabar", or empty
};

/// Names shipped with the binary: C-1, C0, C1, C2, C3, kappa1, kappa2,
/// kappabar1, kappabar2, P_Pi, F_Pi, K_Pi, psi_P_Pi, I_Pi, I_Pi(1),
/// I_Pi(-1), O_Pi, O, O(k).
ResolvedCharacter resolve_builtin(const std::string& name);

std::vector<std::string> builtin_names();

/// Accepts a builtin name or an inline JSON object with one of the keys
/// "builtin", "clifford", "kappa", "kappabar", "chern".
ResolvedCharacter resolve_character(const std::string& spec);

std::string character_json(const ResolvedCharacter& rc);

}  // namespace stabkit
