#include <stabkit/charspec.hpp>

#include <json.hpp>

namespace stabkit {

namespace {

ResolvedCharacter from_clifford(std::string name, KClassC0 k) {
    ResolvedCharacter rc{std::move(name), ch_of(k), k, std::nullopt, ""};
    if (in_kubar_span(k)) {
        rc.ku = kubar_coords(k);
        rc.ku_basis = "kappabar";
    }
    return rc;
}

ResolvedCharacter from_kappa(std::string name, KClassKu v) {
    ChernVector ch = Rational(v.a) * ch_kappa1_y() + Rational(v.b) * ch_kappa2_y();
    return {std::move(name), ch, std::nullopt, v, "kappa"};
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"C-1", "C0",       "C1",       "C2",      "C3",   "kappa1",  "kappa2",
            "kappabar1", "kappabar2", "P_Pi", "F_Pi", "K_Pi", "psi_P_Pi", "I_Pi",
            "I_Pi(1)",   "I_Pi(-1)",  "O_Pi", "O"};
}

ResolvedCharacter resolve_builtin(const std::string& name) {
    if (name == "C-1") return from_clifford(name, {1, 0, 0, 0});
    if (name == "C0") return from_clifford(name, {0, 1, 0, 0});
    if (name == "C1") return from_clifford(name, {0, 0, 1, 0});
    if (name == "C2") return from_clifford(name, {0, 0, 0, 1});
    if (name == "C3") return from_clifford(name, twist_c0({0, 0, 0, 1}, 1));
    if (name == "kappabar1") return from_clifford(name, kubar1());
    if (name == "kappabar2") return from_clifford(name, kubar2());
    // The heart representative of the projected plane object: rank-zero
    // sheaf with twisted character (0,4,0), class -kappabar_2.
    if (name == "psi_P_Pi") return from_clifford(name, -kubar2());
    if (name == "kappa1" || name == "F_Pi") return from_kappa(name, {1, 0});
    if (name == "kappa2" || name == "P_Pi") return from_kappa(name, {0, 1});
    if (name == "K_Pi") return from_kappa(name, {1, -1});
    if (name == "I_Pi") return {name, ch_ideal_plane(0), std::nullopt, std::nullopt, ""};
    if (name == "I_Pi(1)") return {name, ch_ideal_plane(1), std::nullopt, std::nullopt, ""};
    if (name == "I_Pi(-1)") return {name, ch_ideal_plane(-1), std::nullopt, std::nullopt, ""};
    if (name == "O_Pi") return {name, ch_plane_in_y(), std::nullopt, std::nullopt, ""};
    if (name == "O") return {name, ch_line(0, Variety::cubic(5)), std::nullopt, std::nullopt, ""};
    if (name.size() > 2 && name.substr(0, 2) == "O(" && name.back() == ')') {
        int k = std::stoi(name.substr(2, name.size() - 3));
        return {name, ch_line(k, Variety::cubic(5)), std::nullopt, std::nullopt, ""};
    }
    throw std::invalid_argument("unknown builtin character '" + name + "'");
}

ResolvedCharacter resolve_character(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty character spec");
    if (spec[0] != '{') return resolve_builtin(spec);
    nlohmann::json j = nlohmann::json::parse(spec);
    if (j.contains("builtin")) return resolve_builtin(j["builtin"].get<std::string>());
    auto get_coeffs = [&](const char* key, size_t n) {
        std::vector<Int> out;
        for (const auto& e : j[key]) {
            if (e.is_number_integer())
                out.emplace_back(e.get<long>());
            else
                out.emplace_back(Int(e.get<std::string>()));
        }
        if (out.size() != n)
            throw std::invalid_argument(std::string("character spec: '") + key + "' needs " +
                                        std::to_string(n) + " coefficients");
        return out;
    };
    if (j.contains("clifford")) {
        auto c = get_coeffs("clifford", 4);
        return from_clifford(spec, {c[0], c[1], c[2], c[3]});
    }
    if (j.contains("kappa")) {
        auto c = get_coeffs("kappa", 2);
        return from_kappa(spec, {c[0], c[1]});
    }
    if (j.contains("kappabar")) {
        auto c = get_coeffs("kappabar", 2);
        auto rc = from_clifford(spec, from_kubar({c[0], c[1]}));
        return rc;
    }
    if (j.contains("chern")) {
        const auto& cj = j["chern"];
        std::string vtag = cj.at("variety").get<std::string>();
        Variety X = vtag == "P2"   ? Variety::proj(2)
                    : vtag == "P3" ? Variety::proj(3)
                    : vtag == "Y5" ? Variety::cubic(5)
                                   : throw std::invalid_argument("unknown variety tag '" + vtag + "'");
        HSeries s(X.dim);
        int k = 0;
        for (const auto& e : cj.at("coeffs")) {
            if (k > X.dim) throw std::invalid_argument("character spec: too many coefficients");
            s[k++] = Rational::parse(e.get<std::string>());
        }
        ResolvedCharacter rc{spec, ChernVector{X, s}, std::nullopt, std::nullopt, ""};
        if (X == Variety::proj(3)) {
            try {
                rc.clifford = kclass_from_ch(rc.ch);
                if (in_kubar_span(*rc.clifford)) {
                    rc.ku = kubar_coords(*rc.clifford);
                    rc.ku_basis = "kappabar";
                }
            } catch (const std::domain_error&) {
            }
        }
        return rc;
    }
    throw std::invalid_argument("character spec: expected builtin/clifford/kappa/kappabar/chern");
}

std::string character_json(const ResolvedCharacter& rc) {
    nlohmann::ordered_json j;
    j["name"] = rc.name;
    j["variety"] = rc.ch.X.name();
    j["chern"] = nlohmann::ordered_json::array();
    for (const auto& c : rc.ch.ch.coeffs()) j["chern"].push_back(c.str());
    auto int_json = [](const Int& v) -> nlohmann::ordered_json {
        if (v.fits_slong_p()) return v.get_si();
        return v.get_str();
    };
    if (rc.clifford) {
        j["class"] = {{"basis", "clifford"},
                      {"coeffs",
                       {int_json(rc.clifford->c[0]), int_json(rc.clifford->c[1]),
                        int_json(rc.clifford->c[2]), int_json(rc.clifford->c[3])}}};
    }
    if (rc.ku)
        j["ku"] = {{"basis", rc.ku_basis}, {"coeffs", {int_json(rc.ku->a), int_json(rc.ku->b)}}};
    return j.dump(2) + "\n";
}

}  // namespace stabkit
