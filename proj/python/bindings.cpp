#include <stabkit/charspec.hpp>
#include <stabkit/serre.hpp>
#include <stabkit/svg.hpp>
#include <stabkit/verify.hpp>
#include <stabkit/walls.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace stabkit;

namespace {

Rational rat(const std::string& s) { return Rational::parse(s); }

std::vector<std::string> series_strs(const HSeries& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coeffs()) out.push_back(c.str());
    return out;
}

py::dict wall_to_dict(const Wall& w) {
    py::dict d;
    d["beta"] = w.beta.str();
    d["alpha_sq"] = w.alpha_sq.str();
    if (w.line.vertical) {
        d["line"] = py::make_tuple("vertical", w.line.xi0.str());
    } else {
        d["line"] = py::make_tuple(w.line.slope.str(), w.line.intercept.str());
    }
    py::list realizers;
    for (const auto& r : w.realizers) {
        py::dict rd;
        py::list sub;
        for (const auto& c : r.sub.c) sub.append(c.get_str());
        rd["sub"] = sub;
        if (r.quot) {
            py::list quot;
            for (const auto& c : r.quot->c) quot.append(c.get_str());
            rd["quotient"] = quot;
        }
        rd["sub_char"] = py::make_tuple(r.sub_char[0].str(), r.sub_char[1].str(),
                                        r.sub_char[2].str());
        rd["quot_char"] = py::make_tuple(r.quot_char[0].str(), r.quot_char[1].str(),
                                         r.quot_char[2].str());
        rd["delta_sub"] = r.delta_sub.str();
        rd["delta_quot"] = r.delta_quot.str();
        realizers.append(rd);
    }
    d["realizers"] = realizers;
    return d;
}

py::dict tree_to_dict(const NonemptyNode& n) {
    py::dict d;
    d["v"] = py::make_tuple(n.v.a.get_str(), n.v.b.get_str());
    d["norm_form"] = norm_form(n.v).get_str();
    if (n.leaf()) {
        d["leaf"] = true;
        d["orbit"] = n.orbit_tag();
    } else {
        d["leaf"] = false;
        d["chi_plus_minus"] = n.chi_plus_minus.get_str();
        d["minus"] = tree_to_dict(*n.minus);
        d["plus"] = tree_to_dict(*n.plus);
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact lattice and tilt-stability computations for the Kuznetsov component of a "
              "cubic 5-fold";

    m.def("gram", [](const std::string& basis) {
        std::vector<std::vector<std::string>> out;
        std::vector<std::vector<Rational>> g;
        if (basis == "clifford3")
            g = gram_clifford(3);
        else if (basis == "clifford2")
            g = gram_clifford(2);
        else if (basis == "kappaY") {
            ChernVector k1 = ch_kappa1_y(), k2 = ch_kappa2_y();
            g = {{euler_pairing(k1, k1), euler_pairing(k1, k2)},
                 {euler_pairing(k2, k1), euler_pairing(k2, k2)}};
        } else if (basis == "kappabar") {
            g = {{Rational(chi_c0(kubar1(), kubar1())), Rational(chi_c0(kubar1(), kubar2()))},
                 {Rational(chi_c0(kubar2(), kubar1())), Rational(chi_c0(kubar2(), kubar2()))}};
        } else {
            throw std::invalid_argument("unknown basis '" + basis + "'");
        }
        for (const auto& row : g) {
            std::vector<std::string> r;
            for (const auto& x : row) r.push_back(x.str());
            out.push_back(r);
        }
        return out;
    }, py::arg("basis"), "Gram matrix of Euler pairings, entries as exact fraction strings");

    m.def("chern", [](const std::string& spec) {
        return series_strs(resolve_character(spec).ch.ch);
    }, py::arg("spec"), "Chern character coefficients of a builtin or JSON character spec");

    m.def("euler_pairing_c0",
          [](int i, int j, int m_dim) { return euler_pairing_c0(i, j, m_dim).str(); },
          py::arg("i"), py::arg("j"), py::arg("m") = 3);

    m.def("todd", [](const std::string& variety) {
        if (variety == "Y5") return series_strs(todd(Variety::cubic(5)).ch);
        if (variety.size() == 2 && variety[0] == 'P')
            return series_strs(todd(Variety::proj(variety[1] - '0')).ch);
        throw std::invalid_argument("unknown variety '" + variety + "'");
    }, py::arg("variety"));

    m.def("delta", [](const std::string& spec) {
        return delta_c0(resolve_character(spec).ch).str();
    }, py::arg("spec"), "modified discriminant");

    m.def("nu", [](const std::string& spec, const std::string& alpha_sq, const std::string& beta) {
        ExtRat v = nu(resolve_character(spec).ch, TiltParam{rat(alpha_sq), rat(beta)});
        return v.str();
    }, py::arg("spec"), py::arg("alpha_sq"), py::arg("beta"));

    m.def("z_tilt",
          [](const std::string& spec, const std::string& alpha_sq, const std::string& beta) {
              auto [re, im] = z_tilt(resolve_character(spec).ch, TiltParam{rat(alpha_sq), rat(beta)});
              return py::make_tuple(re.str(), im.str());
          },
          py::arg("spec"), py::arg("alpha_sq"), py::arg("beta"));

    m.def("v_point", [](const std::string& spec) -> py::object {
        VPoint vp = v_point(resolve_character(spec).ch);
        if (vp.finite) return py::make_tuple(vp.x.str(), vp.y.str());
        return py::make_tuple("inf", vp.vertical ? "vertical" : vp.slope.str());
    }, py::arg("spec"));

    m.def("project_ku", [](const std::string& spec) {
        KClassKu v = project_ku_y(resolve_character(spec).ch);
        return py::make_tuple(v.a.get_str(), v.b.get_str());
    }, py::arg("spec"), "projection of a 5-fold class to the rank-2 lattice");

    m.def("walls",
          [](const std::string& spec, const std::string& beta, int bound, int threads) {
              auto walls = destabilizer_search(resolve_character(spec).ch, rat(beta), bound, threads);
              py::list out;
              for (const auto& w : walls) out.append(wall_to_dict(w));
              return out;
          },
          py::arg("spec"), py::arg("beta") = "-5/4", py::arg("bound") = 5, py::arg("threads") = 0);

    m.def("pick_tree", [](long a, long b) { return tree_to_dict(*nonempty_tree({Int(a), Int(b)})); },
          py::arg("a"), py::arg("b"));

    m.def("serre_orbit", [](long a, long b) {
        py::list out;
        for (const auto& v : serre_orbit({Int(a), Int(b)}))
            out.append(py::make_tuple(v.a.get_str(), v.b.get_str()));
        return out;
    }, py::arg("a"), py::arg("b"));

    m.def("gepner_check", [](const std::string& alpha_sq) {
        TiltParam p{rat(alpha_sq), Rational(-5, 4)};
        return gepner_rotation_check(gl_act(hex_normalizer(p), charge_matrix(p)));
    }, py::arg("alpha_sq") = "1/100");

    m.def("verify", [](int threads) {
        VerifyReport r = run_verify(threads);
        py::list checks;
        for (const auto& c : r.checks) {
            py::dict d;
            d["id"] = c.id;
            d["desc"] = c.desc;
            d["expected"] = c.expected;
            d["computed"] = c.computed;
            d["pass"] = c.pass;
            checks.append(d);
        }
        py::dict out;
        out["checks"] = checks;
        out["failures"] = r.failures();
        return out;
    }, py::arg("threads") = 0);

    m.def("plot_hexagon", [] { return plot_hexagon(); });
    m.def("plot_xieta", [](const std::vector<std::string>& points, bool ell0) {
        XiEtaPlotOptions opt;
        opt.ell0 = ell0;
        for (const auto& p : points) opt.points.push_back(resolve_character(p));
        return plot_xieta(opt);
    }, py::arg("points") = std::vector<std::string>{}, py::arg("ell0") = false);
}
