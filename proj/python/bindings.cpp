#include "hfconc/dinvariants.hpp"
#include "hfconc/obstruction.hpp"
#include "hfconc/whitehead.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hfconc;

namespace {

py::object fraction(const Rational& r)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.numerator(), r.denominator());
}

py::dict poly_dict(const LaurentPoly& p)
{
    py::dict out;
    for (auto [e, c] : p.terms())
        out[py::int_(e)] = c;
    return out;
}

BifilteredComplex square_of(const KnotSpec& knot)
{
    const BifilteredComplex c = staircase(knot).complex();
    return tensor(c, c);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Heegaard Floer invariants of twisted Whitehead doubles";

    py::register_exception<CfkError>(m, "CfkError", PyExc_ValueError);
    py::register_exception<DInvariantError>(m, "DInvariantError", PyExc_ValueError);
    py::register_exception<WhiteheadError>(m, "WhiteheadError", PyExc_ValueError);
    py::register_exception<F2Error>(m, "F2Error", PyExc_ValueError);

    py::class_<KnotSpec>(m, "KnotSpec")
        .def_static("unknot", &KnotSpec::unknot)
        .def_static("torus", &KnotSpec::torus, py::arg("p"), py::arg("q"))
        .def_static("family", &KnotSpec::family, py::arg("s"), py::arg("p"))
        .def_property_readonly("genus", &KnotSpec::genus)
        .def_property_readonly("name", &KnotSpec::name)
        .def("torus_params", &KnotSpec::torus_params)
        .def("__eq__", [](const KnotSpec& a, const KnotSpec& b) { return a == b; })
        .def("__repr__", [](const KnotSpec& k) { return "KnotSpec(" + k.name() + ")"; });

    m.def("alexander", [](const KnotSpec& k) { return poly_dict(alexander(k)); });
    m.def("whitehead_alexander", [](std::int64_t n) { return poly_dict(whitehead_alexander(n)); });
    m.def("tau", &tau);
    m.def("filtration_homology", &filtration_homology);
    m.def("reduced_filtration_homology", &reduced_filtration_homology);

    m.def("d_lens", [](std::int64_t p, std::int64_t q, std::int64_t i) { return fraction(d_lens(p, q, i)); });
    m.def("d_lens_2r1_2", [](std::int64_t r, std::int64_t j) { return fraction(d_lens_2r1_2(r, j)); });
    m.def("vk_shortcut_family", &vk_shortcut_family);
    m.def("hk_shortcut_family", &hk_shortcut_family);
    m.def(
        "vtable",
        [](int s, int p, int k_min, int k_max, bool oracle) {
            const VHProfile prof = oracle ? oracle_profile(square_of(KnotSpec::family(s, p)), k_min, k_max)
                                          : family_profile(s, p, k_min, k_max);
            std::vector<std::tuple<int, int, int>> rows;
            for (int k = k_min; k <= k_max; ++k)
                rows.emplace_back(k, prof.V(k), prof.H(k));
            return rows;
        },
        py::arg("s"), py::arg("p"), py::arg("k_min"), py::arg("k_max"), py::arg("oracle") = false,
        "Rows (k, V_k, H_k) of the family tensor square.");

    m.def("casson", [](std::int64_t n) { return casson_from_alexander(whitehead_alexander(n)); });
    m.def("fox_milnor_twist", &fox_milnor_twist);
    m.def("tau_whitehead", [](const KnotSpec& k, std::int64_t n) { return tau_whitehead({k, n}); });
    m.def("d_matsumoto", [](const KnotSpec& k, std::int64_t n) { return d_matsumoto({k, n}); });
    m.def("hf_plus", [](const KnotSpec& k, std::int64_t n) {
        const HFPlusDesc h = hf_plus_matsumoto({k, n});
        py::dict out;
        out["d"] = fraction(h.d);
        out["red"] = h.red;
        out["hat_rank"] = h.hat_rank();
        return out;
    });
    m.def("delta_whitehead", &delta_whitehead);
    m.def("delta_via_surgery", [](const KnotSpec& k, std::int64_t n) { return fraction(delta_via_surgery(k, n)); });
    m.def("thresholds", [](const KnotSpec& k) {
        const Thresholds t = thresholds(k);
        return std::make_tuple(t.t_tau, t.t_delta, t.t_d1);
    });

    m.def("obstruct", [](int s, int p, int mm) {
        const ObstructionReport r = obstruct(s, p, mm);
        py::list entries;
        for (const auto& e : r.entries)
            entries.append(py::make_tuple(e.l, e.spin_index, fraction(e.d)));
        py::dict out;
        out["n"] = r.n;
        out["pass"] = r.pass;
        out["entries"] = entries;
        return out;
    });
    m.def(
        "sweep",
        [](const std::vector<int>& s_values, int p_max, int m_max, int jobs) {
            py::gil_scoped_release release;
            return sweep(s_values, p_max, m_max, jobs);
        },
        py::arg("s_values"), py::arg("p_max"), py::arg("m_max"), py::arg("jobs") = 1);
}
