#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

#include "cdga/cli.hpp"
#include "cdga/dsl.hpp"
#include "cdga/errors.hpp"
#include "cdga/report.hpp"

namespace py = pybind11;

namespace {

// Sources are catalog names or full algebra descriptions; reading files is
// left to the caller.
cdga::Cdga load(const std::string& source) {
    std::string text;
    if (auto cat = cdga::catalog_source(source))
        text = *cat;
    else
        text = source;
    auto res = cdga::parse_algebra(text);
    if (!res.ok()) {
        std::string msg;
        for (const auto& d : res.diagnostics) {
            if (!msg.empty()) msg += "\n";
            msg += cdga::format_diagnostic(d);
        }
        throw std::invalid_argument(msg);
    }
    return *res.cdga;
}

cdga::Element elem(const cdga::Cdga& c, const std::string& text) {
    auto res = cdga::parse_element(c.algebra(), text);
    if (!res.ok()) {
        std::string msg;
        for (const auto& d : res.diagnostics) {
            if (!msg.empty()) msg += "\n";
            msg += cdga::format_diagnostic(d);
        }
        throw std::invalid_argument(msg);
    }
    return *res.element;
}

py::object to_py(const cdga::Json& j) {
    if (j.is_object()) {
        py::dict d;
        for (const auto& [k, v] : j.items()) d[py::str(k)] = to_py(v);
        return d;
    }
    if (j.is_array()) {
        py::list l;
        for (const auto& v : j) l.append(to_py(v));
        return l;
    }
    if (j.is_string()) return py::str(j.get<std::string>());
    if (j.is_boolean()) return py::bool_(j.get<bool>());
    if (j.is_number_integer()) return py::int_(j.get<long long>());
    if (j.is_number_unsigned()) return py::int_(j.get<unsigned long long>());
    if (j.is_number_float()) return py::float_(j.get<double>());
    return py::none();
}

int default_top(const cdga::Cdga& c) {
    int s = 0;
    for (const auto& g : c.algebra()->generators()) s += g.degree;
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact cohomology and Massey products for finitely generated "
              "graded-commutative differential algebras";
    m.attr("engine_version") = cdga::engine_version;

    py::register_exception<cdga::precondition_error>(m, "PreconditionError",
                                                     PyExc_ValueError);
    py::register_exception<cdga::validation_error>(m, "ValidationError",
                                                   PyExc_ValueError);
    py::register_exception<cdga::internal_error>(m, "InternalError",
                                                 PyExc_RuntimeError);

    m.def("catalog_names", &cdga::catalog_names, "built-in complex names");
    m.def(
        "catalog_source",
        [](const std::string& name) -> py::object {
            auto s = cdga::catalog_source(name);
            return s ? py::object(py::str(*s)) : py::object(py::none());
        },
        py::arg("name"), "text of a built-in complex, or None");

    m.def(
        "validate",
        [](const std::string& source) {
            auto res = cdga::parse_algebra(source);
            std::vector<std::string> out;
            for (const auto& d : res.diagnostics)
                out.push_back(cdga::format_diagnostic(d));
            return out;
        },
        py::arg("source"), "diagnostics for an algebra description (empty when valid)");

    m.def(
        "d",
        [](const std::string& source, const std::string& element) {
            auto c = load(source);
            return c.d(elem(c, element)).str();
        },
        py::arg("source"), py::arg("element"), "differential of an element");

    m.def(
        "betti",
        [](const std::string& source, int max_degree) {
            auto c = load(source);
            std::vector<int> out;
            for (int k = 0; k <= max_degree; ++k)
                out.push_back(cdga::cohomology(c, k).dim());
            return out;
        },
        py::arg("source"), py::arg("max_degree"), "Betti numbers 0..max_degree");

    m.def(
        "cohomology",
        [](const std::string& source, int max_degree) {
            auto c = load(source);
            return to_py(cdga::json_cohomology(c, max_degree));
        },
        py::arg("source"), py::arg("max_degree"),
        "Betti numbers and canonical representatives");

    m.def(
        "exactness_witness",
        [](const std::string& source, const std::string& element) -> py::object {
            auto c = load(source);
            auto w = cdga::exactness_witness(c, elem(c, element));
            return w ? py::object(py::str(w->str())) : py::object(py::none());
        },
        py::arg("source"), py::arg("element"),
        "canonical primitive of a closed element, or None when not exact");

    m.def(
        "cup",
        [](const std::string& source, const std::string& a, const std::string& b) {
            auto c = load(source);
            cdga::Element ea = elem(c, a), eb = elem(c, b);
            auto pa = ea.homogeneous_degree(), pb = eb.homogeneous_degree();
            if (!pa || !pb)
                throw cdga::precondition_error("cup factors must be nonzero homogeneous");
            cdga::CohomologySpace hp(c, *pa), hq(c, *pb);
            auto cls = cdga::cup(hp, hq, hp.class_of(ea), hq.class_of(eb));
            cdga::Json j;
            j["degree"] = cls.degree;
            j["representative"] = cls.representative.str();
            j["coords"] = cdga::json_vec(cls.coords);
            return to_py(j);
        },
        py::arg("source"), py::arg("a"), py::arg("b"), "cup product of two classes");

    m.def(
        "massey",
        [](const std::string& source, const std::string& a1, const std::string& a2,
           const std::string& a3) {
            auto c = load(source);
            auto r = cdga::triple_massey(c, elem(c, a1), elem(c, a2), elem(c, a3));
            return to_py(cdga::json_massey(r));
        },
        py::arg("source"), py::arg("a1"), py::arg("a2"), py::arg("a3"),
        "triple product of three cocycle classes");

    m.def(
        "amassey",
        [](const std::string& source, const std::string& a, const std::string& b1,
           const std::string& b2, const std::string& b3, int max_degree) {
            auto c = load(source);
            int cap = max_degree >= 0 ? max_degree : std::numeric_limits<int>::max();
            auto r = cdga::a_massey(c, elem(c, a), elem(c, b1), elem(c, b2),
                                    elem(c, b3), cap);
            return to_py(cdga::json_amassey(r));
        },
        py::arg("source"), py::arg("a"), py::arg("b1"), py::arg("b2"), py::arg("b3"),
        py::arg("max_degree") = -1, "symmetric product <a; b1, b2, b3>");

    m.def(
        "scan",
        [](const std::string& source, int p1, int p2, int p3) {
            auto c = load(source);
            return to_py(cdga::json_scan(cdga::massey_scan(c, p1, p2, p3))["hits"]);
        },
        py::arg("source"), py::arg("p1"), py::arg("p2"), py::arg("p3"),
        "non-vanishing triple products among basis classes");

    m.def(
        "gysin",
        [](const std::string& source, const std::string& omega, int max_degree) {
            auto c = load(source);
            int top = max_degree >= 0 ? max_degree : default_top(c) + 1;
            return to_py(cdga::json_gysin(cdga::gysin_report(c, elem(c, omega), top)));
        },
        py::arg("source"), py::arg("omega"), py::arg("max_degree") = -1,
        "circle extension and long exact sequence data");

    m.def(
        "tensor",
        [](const std::string& left, const std::string& right, int max_degree) {
            auto cl = load(left);
            auto cr = load(right);
            auto t = cdga::tensor_product(cl, cr);
            int top = max_degree >= 0 ? max_degree : default_top(t.total);
            cdga::Json j;
            cdga::Json gens = cdga::Json::array();
            for (const auto& g : t.total.algebra()->generators())
                gens.push_back(cdga::Json{{"name", g.name}, {"degree", g.degree}});
            j["generators"] = std::move(gens);
            j.update(cdga::json_cohomology(t.total, top));
            return to_py(j);
        },
        py::arg("left"), py::arg("right"), py::arg("max_degree") = -1,
        "cohomology of a tensor product");

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cdga::run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "run one command line; returns (exit_code, stdout, stderr)");
}
