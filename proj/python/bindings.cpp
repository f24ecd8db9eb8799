#include "hfinite/coherent.hpp"
#include "hfinite/constructors.hpp"
#include "hfinite/errors.hpp"
#include "hfinite/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hfinite;
using io::json;
using hmodules::FreeHModule;

namespace {

liealg::AlgebraPtr algebra(const std::string& family, int n) {
    return liealg::LieAlgebra::make(liealg::parse_family(family), n);
}

liealg::Weight dynkin_weight(const liealg::LieAlgebra& g, const std::vector<std::string>& labels) {
    std::vector<exactalg::Rat> r;
    for (const auto& s : labels) r.push_back(exactalg::parse_rat(s));
    if (r.size() != static_cast<std::size_t>(g.rank())) throw Error("expected one Dynkin label per simple root");
    return g.from_dynkin(r);
}

liealg::Weight coords(const liealg::LieAlgebra& g, const std::vector<std::string>& values) {
    liealg::Weight w(static_cast<std::size_t>(g.rank()));
    if (values.size() != w.size()) throw Error("expected one coordinate per Cartan basis element");
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = exactalg::parse_rat(values[i]);
    return w;
}

std::vector<std::string> rat_strings(const std::vector<exactalg::Rat>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(exactalg::rat_to_string(r));
    return out;
}

std::vector<weightcat::Probe> probes_for(const liealg::LieAlgebra& g, const std::vector<std::string>& names) {
    auto catalog = weightcat::default_probe_catalog(g);
    if (names.empty()) return catalog;
    std::vector<weightcat::Probe> out;
    for (const auto& name : names) {
        auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& p) { return p.name == name; });
        if (it == catalog.end()) throw Error("unknown probe " + name);
        out.push_back(*it);
    }
    return out;
}

std::string certify(const FreeHModule& M, const std::vector<std::string>& base, int radius,
                    const std::vector<std::string>& probes) {
    const auto& g = M.algebra();
    auto W = weightcat::weighting(M, coords(g, base), radius);
    auto cert = coherent::certify_almost_coherent(W, probes_for(g, probes));
    return io::certificate_json(W, cert).dump();
}

std::string compare(const FreeHModule& A, const FreeHModule& B, const std::vector<std::string>& base, int radius,
                    std::optional<std::size_t> threshold) {
    const auto& g = A.algebra();
    auto b = coords(g, base);
    auto WA = weightcat::weighting(A, b, radius);
    auto WB = weightcat::weighting(B, b, radius);
    return io::verdict_json(weightcat::almost_equivalent(WA, WB, weightcat::default_probe_catalog(g), threshold)).dump();
}

std::string trace_polynomial(const FreeHModule& M, const std::vector<std::string>& base, int radius,
                             const std::vector<std::string>& word) {
    const auto& g = M.algebra();
    std::vector<liealg::Label> letters;
    for (const auto& name : word) letters.push_back(g.find(name));
    auto W = weightcat::weighting(M, coords(g, base), radius);
    auto fit = weightcat::trace_polynomial(W, liealg::UEAWord::word(letters));
    if (!fit.exact()) throw Error("trace values do not fit a polynomial on this window");
    return fit.poly->to_string();
}

py::dict normal_form(const std::string& family, int n, const std::vector<std::string>& dynkin) {
    auto g = algebra(family, n);
    auto c = coherent::wt_normal_form(*g, dynkin_weight(*g, dynkin));
    py::dict out;
    out["kind"] = coherent::class_name(c.kind);
    out["normal_form"] = rat_strings(g->dynkin_labels(c.normal_form));
    out["singular_index"] = c.singular_index ? py::cast(*c.singular_index) : py::none();
    return out;
}

std::vector<std::vector<int>> word_list(int n, const std::vector<std::string>& dynkin, int family) {
    auto g = algebra("A", n);
    auto c = coherent::wt_normal_form(*g, dynkin_weight(*g, dynkin));
    auto words = coherent::admissible_word_list(*g, c, family);
    for (auto& w : words)
        for (auto& i : w) ++i;
    return words;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bindings for the hfinite library";

    py::register_exception<Error>(m, "HfiniteError", PyExc_ValueError);

    py::class_<FreeHModule>(m, "Module")
        .def_property_readonly("rank", &FreeHModule::rank)
        .def_property_readonly("algebra", [](const FreeHModule& M) { return M.algebra().name(); })
        .def_property_readonly("metadata", &FreeHModule::metadata)
        .def("labels",
             [](const FreeHModule& M) {
                 std::vector<std::string> out;
                 for (liealg::Label x = 0; x < M.algebra().dim(); ++x) out.push_back(M.algebra().basis(x).name);
                 return out;
             })
        .def("action",
             [](const FreeHModule& M, const std::string& label) {
                 const auto& A = M.action(M.algebra().find(label));
                 std::vector<std::vector<std::string>> out(A.rows());
                 for (std::size_t i = 0; i < A.rows(); ++i)
                     for (std::size_t j = 0; j < A.cols(); ++j) out[i].push_back(A(i, j).to_string());
                 return out;
             })
        .def("dump_json", [](const FreeHModule& M) { return io::dump_module(M).dump(); })
        .def("bracket_report_json",
             [](const FreeHModule& M) { return io::bracket_report_json(M, hmodules::validate_bracket(M)).dump(); })
        .def("fingerprint", [](const FreeHModule& M) {
            std::map<int, std::optional<std::string>> out;
            for (const auto& [k, v] : hmodules::central_fingerprint(M, hmodules::default_fingerprint_degrees(M.algebra())))
                out[k] = v ? std::optional<std::string>(exactalg::rat_to_string(*v)) : std::nullopt;
            return out;
        });

    m.def("build_module_json", [](const std::string& spec) { return io::build_module(json::parse(spec)); });
    m.def("load_module_json", [](const std::string& dump) { return io::load_module(json::parse(dump)); });
    m.def("tensor", [](const FreeHModule& M, const std::vector<std::string>& dynkin) {
        return hmodules::tensor_finite(M, liealg::irrep(M.algebra(), dynkin_weight(M.algebra(), dynkin)));
    });
    m.def("dual", &hmodules::dual_module);
    m.def("certify_json", &certify, py::arg("module"), py::arg("base"), py::arg("radius") = 6,
          py::arg("probes") = std::vector<std::string>{});
    m.def("compare_json", &compare, py::arg("a"), py::arg("b"), py::arg("base"), py::arg("radius") = 6,
          py::arg("threshold") = std::nullopt);
    m.def("trace_polynomial", &trace_polynomial, py::arg("module"), py::arg("base"), py::arg("radius"), py::arg("word"));
    m.def("deg_k", [](int n, const std::vector<std::string>& dynkin, int k) {
        auto g = algebra("A", n);
        return coherent::deg_k(*g, dynkin_weight(*g, dynkin), k).get_str();
    });
    m.def("normal_form", &normal_form, py::arg("family"), py::arg("n"), py::arg("dynkin"));
    m.def("admissible_word_list", &word_list, py::arg("n"), py::arg("dynkin"), py::arg("family") = 1);
}
