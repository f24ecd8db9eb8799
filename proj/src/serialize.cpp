#include "hfinite/serialize.hpp"

#include "hfinite/automorphism.hpp"
#include "hfinite/constructors.hpp"
#include "hfinite/errors.hpp"
#include "hfinite/weyl_carrier.hpp"

#include <fstream>
#include <sstream>

namespace hfinite::io {

using exactalg::Poly;
using exactalg::PolyMatrix;
using exactalg::Rat;
using hmodules::FreeHModule;
using liealg::AlgebraPtr;
using liealg::Label;
using liealg::LieAlgebra;
using liealg::Weight;

json rat_json(const Rat& r) { return exactalg::rat_to_string(r); }

Rat json_rat(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return exactalg::parse_rat(j.get<std::string>());
    throw Error("expected a rational, got " + j.dump());
}

json rats_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rat_json(r));
    return out;
}

std::vector<Rat> json_rats(const json& j) {
    if (!j.is_array()) throw Error("expected a list of rationals, got " + j.dump());
    std::vector<Rat> out;
    for (const auto& x : j) out.push_back(json_rat(x));
    return out;
}

namespace {

AlgebraPtr algebra_of(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("n")) throw Error("algebra needs family and n");
    return LieAlgebra::make(liealg::parse_family(j.at("family").get<std::string>()), j.at("n").get<int>());
}

json algebra_json(const LieAlgebra& g) { return {{"family", liealg::family_name(g.family())}, {"n", g.rank()}}; }

std::vector<Rat> sized(const json& params, const char* key, std::size_t n) {
    if (!params.contains(key)) throw Error(std::string("missing parameter ") + key);
    auto v = json_rats(params.at(key));
    if (v.size() != n) throw Error(std::string("parameter ") + key + " must have " + std::to_string(n) + " entries");
    return v;
}

FreeHModule build_with(const AlgebraPtr& g, const json& spec);

FreeHModule construct(const AlgebraPtr& g, const json& spec) {
    const std::string ctor = spec.at("constructor").get<std::string>();
    const json params = spec.value("params", json::object());
    const std::size_t n = static_cast<std::size_t>(g->rank());
    auto base = [&]() {
        if (!params.contains("base")) throw Error(ctor + " needs a base module spec");
        json inner = params.at("base");
        AlgebraPtr h = inner.contains("algebra") ? algebra_of(inner.at("algebra")) : g;
        if (h != g && (h->family() != g->family() || h->rank() != g->rank()))
            throw Error("base module belongs to a different algebra");
        return build_with(g, inner);
    };
    if (ctor == "m0") return hmodules::m0(g);
    if (ctor == "exponential") {
        std::set<int> S;
        for (const auto& i : params.value("S", json::array())) {
            int k = i.get<int>();
            if (k < 1 || k > static_cast<int>(n)) throw Error("S indices must lie in 1..n");
            S.insert(k - 1);
        }
        return hmodules::exponential_module(g, sized(params, "b", n), Weight(sized(params, "lambda", n)), S);
    }
    if (ctor == "verma") {
        std::vector<Rat> eps = params.contains("eps") ? sized(params, "eps", n)
                                                      : g->epsilon_coords(Weight(sized(params, "lambda", n)));
        liealg::ParabolicComplement q(g, sized(params, "b", n));
        return hmodules::parabolic_verma(q, liealg::irrep_gl(static_cast<int>(n), eps));
    }
    if (ctor == "twist") {
        FreeHModule M = base();
        if (params.contains("diag")) return hmodules::twist(M, liealg::make_diag(g, json_rats(params.at("diag"))));
        if (params.value("tau", false)) return hmodules::twist(M, liealg::make_tau(g));
        throw Error("twist needs tau or diag");
    }
    if (ctor == "tensor") {
        FreeHModule M = base();
        return hmodules::tensor_finite(M, liealg::irrep(*g, Weight(sized(params, "V", n))));
    }
    if (ctor == "dual") return hmodules::dual_module(base());
    throw Error("unknown constructor " + ctor);
}

FreeHModule build_with(const AlgebraPtr& g, const json& spec) {
    FreeHModule M = construct(g, spec);
    M.set_metadata("constructor", spec.at("constructor").get<std::string>());
    M.set_metadata("spec", spec.dump());
    return M;
}

}  // namespace

FreeHModule build_module(const json& spec) {
    if (!spec.is_object() || !spec.contains("constructor")) throw Error("module spec needs a constructor");
    if (!spec.contains("algebra")) throw Error("module spec needs an algebra");
    try {
        return build_with(algebra_of(spec.at("algebra")), spec);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed module spec: ") + e.what());
    }
}

json dump_module(const FreeHModule& M) {
    const auto& g = M.algebra();
    json labels = json::array(), actions = json::array();
    for (Label x = 0; x < g.dim(); ++x) {
        labels.push_back(g.basis(x).name);
        json rows = json::array();
        const PolyMatrix& A = M.action(x);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(A(i, j).to_string());
            rows.push_back(row);
        }
        actions.push_back(rows);
    }
    return {{"format", "hfinite-module"},
            {"version", 1},
            {"algebra", algebra_json(g)},
            {"rank", M.rank()},
            {"labels", labels},
            {"actions", actions},
            {"metadata", M.metadata()}};
}

FreeHModule load_module(const json& dump) {
    try {
        if (dump.value("format", "") != "hfinite-module") throw Error("not a module dump");
        AlgebraPtr g = algebra_of(dump.at("algebra"));
        const std::size_t rank = dump.at("rank").get<std::size_t>();
        const auto& labels = dump.at("labels");
        const auto& actions = dump.at("actions");
        if (labels.size() != g->dim() || actions.size() != g->dim()) throw Error("dump has the wrong number of labels");
        const std::size_t n = static_cast<std::size_t>(g->rank());
        std::vector<PolyMatrix> mats;
        for (Label x = 0; x < g->dim(); ++x) {
            if (labels[x].get<std::string>() != g->basis(x).name)
                throw Error("dump label " + labels[x].get<std::string>() + " does not match " + g->basis(x).name);
            const auto& rows = actions[x];
            if (rows.size() != rank) throw Error("action matrix has the wrong number of rows");
            PolyMatrix A(rank, rank, n);
            for (std::size_t i = 0; i < rank; ++i) {
                if (rows[i].size() != rank) throw Error("action matrix has the wrong number of columns");
                for (std::size_t j = 0; j < rank; ++j) A(i, j) = Poly::parse(rows[i][j].get<std::string>(), n);
            }
            mats.push_back(std::move(A));
        }
        std::map<std::string, std::string> meta;
        if (dump.contains("metadata")) meta = dump.at("metadata").get<std::map<std::string, std::string>>();
        return FreeHModule(g, rank, std::move(mats), meta);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed module dump: ") + e.what());
    }
}

json bracket_report_json(const FreeHModule& M, const hmodules::BracketReport& r) {
    const auto& g = M.algebra();
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({g.basis(f.a).name, g.basis(f.b).name});
    json cartan = json::array();
    for (const auto& f : r.cartan_failures) cartan.push_back(g.basis(f.h).name);
    return {{"pairs_checked", r.pairs_checked}, {"failures", failures}, {"cartan_failures", cartan}, {"pass", r.pass()}};
}

namespace {

json slots_json(const weightcat::WeightWindow& W, const std::vector<std::size_t>& slots) {
    json out = json::array();
    for (auto s : slots) out.push_back(rats_json(W.slot(s).weight.c));
    return out;
}

}  // namespace

json fit_json(const weightcat::WeightWindow& W, const weightcat::PolynomialFit& f) {
    return {{"degree", f.degree},
            {"polynomial", f.poly ? json(f.poly->to_string()) : json(nullptr)},
            {"training_points", f.training.size()},
            {"holdout_points", f.holdout.size()},
            {"residual_slots", slots_json(W, f.residual_slots)},
            {"exact", f.exact()}};
}

json certificate_json(const weightcat::WeightWindow& W, const coherent::AlmostCoherentCertificate& c) {
    json probes = json::array();
    for (std::size_t i = 0; i < c.probes.size(); ++i) {
        json p = {{"name", c.probes[i].name}, {"word", c.probes[i].word.to_string(W.algebra())}};
        if (c.fit_errors[i].empty())
            p["fit"] = fit_json(W, c.fits[i]);
        else
            p["error"] = c.fit_errors[i];
        probes.push_back(p);
    }
    return {{"degree", c.degree},
            {"window", {{"base", rats_json(c.base.c)}, {"radius", c.radius}, {"slots", c.window_slots}}},
            {"probes", probes},
            {"exceptional_slots", slots_json(W, c.exceptional_slots)},
            {"pass", c.pass}};
}

json verdict_json(const weightcat::EquivalenceVerdict& v) {
    json exceptional = json::array();
    for (const auto& w : v.exceptional) exceptional.push_back(rats_json(w.c));
    return {{"equivalent", v.equivalent},
            {"kind", "evidence"},
            {"compared_slots", v.compared_slots},
            {"threshold", v.threshold},
            {"exceptional", exceptional},
            {"probes", v.probes}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error("cannot parse " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

}  // namespace hfinite::io
