#include "hfinite/coherent.hpp"
#include "hfinite/errors.hpp"
#include "hfinite/serialize.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <random>
#include <sstream>

using namespace hfinite;
using io::json;

namespace {

struct RunConfig {
    std::vector<std::string> specs;
    std::vector<std::string> window_base;
    int window_radius = 6;
    std::string probes = "default";
    unsigned seed = 1;
    std::string out;
    std::string format = "text";
    std::string family = "A";
    int n = 2;
    int grid = 2;
};

hmodules::FreeHModule load_any(const std::string& path) {
    json j = io::read_json_file(path);
    if (j.is_object() && j.contains("format")) return io::load_module(j);
    return io::build_module(j);
}

liealg::Weight window_base(const RunConfig& cfg, const liealg::LieAlgebra& g) {
    const std::size_t n = static_cast<std::size_t>(g.rank());
    liealg::Weight w(n);
    if (!cfg.window_base.empty()) {
        if (cfg.window_base.size() != n) throw Error("--window-base needs " + std::to_string(n) + " rationals");
        for (std::size_t i = 0; i < n; ++i) w[i] = exactalg::parse_rat(cfg.window_base[i]);
        return w;
    }
    // a generic base drawn from the seed
    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<int> num(1, 9), den(11, 29);
    for (std::size_t i = 0; i < n; ++i) w[i] = exactalg::make_rat(num(rng), den(rng));
    return w;
}

std::vector<weightcat::Probe> select_probes(const RunConfig& cfg, const liealg::LieAlgebra& g) {
    auto catalog = weightcat::default_probe_catalog(g);
    if (cfg.probes == "default" || cfg.probes == "all") return catalog;
    std::vector<weightcat::Probe> out;
    std::stringstream ss(cfg.probes);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& p) { return p.name == name; });
        if (it == catalog.end()) throw Error("unknown probe " + name);
        out.push_back(*it);
    }
    if (out.empty()) throw Error("empty probe selection");
    return out;
}

void emit(const RunConfig& cfg, const json& report, const std::string& text) {
    std::cout << (cfg.format == "structured" ? report.dump(2) + "\n" : text);
}

void emit_to_out(const RunConfig& cfg, const json& report, const std::string& text) {
    emit(cfg, report, text);
    if (!cfg.out.empty()) io::write_text_file(cfg.out, report.dump(2) + "\n");
}

std::string weight_text(const liealg::Weight& w) { return w.to_string(); }

int cmd_build(const RunConfig& cfg) {
    if (cfg.specs.size() != 1) throw Error("build takes exactly one --spec");
    auto M = load_any(cfg.specs[0]);
    auto report = hmodules::validate_bracket(M);
    json dump = io::dump_module(M);
    json out = {{"command", "build"},
                {"algebra", M.algebra().name()},
                {"rank", M.rank()},
                {"metadata", M.metadata()},
                {"bracket", io::bracket_report_json(M, report)}};
    std::ostringstream text;
    auto ctor = M.metadata().find("constructor");
    text << "algebra     " << M.algebra().name() << "\n"
         << "constructor " << (ctor == M.metadata().end() ? "?" : ctor->second) << "\n"
         << "rank        " << M.rank() << "\n"
         << "brackets    " << report.pairs_checked << " pairs, " << report.failures.size() << " failures, "
         << report.cartan_failures.size() << " Cartan failures\n"
         << "result      " << (report.pass() ? "PASS" : "FAIL") << "\n";
    emit(cfg, out, text.str());
    if (!cfg.out.empty()) io::write_text_file(cfg.out, dump.dump(2) + "\n");
    return report.pass() ? 0 : 1;
}

int cmd_certify(const RunConfig& cfg) {
    if (cfg.specs.size() != 1) throw Error("certify takes exactly one --spec");
    auto M = load_any(cfg.specs[0]);
    auto bracket = hmodules::validate_bracket(M);
    const auto& g = M.algebra();
    auto W = weightcat::weighting(M, window_base(cfg, g), cfg.window_radius);
    auto probes = select_probes(cfg, g);
    auto cert = coherent::certify_almost_coherent(W, probes);
    bool pass = cert.pass && bracket.pass();
    json out = {{"command", "certify"},
                {"algebra", g.name()},
                {"bracket", io::bracket_report_json(M, bracket)},
                {"certificate", io::certificate_json(W, cert)},
                {"pass", pass}};
    std::ostringstream text;
    text << "algebra     " << g.name() << "\n"
         << "window      base " << weight_text(W.base()) << ", radius " << W.radius() << ", " << cert.window_slots
         << " slots\n"
         << "brackets    " << (bracket.pass() ? "pass" : "FAIL") << "\n"
         << "degree      " << cert.degree << "\n";
    for (std::size_t i = 0; i < probes.size(); ++i) {
        text << "  " << probes[i].name << ": ";
        if (!cert.fit_errors[i].empty())
            text << "error: " << cert.fit_errors[i];
        else if (cert.fits[i].poly)
            text << cert.fits[i].poly->to_string() << (cert.fits[i].exact() ? "" : "  (holdout mismatch)");
        text << "\n";
    }
    text << "exceptional " << cert.exceptional_slots.size() << " slots\n"
         << "result      " << (pass ? "PASS" : "FAIL") << "\n";
    emit_to_out(cfg, out, text.str());
    return pass ? 0 : 1;
}

int cmd_compare(const RunConfig& cfg) {
    if (cfg.specs.size() != 2) throw Error("compare takes exactly two --spec options");
    auto A = load_any(cfg.specs[0]);
    auto B = load_any(cfg.specs[1]);
    const auto& g = A.algebra();
    if (g.family() != B.algebra().family() || g.rank() != B.algebra().rank())
        throw Error("modules belong to different algebras");
    auto base = window_base(cfg, g);
    auto WA = weightcat::weighting(A, base, cfg.window_radius);
    auto WB = weightcat::weighting(B, base, cfg.window_radius);
    auto probes = select_probes(cfg, g);
    auto v = weightcat::almost_equivalent(WA, WB, probes);
    auto fa = hmodules::central_fingerprint(A, hmodules::default_fingerprint_degrees(g));
    auto fb = hmodules::central_fingerprint(B, hmodules::default_fingerprint_degrees(g));
    bool same_fp = fa == fb;
    json out = {{"command", "compare"},
                {"algebra", g.name()},
                {"verdict", io::verdict_json(v)},
                {"fingerprints_equal", same_fp}};
    std::ostringstream text;
    text << "algebra      " << g.name() << "\n"
         << "window       base " << weight_text(base) << ", radius " << cfg.window_radius << "\n"
         << "compared     " << v.compared_slots << " slots, " << probes.size() << " probes\n"
         << "exceptional  " << v.exceptional.size() << " (threshold " << v.threshold << ")\n";
    for (const auto& w : v.exceptional) text << "  " << weight_text(w) << "\n";
    text << "fingerprints " << (same_fp ? "equal" : "differ") << "\n"
         << "verdict      " << (v.equivalent ? "almost-equivalent (evidence)" : "not almost-equivalent") << "\n";
    emit_to_out(cfg, out, text.str());
    return v.equivalent ? 0 : 1;
}

int cmd_degrees(const RunConfig& cfg) {
    auto g = liealg::LieAlgebra::make(liealg::parse_family(cfg.family), cfg.n);
    if (cfg.grid < 0) throw Error("--grid must be non-negative");
    std::vector<liealg::Weight> grid;
    std::vector<int> labels(cfg.n, 0);
    for (;;) {
        std::vector<exactalg::Rat> r(labels.begin(), labels.end());
        grid.push_back(g->from_dynkin(r));
        int i = 0;
        while (i < cfg.n && labels[i] == cfg.grid) labels[i++] = 0;
        if (i == cfg.n) break;
        ++labels[i];
    }
    json rows = json::array();
    std::ostringstream text;
    text << "lambda";
    for (int k = 1; k <= cfg.n; ++k) text << "\tdeg_" << k;
    text << "\tidentity\n";
    bool all_ok = true;
    for (const auto& l : grid) {
        json row = {{"lambda", io::rats_json(g->dynkin_labels(l))}};
        json degs = json::array();
        text << weight_text(liealg::Weight(g->dynkin_labels(l)));
        for (int k = 1; k <= cfg.n; ++k) {
            auto d = coherent::deg_k(*g, l, k);
            degs.push_back(d.get_str());
            text << "\t" << d.get_str();
        }
        bool ok = true;
        for (const auto& r : coherent::deg_identity_check(*g, l)) ok = ok && r.ok();
        all_ok = all_ok && ok;
        row["deg"] = degs;
        row["identity"] = ok ? "ok" : "FAIL";
        rows.push_back(row);
        text << "\t" << (ok ? "ok" : "FAIL") << "\n";
    }
    std::size_t rank = coherent::deg_evaluation_rank(*g, grid);
    bool independent = rank == static_cast<std::size_t>(cfg.n);
    text << "independence rank " << rank << " of " << cfg.n << "\n";
    json out = {{"command", "degrees"},
                {"algebra", g->name()},
                {"rows", rows},
                {"independence_rank", rank},
                {"pass", all_ok && independent}};
    emit_to_out(cfg, out, text.str());
    return all_ok && independent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions and certificates for U(h)-free modules"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* sub, bool window) {
        sub->add_option("--out", cfg.out, "Output file");
        sub->add_option("--format", cfg.format, "Report format on stdout")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--seed", cfg.seed, "Seed for sampled choices");
        if (window) {
            sub->add_option("--window-base", cfg.window_base, "Base weight, one rational per coordinate");
            sub->add_option("--window-radius", cfg.window_radius, "Box radius in root-lattice coordinates")
                ->check(CLI::NonNegativeNumber);
            sub->add_option("--probes", cfg.probes, "default, or a comma list of catalog probe names");
        }
    };
    auto* build = app.add_subcommand("build", "Construct a module, validate it and write a dump");
    build->add_option("--spec", cfg.specs, "Module spec or dump")->required();
    common(build, false);
    auto* certify = app.add_subcommand("certify", "Certify almost-coherent behaviour on a window");
    certify->add_option("--spec", cfg.specs, "Module spec or dump")->required();
    common(certify, true);
    auto* compare = app.add_subcommand("compare", "Compare two modules' trace tables");
    compare->add_option("--spec", cfg.specs, "Two module specs or dumps")->required()->expected(1, 2);
    common(compare, true);
    auto* degrees = app.add_subcommand("degrees", "Degree polynomial table");
    degrees->add_option("--family", cfg.family, "Algebra family")->check(CLI::IsMember({"A"}));
    degrees->add_option("--n", cfg.n, "Rank")->check(CLI::PositiveNumber);
    degrees->add_option("--grid", cfg.grid, "Largest Dynkin label in the grid");
    common(degrees, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        if (*build) return cmd_build(cfg);
        if (*certify) return cmd_certify(cfg);
        if (*compare) return cmd_compare(cfg);
        if (*degrees) return cmd_degrees(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
