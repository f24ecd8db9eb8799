// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "hfinite/automorphism.hpp"
#include "hfinite/coherent.hpp"
#include "hfinite/constructors.hpp"
#include "hfinite/weight_window.hpp"
#include "hfinite/weyl.hpp"
#include "hfinite/weyl_carrier.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace hfinite;
using namespace hfinite::liealg;
using namespace hfinite::hmodules;
using exactalg::make_rat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failures without stopping at the first one.
class Checker {
public:
    void require(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream s;
        s << summary << "; " << checks_ << " checks";
        if (failed_) {
            s << ", " << failed_ << " failed:";
            for (const auto& f : failures_) s << " [" << f << "]";
        }
        return {failed_ == 0, s.str()};
    }

private:
    std::size_t checks_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

std::set<int> subset(int mask, int n) {
    std::set<int> s;
    for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s.insert(i);
    return s;
}

std::string set_text(const std::set<int>& S) {
    std::string out = "{";
    for (int i : S) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
    return out + "}";
}

std::string rat_list_to_string(const std::vector<Rat>& v) { return exactalg::rat_list_to_string(v); }

struct ExpCase {
    AlgebraPtr g;
    std::vector<Rat> b;
    Weight lambda;
    std::set<int> S;
    std::string name() const {
        std::ostringstream s;
        s << "E(" << rat_list_to_string(b) << "; " << lambda.to_string() << "; " << set_text(S) << ")";
        return s.str();
    }
};

// n in {1, 2}, every S, b in {(1), (1,1), (2,-1/3)}, five dominant lambda per rank.
std::vector<ExpCase> exponential_grid() {
    std::vector<ExpCase> out;
    std::map<int, std::vector<std::vector<Rat>>> bs{{1, {{Rat(1)}}}, {2, {{Rat(1), Rat(1)}, {Rat(2), make_rat(-1, 3)}}}};
    std::map<int, std::vector<std::vector<Rat>>> lambdas{
        {1, {{Rat(0)}, {Rat(1)}, {make_rat(1, 2)}, {make_rat(-1, 3)}, {Rat(2)}}},
        {2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), make_rat(1, 2)}, {Rat(2), make_rat(-1, 3)}, {Rat(1), Rat(1)}}}};
    for (int n : {1, 2}) {
        auto g = LieAlgebra::make(Family::A, n);
        for (const auto& b : bs[n])
            for (const auto& l : lambdas[n])
                for (int mask = 0; mask < (1 << n); ++mask) out.push_back({g, b, g->from_dynkin(l), subset(mask, n)});
    }
    return out;
}

// The module, its tau and diagonal twists, its dual and its tensor with the
// first fundamental representation.
std::vector<std::pair<std::string, FreeHModule>> with_derived(const std::string& name, const FreeHModule& M,
                                                              const AlgebraPtr& g) {
    std::vector<Rat> diag;
    const int scalars = g->family() == Family::A ? g->rank() + 1 : g->rank();
    for (int i = 0; i < scalars; ++i) diag.push_back(make_rat(i + 2, 2 * i + 1));
    return {{name, M},
            {name + "^tau", twist(M, make_tau(g))},
            {name + "^diag", twist(M, make_diag(g, diag))},
            {name + "^dual", dual_module(M)},
            {name + " (x) L(omega_1)", tensor_finite(M, irrep(*g, g->fundamental_weight(0)))}};
}

Outcome bracket_suite() {
    Checker c;
    std::size_t modules = 0;
    auto check_all = [&](const std::string& name, const FreeHModule& M, const AlgebraPtr& g) {
        for (const auto& [label, X] : with_derived(name, M, g)) {
            auto r = validate_bracket(X);
            c.require(r.pass() && r.pairs_checked > 0, label);
            ++modules;
        }
    };
    for (int n : {2, 3}) {
        auto g = LieAlgebra::make(Family::C, n);
        check_all("M0 on " + g->name(), m0(g), g);
    }
    for (const auto& e : exponential_grid()) check_all(e.name(), exponential_module(e.g, e.b, e.lambda, e.S), e.g);
    struct VermaCase {
        int n;
        std::vector<Rat> b;
        std::vector<std::vector<Rat>> eps;
    };
    for (const auto& v : {VermaCase{1, {Rat(2)}, {{make_rat(1, 3)}, {Rat(-2)}}},
                          VermaCase{2, {Rat(1), Rat(1)}, {{Rat(1), Rat(0)}, {make_rat(7, 3), make_rat(1, 3)}}}}) {
        auto g = LieAlgebra::make(Family::A, v.n);
        ParabolicComplement q(g, v.b);
        for (const auto& eps : v.eps)
            check_all("M_q(" + rat_list_to_string(eps) + ") on " + g->name(), parabolic_verma(q, irrep_gl(v.n, eps)), g);
    }
    return c.outcome(std::to_string(modules) + " modules validated");
}

Outcome m0_pipeline() {
    Checker c;
    auto g = LieAlgebra::make(Family::C, 2);
    auto M = m0(g);
    auto W = weightcat::weighting(M, Weight({make_rat(1, 3), make_rat(1, 5)}), 6);
    auto probes = weightcat::default_probe_catalog(*g);
    probes.push_back({"e(-2e1) e(2e1)", UEAWord::word({g->find("e(-2e1)"), g->find("e(2e1)")})});
    auto cert = coherent::certify_almost_coherent(W, probes);
    c.require(cert.pass, "certificate passes");
    c.require(cert.degree == 1, "degree 1");
    c.require(cert.exceptional_slots.empty(), "no exceptional slots");
    Poly expected = Poly::parse("1/1*h1^2 + 2/1*h1 + 3/4", 2);
    c.require(cert.fits.back().poly && *cert.fits.back().poly == expected, "trace polynomial of e(-2e1) e(2e1)");

    std::map<int, Rat> fp;
    for (const auto& [k, v] : central_fingerprint(M, default_fingerprint_degrees(*g))) {
        c.require(v.has_value(), "fingerprint scalar in degree " + std::to_string(k));
        if (v) fp[k] = *v;
    }
    Weight om = g->from_dynkin({Rat(0), make_rat(-1, 2)});
    auto nf = coherent::normal_form_from_fingerprint(*g, fp);
    c.require(nf.normal_form == om, "normal form is omega+");

    // Independent route: slots of a window through omega+ killed by every
    // positive root vector carry highest weight vectors.
    auto H = weightcat::weighting(M, om, 6);
    std::size_t highest = 0;
    for (std::size_t s = 0; s < H.num_slots(); ++s) {
        bool killed = true;
        for (Label x = 0; x < g->dim() && killed; ++x) {
            if (g->basis(x).kind != RootKind::Positive) continue;
            auto t = H.neighbor(s, x);
            if (!t) {
                killed = false;
                break;
            }
            const RatMatrix* m = H.map(x, s);
            killed = m && m->is_zero();
        }
        if (!killed) continue;
        ++highest;
        c.require(coherent::wt_normal_form(*g, H.slot(s).weight).normal_form == om,
                  "highest weight slot " + H.slot(s).weight.to_string());
    }
    c.require(highest > 0, "a highest weight slot exists");
    return c.outcome("degree " + std::to_string(cert.degree) + ", " + std::to_string(highest) + " highest weight slot(s)");
}

Outcome rank_law() {
    Checker c;
    std::size_t cases = 0;
    for (const auto& e : exponential_grid()) {
        auto E = exponential_module(e.g, e.b, e.lambda, e.S);
        // lambda + (n+1) omega_n on E_11, ..., E_nn
        const int n = e.g->rank();
        std::vector<Rat> shifted;
        Weight l = e.lambda + e.g->fundamental_weight(n - 1) * Rat(n + 1);
        std::vector<Rat> full = e.g->epsilon_coords(l);
        shifted.assign(full.begin(), full.begin() + n);
        c.require(E.rank() == gl_weyl_dim(shifted).get_ui(), e.name());
        ++cases;
    }
    return c.outcome(std::to_string(cases) + " modules");
}

Outcome degree_identities() {
    Checker c;
    for (int n : {2, 3}) {
        auto g = LieAlgebra::make(Family::A, n);
        std::mt19937 rng(40 + n);
        std::uniform_int_distribution<int> d(0, 3);
        std::set<Weight> seen;
        LeviSpec levi;
        for (int i = 0; i + 1 < n; ++i) levi.simple.push_back(i);
        while (seen.size() < 10) {
            std::vector<Rat> labels;
            for (int i = 0; i < n; ++i) labels.push_back(Rat(d(rng)));
            Weight l = g->from_dynkin(labels);
            if (!seen.insert(l).second) continue;
            for (const auto& r : coherent::deg_identity_check(*g, l))
                c.require(r.ok(), g->name() + " k=" + std::to_string(r.k) + " at " + l.to_string());
            c.require(coherent::deg_k(*g, l, 1) == weyl_dim(*g, levi, l), "deg_1 at " + l.to_string());
        }
        c.require(coherent::deg_k(*g, g->zero_weight(), 1) == 1, "deg_1(0) on " + g->name());
        c.require(coherent::deg_k(*g, g->zero_weight(), n) == 1, "deg_n(0) on " + g->name());
    }
    return c.outcome("n = 2, 3 with 10 dominant weights each");
}

Outcome exponential_vs_verma() {
    Checker c;
    struct Case {
        int n;
        std::vector<Rat> b;
        std::vector<Rat> dyn;
        Weight base;
    };
    std::vector<Case> cases{{1, {Rat(1)}, {make_rat(1, 3)}, Weight({make_rat(2, 7)})},
                            {2, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}, Weight({make_rat(1, 3), make_rat(1, 7)})},
                            {2, {Rat(2), make_rat(-1, 3)}, {Rat(0), make_rat(1, 2)}, Weight({make_rat(2, 5), make_rat(1, 3)})}};
    std::size_t slots = 0;
    for (const auto& cs : cases) {
        auto g = LieAlgebra::make(Family::A, cs.n);
        Weight lambda = g->from_dynkin(cs.dyn);
        auto E = exponential_module(g, cs.b, lambda, {});
        auto P = parabolic_verma(ParabolicComplement(g, cs.b), irrep_gl(cs.n, g->epsilon_coords(lambda)));
        auto WE = weightcat::weighting(E, cs.base, 5), WP = weightcat::weighting(P, cs.base, 5);
        auto v = weightcat::almost_equivalent(WE, WP, weightcat::default_probe_catalog(*g), 0);
        c.require(v.equivalent && v.exceptional.empty(), "trace tables on " + g->name());
        c.require(v.compared_slots == WE.num_slots(), "all slots compared on " + g->name());
        c.require(central_fingerprint(E, default_fingerprint_degrees(*g)) ==
                      central_fingerprint(P, default_fingerprint_degrees(*g)),
                  "fingerprints on " + g->name());
        slots += v.compared_slots;
    }
    return c.outcome(std::to_string(cases.size()) + " pairs, " + std::to_string(slots) + " slots, radius 5");
}

Outcome functor_laws() {
    Checker c;
    struct Case {
        std::string name;
        AlgebraPtr g;
        FreeHModule M;
        Weight base;
    };
    auto gc = LieAlgebra::make(Family::C, 2);
    auto ga = LieAlgebra::make(Family::A, 2);
    auto g1 = LieAlgebra::make(Family::A, 1);
    std::vector<Case> cases{
        {"M0", gc, m0(gc), Weight({make_rat(1, 3), make_rat(1, 5)})},
        {"E sl(3)", ga, exponential_module(ga, {Rat(2), make_rat(-1, 3)}, ga->from_dynkin({Rat(1), Rat(0)}), {1}),
         Weight({make_rat(1, 3), make_rat(1, 4)})},
        {"E sl(2)", g1, exponential_module(g1, {Rat(1)}, g1->from_dynkin({make_rat(1, 3)}), {}), Weight({make_rat(2, 7)})}};
    for (const auto& cs : cases) {
        const auto& g = *cs.g;
        auto probes = weightcat::default_probe_catalog(g);
        auto W = weightcat::weighting(cs.M, cs.base, 3);
        for (const auto& V : {irrep(g, g.fundamental_weight(0)), irrep(g, g.fundamental_weight(g.rank() - 1))}) {
            auto T = weightcat::window_tensor(W, V);
            auto direct = weightcat::weighting(tensor_finite(cs.M, V), T.base(), 3);
            std::size_t compared = 0;
            for (const auto& p : probes) {
                auto a = weightcat::trace_table(direct, p), b = weightcat::trace_table(T, p);
                for (std::size_t s = 0; s < T.num_slots(); ++s) {
                    if (T.on_boundary(s) || !a.values[s] || !b.values[s]) continue;
                    ++compared;
                    c.require(*a.values[s] == *b.values[s], cs.name + " tensor probe " + p.name);
                }
            }
            c.require(compared > 0, cs.name + " tensor comparison nonempty");
        }
        auto degrees = default_fingerprint_degrees(g);
        auto fp = central_fingerprint(cs.M, degrees);
        for (int k : degrees) {
            auto z = gelfand_invariant(g, k);
            std::size_t interior = 0;
            for (std::size_t s = 0; s < W.num_slots(); ++s) {
                auto t = weightcat::try_trace(W, z, s);
                if (!t) continue;
                ++interior;
                c.require(fp[k] && *t == *fp[k] * Rat(static_cast<long>(W.slot(s).dim)),
                          cs.name + " Gelfand " + std::to_string(k) + " at " + W.slot(s).weight.to_string());
            }
            c.require(interior > 0, cs.name + " Gelfand " + std::to_string(k) + " defined somewhere");
        }
        c.require(central_fingerprint(dual_module(cs.M), degrees) == fp, cs.name + " dual fingerprint");
        auto tau = make_tau(cs.g);
        auto back = twist(twist(cs.M, tau), tau);
        bool same = true;
        for (Label x = 0; x < g.dim(); ++x) same = same && back.action(x) == cs.M.action(x);
        c.require(same, cs.name + " tau twice");
    }
    return c.outcome(std::to_string(cases.size()) + " modules, radius 3 windows");
}

Outcome omega_homomorphism() {
    Checker c;
    auto g = LieAlgebra::make(Family::A, 2);
    std::vector<FiniteRep> Vs{irrep_gl(2, {make_rat(1, 3), make_rat(1, 3)}), irrep_gl(2, {make_rat(5, 2), make_rat(3, 2)})};
    std::size_t samples = 0;
    for (int mask = 0; mask < 4; ++mask)
        for (std::size_t v = 0; v < Vs.size(); ++v) {
            WeylCarrier C(g, {Rat(2), make_rat(-1, 3)}, Vs[v], subset(mask, 2));
            auto r = check_reading(C, 50, 100 + static_cast<unsigned>(mask * 2 + v));
            c.require(r.samples >= 50 && r.failures == 0, "S=" + set_text(subset(mask, 2)) + " V#" + std::to_string(v));
            samples += r.samples;
        }
    return c.outcome("4 subsets x 2 modules, " + std::to_string(samples) + " samples");
}

Outcome reduction_witness() {
    Checker c;
    auto g = LieAlgebra::make(Family::C, 2);
    auto M = m0(g);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-9, 9), e(0, 6), terms(1, 6);
    std::size_t done = 0, steps = 0;
    while (done < 100) {
        Poly f(2);
        int t = terms(rng);
        for (int i = 0; i < t; ++i) {
            exactalg::Monomial m;
            m.exp[0] = static_cast<std::uint16_t>(e(rng));
            m.exp[1] = static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, 6 - m.exp[0])(rng));
            f.add_term(m, make_rat(coef(rng), 1 + std::abs(coef(rng))));
        }
        if (f.is_zero()) continue;
        ++done;
        auto w = m0_reduction_witness(f);
        c.require(w.steps.front() == f, "witness starts at f");
        for (std::size_t k = 1; k < w.steps.size(); ++k) {
            Label minus = g->find(w.variables[k - 1] == 0 ? "e(-2e1)" : "e(-2e2)");
            c.require(w.steps[k] == w.steps[k - 1] - M.act(minus, {w.steps[k - 1]})[0], "step is (1 - e_{-2e_i})");
            c.require(w.steps[k].total_degree() < w.steps[k - 1].total_degree(), "degree drops");
        }
        c.require(w.steps.back().is_constant() && !w.steps.back().is_zero(), "nonzero constant at the end");
        steps += w.steps.size() - 1;
    }
    return c.outcome("100 polynomials of degree <= 6, " + std::to_string(steps) + " steps");
}

Outcome windowed_translation() {
    Checker c;
    auto g = LieAlgebra::make(Family::A, 1);
    auto probes = weightcat::default_probe_catalog(*g);
    Weight base({make_rat(1, 3)});
    struct Pair {
        Weight mu, lambda;
    };
    std::vector<Pair> pairs{{g->zero_weight(), g->fundamental_weight(0)},
                            {g->fundamental_weight(0), g->zero_weight()},
                            {g->fundamental_weight(0), g->fundamental_weight(0) * Rat(2)}};
    for (const auto& [mu, lambda] : pairs) {
        const std::string tag = mu.to_string() + " -> " + lambda.to_string();
        auto E = exponential_module(g, {Rat(1)}, mu, {});
        auto W = weightcat::weighting(E, base, 6);
        auto T = weightcat::window_translate(W, mu, lambda);
        c.require(weightcat::window_bracket_defects(T).empty(), tag + " bracket");
        auto valid = T.valid_slots();
        c.require(valid.size() >= 9, tag + " enough defined slots");
        // every slot should carry the input dimension times the multiplicity
        // of lambda - mu in the tensoring module
        Weight shift = lambda - mu;
        std::vector<Rat> dom{shift[0] < 0 ? -shift[0] : shift[0]};
        auto V = irrep(*g, Weight(dom));
        std::size_t mult = std::count(V.weights.begin(), V.weights.end(), shift.c);
        std::size_t compared = 0;
        for (auto s : valid) {
            auto src = W.find_weight(T.slot(s).weight - shift);
            if (!src || !W.slot(*src).valid) continue;
            ++compared;
            c.require(T.slot(s).dim == W.slot(*src).dim * mult, tag + " dimension at " + T.slot(s).weight.to_string());
        }
        c.require(mult == 1 && compared >= 9, tag + " dimension bookkeeping");
        auto target = weightcat::weighting(exponential_module(g, {Rat(1)}, lambda, {}), T.base(), 6);
        auto v = weightcat::almost_equivalent(T, target, probes, 0);
        c.require(v.equivalent, tag + " equivalent to the translated module");
        auto before = weightcat::cuspidality_test(W), after = weightcat::cuspidality_test(T);
        if (!before.degenerate && !after.degenerate) c.require(before.cuspidal == after.cuspidal, tag + " cuspidality");
    }
    return c.outcome(std::to_string(pairs.size()) + " translations on sl(2)");
}

std::vector<int> s(std::initializer_list<int> one_based) {
    std::vector<int> w;
    for (int i : one_based) w.push_back(i - 1);
    return w;
}

Outcome classification_tables() {
    Checker c;
    using Set = std::set<std::vector<int>>;
    auto same = [](const std::vector<std::vector<int>>& v, const Set& e) { return Set(v.begin(), v.end()) == e && v.size() == e.size(); };
    auto dyn = [](const LieAlgebra& g, std::vector<Rat> l) { return g.from_dynkin(l); };

    auto g2 = LieAlgebra::make(Family::A, 2);
    auto reg2 = coherent::wt_normal_form(*g2, g2->zero_weight());
    c.require(same(coherent::admissible_word_list(*g2, reg2, 1), {s({1}), s({2, 1})}), "n=2 regular i=1");
    c.require(same(coherent::admissible_word_list(*g2, reg2, 2), {s({2}), s({1, 2})}), "n=2 regular i=2");
    auto ni2 = coherent::wt_normal_form(*g2, dyn(*g2, {make_rat(1, 2), Rat(0)}));
    c.require(same(coherent::admissible_word_list(*g2, ni2), {s({1}), s({2, 1})}), "n=2 non-integral");
    auto sing2 = coherent::wt_normal_form(*g2, dyn(*g2, {Rat(-1), Rat(0)}));
    c.require(same(coherent::admissible_word_list(*g2, sing2), {s({2})}), "n=2 singular");

    auto g3 = LieAlgebra::make(Family::A, 3);
    auto W3 = weyl_group(g3);
    auto reg3 = coherent::wt_normal_form(*g3, g3->zero_weight());
    c.require(same(coherent::admissible_word_list(*g3, reg3, 1), {s({1}), s({2, 1}), s({3, 2, 1})}), "n=3 regular i=1");
    c.require(same(coherent::admissible_word_list(*g3, reg3, 2), {s({2}), s({3, 2}), s({1, 2})}), "n=3 regular i=2");
    c.require(same(coherent::admissible_word_list(*g3, reg3, 3), {s({3}), s({2, 3}), s({1, 2, 3})}), "n=3 regular i=3");
    auto ni3 = coherent::wt_normal_form(*g3, dyn(*g3, {make_rat(1, 3), Rat(0), Rat(2)}));
    c.require(same(coherent::admissible_word_list(*g3, ni3), {s({1}), s({2, 1}), s({3, 2, 1})}), "n=3 non-integral");
    auto sing3a = coherent::wt_normal_form(*g3, dyn(*g3, {Rat(0), Rat(-1), Rat(1)}));
    c.require(sing3a.singular_index == 2, "n=3 singular index 2");
    c.require(same(coherent::admissible_word_list(*g3, sing3a), {s({1}), s({3})}), "n=3 singular i=2");
    auto sing3b = coherent::wt_normal_form(*g3, dyn(*g3, {Rat(0), Rat(0), Rat(-1)}));
    c.require(sing3b.singular_index == 3, "n=3 singular index 3");
    c.require(same(coherent::admissible_word_list(*g3, sing3b), {s({1, 2}), s({2})}), "n=3 singular i=3");
    for (const auto* cc : {&reg3, &ni3, &sing3a, &sing3b})
        for (const auto& w : coherent::admissible_word_list(*g3, *cc, 2)) c.require(W3->is_reduced(w), "reduced word");
    return c.outcome("regular, non-integral and singular lists for n = 2, 3");
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"bracket suite", bracket_suite},
        {"M0 pipeline", m0_pipeline},
        {"rank law", rank_law},
        {"degree identities", degree_identities},
        {"exponential vs parabolic Verma", exponential_vs_verma},
        {"functor laws", functor_laws},
        {"omega_S homomorphism", omega_homomorphism},
        {"simplicity witness", reduction_witness},
        {"windowed translation", windowed_translation},
        {"classification tables", classification_tables},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first << "): " << o.detail
             << " [" << secs << " s]";
        std::cout << line.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
