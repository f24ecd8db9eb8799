#include "doctest.h"

#include "hfinite/constructors.hpp"
#include "hfinite/errors.hpp"
#include "hfinite/weyl.hpp"
#include "hfinite/weyl_carrier.hpp"

#include <random>

using namespace hfinite;
using namespace hfinite::hmodules;
using namespace hfinite::liealg;
using exactalg::make_rat;

namespace {

std::set<int> subset(int mask, int n) {
    std::set<int> s;
    for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s.insert(i);
    return s;
}

std::vector<Poly> random_element(std::size_t rank, std::size_t nv, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-5, 5), e(0, 2);
    std::vector<Poly> m(rank, Poly(nv));
    for (auto& p : m)
        for (int t = 0; t < 3; ++t) {
            exactalg::Monomial mono;
            for (std::size_t i = 0; i < nv; ++i) mono.exp[i] = static_cast<std::uint16_t>(e(rng));
            p.add_term(mono, make_rat(c(rng), 1 + std::abs(c(rng))));
        }
    return m;
}

}  // namespace

TEST_CASE("M0 is an sp(2n)-module for n = 2, 3") {
    for (int n : {2, 3}) {
        auto g = LieAlgebra::make(Family::C, n);
        auto M = m0(g);
        CHECK(M.rank() == 1);
        auto r = validate_bracket(M);
        CHECK(r.pass());
        CHECK(r.pairs_checked == g->dim() * (g->dim() - 1) / 2);
    }
    CHECK_THROWS_AS(m0(LieAlgebra::make(Family::C, 1)), PreconditionError);
    CHECK_THROWS_AS(m0(LieAlgebra::make(Family::A, 2)), PreconditionError);
}

TEST_CASE("the validator detects a corrupted entry") {
    auto g = LieAlgebra::make(Family::C, 2);
    auto M = m0(g);
    auto actions = M.actions();
    Label e = g->find("e(2e1)");
    actions[e](0, 0) += Poly(2, Rat(1));
    FreeHModule bad(M.algebra_ptr(), 1, actions);
    auto r = validate_bracket(bad);
    CHECK_FALSE(r.pass());
    bool hit = false;
    for (const auto& f : r.failures) hit = hit || f.a == e || f.b == e;
    CHECK(hit);
}

TEST_CASE("M0 word trace for e(-2e1) e(2e1)") {
    auto g = LieAlgebra::make(Family::C, 2);
    auto M = m0(g);
    Word w{g->find("e(-2e1)"), g->find("e(2e1)")};
    Poly h1 = Poly::variable(2, 0);
    Poly expected = h1 * h1 + h1 * Rat(2) + Poly(2, Rat(3, 4));
    CHECK(M.word_matrix(w)(0, 0) == expected);
}

TEST_CASE("twists, duals and tensor products of M0 are modules") {
    auto g = LieAlgebra::make(Family::C, 2);
    auto M = m0(g);
    auto tau = make_tau(g);
    CHECK(validate_bracket(twist(M, tau)).pass());
    CHECK(twist(twist(M, tau), tau).actions() == M.actions());
    CHECK(validate_bracket(twist(M, make_diag(g, {Rat(2), make_rat(-1, 3)}))).pass());
    auto D = dual_module(M);
    CHECK(validate_bracket(D).pass());
    CHECK(dual_module(D).actions() == M.actions());
    auto V = irrep(*g, g->fundamental_weight(0));
    auto T = tensor_finite(M, V);
    CHECK(T.rank() == 4);
    CHECK(validate_bracket(T).pass());
}

TEST_CASE("diagonal twists leave M0 traces of weight-zero words unchanged") {
    auto g = LieAlgebra::make(Family::C, 2);
    auto M = m0(g);
    auto T = twist(M, make_diag(g, {Rat(3), make_rat(-2, 5)}));
    auto z = gelfand_invariant(*g, 2);
    CHECK(M.element_matrix(z) == T.element_matrix(z));
    Word w{g->find("e(-e1-e2)"), g->find("e(e1+e2)")};
    CHECK(M.word_matrix(w) == T.word_matrix(w));
}

TEST_CASE("M0 central character is that of omega+") {
    auto g = LieAlgebra::make(Family::C, 2);
    auto M = m0(g);
    Weight omega_plus = g->from_dynkin({Rat(0), make_rat(-1, 2)});
    CHECK(omega_plus == Weight({make_rat(-1, 2), make_rat(-1, 2)}));
    auto fp = central_fingerprint(M, {2, 3, 4});
    for (const auto& [k, v] : fp) {
        REQUIRE(v.has_value());
        CHECK(*v == verma_hc_eigenvalue(*g, gelfand_invariant(*g, k), omega_plus));
    }
}

TEST_CASE("reduction witness in M0") {
    const std::size_t n = 2;
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-4, 4), e(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Poly f(n);
        for (int t = 0; t < 4; ++t) {
            exactalg::Monomial m;
            m.exp[0] = static_cast<std::uint16_t>(e(rng));
            m.exp[1] = static_cast<std::uint16_t>(e(rng));
            f.add_term(m, Rat(c(rng)));
        }
        if (f.is_zero()) continue;
        auto w = m0_reduction_witness(f);
        for (std::size_t k = 1; k < w.steps.size(); ++k) {
            CHECK(w.steps[k].total_degree() < w.steps[k - 1].total_degree());
            // the step is (1 - e_{-2e_i}) in M0, computed via the module action
            auto g = LieAlgebra::make(Family::C, 2);
            auto M = m0(g);
            Label minus = g->find(w.variables[k - 1] == 0 ? "e(-2e1)" : "e(-2e2)");
            CHECK(w.steps[k] == w.steps[k - 1] - M.act(minus, {w.steps[k - 1]})[0]);
        }
        CHECK(w.steps.back().is_constant());
        CHECK_FALSE(w.steps.back().is_zero());
    }
}

TEST_CASE("only one omega_S reading is a homomorphism") {
    auto g = LieAlgebra::make(Family::A, 2);
    std::vector<FiniteRep> Vs{irrep_gl(2, {make_rat(1, 3), make_rat(1, 3)}), irrep_gl(2, {make_rat(5, 2), make_rat(3, 2)})};
    std::vector<OmegaReading> good;
    for (const auto& rd : OmegaReading::all()) {
        std::size_t fails = 0;
        for (int mask = 0; mask < 4; ++mask)
            for (const auto& V : Vs) fails += check_reading(WeylCarrier(g, {Rat(2), make_rat(-1, 3)}, V, subset(mask, 2), rd), 3, 9).failures;
        if (fails == 0) good.push_back(rd);
    }
    REQUIRE(good.size() == 1);
    CHECK(good[0] == OmegaReading{});
}

TEST_CASE("exponential modules: brackets, rank and round trips") {
    std::mt19937 rng(17);
    struct Case {
        int n;
        std::vector<Rat> b;
        std::vector<Rat> dyn;
    };
    std::vector<Case> cases{{1, {Rat(1)}, {Rat(0)}},
                            {1, {Rat(1)}, {make_rat(1, 2)}},
                            {2, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}},
                            {2, {Rat(2), make_rat(-1, 3)}, {Rat(2), make_rat(1, 2)}}};
    for (const auto& cs : cases) {
        auto g = LieAlgebra::make(Family::A, cs.n);
        Weight lambda = g->from_dynkin(cs.dyn);
        for (int mask = 0; mask < (1 << cs.n); ++mask) {
            auto S = subset(mask, cs.n);
            auto eps = exponential_gl_weight(*g, lambda);
            WeylCarrier C(g, cs.b, irrep_gl(cs.n, eps), S);
            FreeHModule E = weyl_to_free(C);
            CHECK(E.rank() == gl_weyl_dim(eps).get_ui());
            CHECK(validate_bracket(E).pass());
            for (int t = 0; t < 5; ++t) {
                auto m = random_element(E.rank(), E.nvars(), rng);
                auto carrier = C.from_free(m);
                CHECK(C.to_free(carrier) == m);
                for (Label x = 0; x < g->dim(); ++x) CHECK(C.to_free(C.act(x, carrier)) == E.act(x, m));
            }
        }
    }
}

TEST_CASE("sl(2) exponential module entries") {
    auto g = LieAlgebra::make(Family::A, 1);
    auto E = exponential_module(g, {Rat(1)}, g->zero_weight(), {});
    Label f = g->find("E2_1");
    CHECK(E.action(f)(0, 0).total_degree() == 1);
    // E_21 acts by -x, and h~_1 = h_1 / 2 acts by -x d - b x + (mu - 1)
    // with mu = 1, so x = -h~_1 = -h_1 / 2 on the generator.
    CHECK(E.action(f)(0, 0) == Poly::variable(1, 0) * make_rat(1, 2));
}

TEST_CASE("parabolic Verma modules") {
    for (int n : {1, 2}) {
        auto g = LieAlgebra::make(Family::A, n);
        std::vector<Rat> b = n == 1 ? std::vector<Rat>{Rat(2)} : std::vector<Rat>{Rat(1), Rat(1)};
        ParabolicComplement q(g, b);
        for (auto eps : n == 1 ? std::vector<std::vector<Rat>>{{make_rat(1, 3)}, {Rat(-2)}}
                               : std::vector<std::vector<Rat>>{{Rat(1), Rat(0)}, {make_rat(7, 3), make_rat(1, 3)}}) {
            auto V = irrep_gl(n, eps);
            auto P = parabolic_verma(q, V);
            CHECK(P.rank() == V.dim);
            CHECK(validate_bracket(P).pass());
            Weight lambda = g->from_epsilon(eps);
            auto fp = central_fingerprint(P, default_fingerprint_degrees(*g));
            for (const auto& [k, v] : fp) {
                REQUIRE(v.has_value());
                CHECK(*v == verma_hc_eigenvalue(*g, gelfand_invariant(*g, k), lambda));
            }
        }
    }
}

TEST_CASE("tensor products multiply rank and keep the bracket") {
    auto g = LieAlgebra::make(Family::A, 2);
    auto E = exponential_module(g, {Rat(1), Rat(1)}, g->from_dynkin({Rat(1), Rat(0)}), {1});
    auto V = irrep(*g, g->fundamental_weight(0));
    auto T = tensor_finite(E, V);
    CHECK(T.rank() == E.rank() * V.dim);
    CHECK(validate_bracket(T).pass());
    CHECK(validate_bracket(dual_module(T)).pass());
    CHECK(validate_bracket(twist(T, make_tau(g))).pass());
}
