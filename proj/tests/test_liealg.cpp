#include "doctest.h"

#include "hfinite/automorphism.hpp"
#include "hfinite/errors.hpp"
#include "hfinite/finite_rep.hpp"
#include "hfinite/uea.hpp"
#include "hfinite/weyl.hpp"

#include <random>

using namespace hfinite;
using namespace hfinite::liealg;
using exactalg::Rat;
using exactalg::make_rat;

namespace {

RatMatrix unit(int N, int i, int j, Rat v = Rat(1)) {
    RatMatrix m(N, N);
    m(i, j) = v;
    return m;
}

Weight dyn(const LieAlgebra& g, std::vector<Rat> a) { return g.from_dynkin(a); }

// Matrix of an enveloping-algebra element in a finite representation.
RatMatrix act(const FiniteRep& V, const UEAWord& u) {
    RatMatrix total(V.dim, V.dim);
    for (const auto& [w, c] : u.terms()) {
        RatMatrix m = RatMatrix::identity(V.dim);
        for (auto l : w) m = m * V.action[l];
        total += m * c;
    }
    return total;
}

}  // namespace

TEST_CASE("dimensions and Weyl group orders") {
    CHECK(LieAlgebra::make(Family::A, 1)->dim() == 3);
    CHECK(LieAlgebra::make(Family::A, 2)->dim() == 8);
    CHECK(LieAlgebra::make(Family::A, 3)->dim() == 15);
    CHECK(LieAlgebra::make(Family::C, 2)->dim() == 10);
    CHECK(LieAlgebra::make(Family::C, 3)->dim() == 21);
    CHECK(weyl_group(LieAlgebra::make(Family::A, 2))->order() == 6);
    CHECK(weyl_group(LieAlgebra::make(Family::A, 3))->order() == 24);
    CHECK(weyl_group(LieAlgebra::make(Family::C, 2))->order() == 8);
    CHECK(weyl_group(LieAlgebra::make(Family::C, 3))->order() == 48);
}

TEST_CASE("symplectic long-root bracket") {
    auto g = LieAlgebra::make(Family::C, 2);
    Label e = g->find("e(2e1)"), f = g->find("e(-2e1)");
    RatMatrix direct = exactalg::commutator(unit(4, 0, 2, 2), unit(4, 2, 0, -2));
    CHECK(direct == g->basis(g->find("ht1")).matrix * Rat(-4));
    const auto& br = g->bracket(e, f);
    REQUIRE(br.size() == 1);
    CHECK(br[0].first == g->find("ht1"));
    CHECK(br[0].second == -4);
}

TEST_CASE("bracket tables reproduce matrix commutators") {
    for (auto [fam, n] : {std::pair{Family::A, 2}, std::pair{Family::C, 2}, std::pair{Family::C, 3}}) {
        auto g = LieAlgebra::make(fam, n);
        for (std::size_t a = 0; a < g->dim(); ++a)
            for (std::size_t b = 0; b < g->dim(); ++b) {
                RatMatrix m(g->matrix_size(), g->matrix_size());
                for (const auto& [l, c] : g->bracket(a, b)) m += g->basis(l).matrix * c;
                CHECK(m == exactalg::commutator(g->basis(a).matrix, g->basis(b).matrix));
            }
    }
}

TEST_CASE("roots, coroots and rho") {
    auto g = LieAlgebra::make(Family::A, 2);
    CHECK(g->rho() == dyn(*g, {Rat(1), Rat(1)}));
    for (std::size_t i = 0; i < 2; ++i) CHECK(g->pair_coroot(g->simple_roots()[i], g->simple_coroot(i)) == 2);
    auto c = LieAlgebra::make(Family::C, 2);
    // rho = 2 e1 + e2 in the diagonal coordinates
    CHECK(c->rho() == Weight({Rat(2), Rat(1)}));
    CHECK(c->dynkin_labels(Weight({Rat(-1, 2), Rat(-1, 2)})) == std::vector<Rat>{Rat(0), Rat(-1, 2)});
    // h~_k in type A: E_kk - I/(n+1)
    auto e = g->epsilon_coords(g->fundamental_weight(1));
    CHECK(e == std::vector<Rat>{Rat(1, 3), Rat(1, 3)});
    CHECK(g->from_epsilon(e) == g->fundamental_weight(1));
}

TEST_CASE("dot action conventions") {
    for (int n = 1; n <= 3; ++n) {
        auto g = LieAlgebra::make(Family::A, n);
        auto W = weyl_group(g);
        std::vector<int> wn;
        for (int i = n - 1; i >= 0; --i) wn.push_back(i);
        CHECK(W->dot(wn, g->zero_weight()) == g->fundamental_weight(n - 1) * Rat(-(n + 1)));
        if (n >= 2)
            CHECK(W->dot({0}, g->zero_weight()) == dyn(*g, [&] {
                std::vector<Rat> a(n);
                a[0] = -2;
                a[1] = 1;
                return a;
            }()));
    }
}

TEST_CASE("central characters and translation compatibility on sl(2)") {
    auto g = LieAlgebra::make(Family::A, 1);
    auto W = weyl_group(g);
    Weight l({Rat(3)});
    CHECK(same_central_character(*W, l, Weight({Rat(-5)})));
    CHECK_FALSE(same_central_character(*W, l, Weight({Rat(1)})));
    CHECK(translation_compatible(*W, Weight({Rat(1)}), Weight({Rat(0)})));
    CHECK_FALSE(translation_compatible(*W, Weight({Rat(-1)}), Weight({Rat(0)})));
    CHECK_FALSE(translation_compatible(*W, Weight({Rat(1, 2)}), Weight({Rat(0)})));
    CHECK(translation_compatible(*W, Weight({Rat(1, 3)}), Weight({Rat(4, 3)})));
}

TEST_CASE("Weyl dimension formula agrees with constructed modules") {
    auto g = LieAlgebra::make(Family::A, 2);
    CHECK(weyl_dim(*g, g->rho()) == 8);
    CHECK(irrep(*g, g->rho()).dim == 8);
    for (auto [fam, n] : {std::pair{Family::A, 2}, std::pair{Family::C, 2}, std::pair{Family::A, 3}}) {
        auto alg = LieAlgebra::make(fam, n);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                std::vector<Rat> labels(n);
                labels[0] = a;
                labels[n - 1] += b;
                Weight w = alg->from_dynkin(labels);
                FiniteRep V = irrep(*alg, w);
                CHECK(V.dim == weyl_dim(*alg, w).get_ui());
            }
    }
    for (auto eps : std::vector<std::vector<Rat>>{{Rat(2), Rat(0)}, {Rat(1, 3), Rat(1, 3)}, {Rat(3), Rat(1), Rat(0)},
                                                  {Rat(5, 2), Rat(3, 2), Rat(-1, 2)}}) {
        FiniteRep V = irrep_gl(static_cast<int>(eps.size()), eps);
        CHECK(V.dim == gl_weyl_dim(eps).get_ui());
    }
}

TEST_CASE("constructed modules are representations with the right top weight") {
    auto g = LieAlgebra::make(Family::C, 2);
    Weight w = g->from_dynkin({Rat(1), Rat(1)});
    FiniteRep V = irrep(*g, w);
    CHECK(representation_defects(*g, V) == 0);
    REQUIRE(V.weights[0] == w.c);
    for (auto p : g->positive_labels()) {
        auto col = V.action[p].column(0);
        for (const auto& x : col) CHECK(x == 0);
    }
    FiniteRep U = irrep_gl(3, {Rat(7, 3), Rat(4, 3), Rat(1, 3)});
    auto gens = gl_generators(3);
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < gens.size(); ++b) {
            RatMatrix br = exactalg::commutator(gens[a], gens[b]);
            RatMatrix rhs(U.dim, U.dim);
            for (std::size_t k = 0; k < gens.size(); ++k) {
                Rat coeff = br(k / 3, k % 3);
                if (coeff != 0) rhs += U.action[k] * coeff;
            }
            CHECK(exactalg::commutator(U.action[a], U.action[b]) == rhs);
        }
}

TEST_CASE("Gelfand invariants are central and match Verma eigenvalues") {
    for (auto [fam, n] : {std::pair{Family::A, 1}, std::pair{Family::A, 2}, std::pair{Family::C, 2}}) {
        auto g = LieAlgebra::make(fam, n);
        for (int k = 2; k <= 3; ++k) {
            UEAWord z = gelfand_invariant(*g, k);
            CHECK(z.weight(*g).is_zero());
            for (int m = 0; m <= 2; ++m) {
                std::vector<Rat> labels(n);
                labels[0] = m;
                Weight w = g->from_dynkin(labels);
                FiniteRep V = irrep(*g, w);
                Rat s;
                RatMatrix Z = act(V, z);
                REQUIRE(Z.is_scalar(&s));
                CHECK(s == verma_hc_eigenvalue(*g, z, w));
            }
        }
    }
}

TEST_CASE("Harish-Chandra eigenvalues are dot invariant") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-7, 7);
    for (auto [fam, n] : {std::pair{Family::A, 2}, std::pair{Family::C, 2}}) {
        auto g = LieAlgebra::make(fam, n);
        auto W = weyl_group(g);
        UEAWord z = gelfand_invariant(*g, 2);
        for (int t = 0; t < 3; ++t) {
            Weight l({make_rat(d(rng), 3), make_rat(d(rng), 5)});
            Rat v = verma_hc_eigenvalue(*g, z, l);
            for (const auto& w : W->elements()) CHECK(verma_hc_eigenvalue(*g, z, W->dot(w, l)) == v);
        }
    }
}

TEST_CASE("automorphisms") {
    auto g = LieAlgebra::make(Family::A, 2);
    auto tau = make_tau(g);
    CHECK(tau.preserves_brackets());
    CHECK(tau.apply(unit(3, 0, 1)) == unit(3, 1, 0, -1));
    CHECK(make_diag(g, {Rat(2), Rat(-1, 3), Rat(5)}).preserves_brackets());
    std::vector<Rat> b{Rat(2), Rat(-1, 3)};
    auto theta = make_theta(g, b);
    CHECK(theta.preserves_brackets());
    for (int k = 0; k < 2; ++k) {
        RatMatrix ht = unit(3, k, k) - RatMatrix::identity(3) * Rat(1, 3);
        CHECK(theta_matrix(2, b, ht) == ht - unit(3, 2, k, b[k]));
        CHECK(theta_matrix(2, b, unit(3, 2, k)) == unit(3, 2, k));
    }
    auto c = LieAlgebra::make(Family::C, 2);
    CHECK(make_tau(c).preserves_brackets());
    CHECK(make_diag(c, {Rat(3), Rat(-2)}).preserves_brackets());
    CHECK_THROWS_AS(make_theta(c, {Rat(1), Rat(1)}), PreconditionError);
}

TEST_CASE("parabolic complement") {
    for (int n = 1; n <= 3; ++n) {
        auto g = LieAlgebra::make(Family::A, n);
        std::vector<Rat> b;
        for (int i = 0; i < n; ++i) b.push_back(Rat(i + 2, i + 1) * (i % 2 ? -1 : 1));
        ParabolicComplement q(g, b);
        CHECK(q.dim() == static_cast<std::size_t>(n * n + n));
        for (const auto& e : g->basis()) {
            auto s = q.decompose(e.matrix);
            CHECK(q.contains(s.q));
        }
        for (const auto& x : q.q_basis())
            for (const auto& y : q.q_basis()) CHECK(q.contains(exactalg::commutator(x, y)));
    }
}
