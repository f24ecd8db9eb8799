#include "hfinite/constructors.hpp"

#include "hfinite/errors.hpp"

#include <algorithm>

namespace hfinite::hmodules {

using exactalg::RatMatrix;

FreeHModule m0(const AlgebraPtr& g) {
    if (g->family() != liealg::Family::C) throw PreconditionError("M0 is an sp(2n)-module");
    const int n = g->rank();
    if (n < 2) throw PreconditionError("M0 requires n >= 2");
    const std::size_t nv = n;
    auto h = [&](int i) { return Poly::variable(nv, i); };
    auto c = [&](Rat v) { return Poly(nv, v); };
    std::vector<PolyMatrix> actions;
    for (Label l = 0; l < g->dim(); ++l) {
        const auto& e = g->basis(l);
        Poly entry(nv);
        if (e.kind == liealg::RootKind::Cartan) {
            entry = h(static_cast<int>(l));
        } else if (std::all_of(e.root.c.begin(), e.root.c.end(), [](const Rat& v) { return v <= 0; })) {
            entry = c(Rat(1));
        } else {
            std::vector<int> plus, minus;
            for (int i = 0; i < n; ++i) {
                if (e.root[i] > 0)
                    for (int t = 0; t < e.root[i].get_num().get_si(); ++t) plus.push_back(i);
                if (e.root[i] < 0) minus.push_back(i);
            }
            if (plus.size() == 2 && plus[0] == plus[1]) {
                entry = (h(plus[0]) - c(Rat(1, 2))) * (h(plus[0]) - c(Rat(3, 2)));
            } else if (plus.size() == 2) {
                entry = (h(plus[0]) - c(Rat(1, 2))) * (h(plus[1]) - c(Rat(1, 2)));
            } else if (plus.size() == 1 && minus.size() == 1) {
                entry = h(plus[0]) - c(Rat(1, 2));
            } else {
                throw Error("unexpected root in sp(2n)");
            }
        }
        actions.push_back(PolyMatrix::scalar(1, entry));
    }
    return FreeHModule(g, 1, std::move(actions), {{"constructor", "m0"}});
}

FreeHModule parabolic_verma(const liealg::ParabolicComplement& q, const FiniteRep& V) {
    const auto& g = q.algebra();
    const int n = g.rank();
    if (V.action.size() != static_cast<std::size_t>(n * n)) throw DimensionError("V must be a gl(n)-module");
    const std::size_t r = V.dim;
    const std::size_t nv = n;
    std::vector<PolyMatrix> actions;
    for (Label x = 0; x < g.dim(); ++x) {
        auto split = q.decompose(g.basis(x).matrix);
        Poly hx(nv);
        for (int k = 0; k < n; ++k) hx += Poly::variable(nv, k) * split.cartan[k];
        RatMatrix z = q.levi_image(split.q);
        RatMatrix act(r, r);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (z(i, j) != 0) act += V.action[liealg::gl_label(n, i, j)] * z(i, j);
        PolyMatrix A = PolyMatrix::from_rat(act, nv) + PolyMatrix::scalar(r, hx);
        actions.push_back(std::move(A));
    }
    return FreeHModule(q.algebra_ptr(), r, std::move(actions),
                       {{"constructor", "verma"}, {"b", exactalg::rat_list_to_string(q.b())}, {"V", V.description}});
}

FreeHModule twist(const FreeHModule& M, const liealg::AlgebraAutomorphism& psi) {
    const auto& g = M.algebra();
    if (&psi.algebra() != &g && psi.algebra().name() != g.name())
        throw DimensionError("automorphism belongs to a different algebra");
    RatMatrix block = psi.cartan_block();
    auto inv = exactalg::solve(block, RatMatrix::identity(g.rank()));
    const std::size_t nv = M.nvars();
    // psi^{-1}(H_j) = sum_i inv(i, j) H_i
    std::vector<Poly> images;
    for (int j = 0; j < g.rank(); ++j) {
        Poly p(nv);
        for (int i = 0; i < g.rank(); ++i) p += Poly::variable(nv, i) * (*inv)(i, j);
        images.push_back(p);
    }
    std::vector<PolyMatrix> actions;
    for (Label x = 0; x < g.dim(); ++x) {
        PolyMatrix A(M.rank(), M.rank(), nv);
        const auto& img = psi.image(x);
        for (Label k = 0; k < g.dim(); ++k)
            if (img[k] != 0) A += M.action(k) * img[k];
        actions.push_back(A.compose(images));
    }
    auto meta = M.metadata();
    meta["twist"] = psi.name() + (meta.count("twist") ? "*" + meta["twist"] : "");
    return FreeHModule(M.algebra_ptr(), M.rank(), std::move(actions), std::move(meta));
}

FreeHModule tensor_finite(const FreeHModule& M, const FiniteRep& V) {
    const auto& g = M.algebra();
    if (V.action.size() != g.dim()) throw DimensionError("V must be a representation of the same algebra");
    const std::size_t r = M.rank(), d = V.dim, nv = M.nvars();
    std::vector<PolyMatrix> actions;
    std::vector<ShiftMap> mu;
    for (std::size_t w = 0; w < d; ++w) mu.emplace_back(V.weights[w]);
    for (Label x = 0; x < g.dim(); ++x) {
        PolyMatrix A(r * d, r * d, nv);
        const auto& Ax = M.action(x);
        for (std::size_t w = 0; w < d; ++w) {
            PolyMatrix shifted = Ax.apply_shift(mu[w]);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) A(i * d + w, j * d + w) += shifted(i, j);
        }
        const auto& Vx = V.action[x];
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t c = 0; c < d; ++c)
                    if (Vx(a, c) != 0) A(i * d + a, i * d + c) += Poly(nv, Vx(a, c));
        actions.push_back(std::move(A));
    }
    auto meta = M.metadata();
    meta["tensor"] = V.description + (meta.count("tensor") ? "," + meta["tensor"] : "");
    return FreeHModule(M.algebra_ptr(), r * d, std::move(actions), std::move(meta));
}

FreeHModule dual_module(const FreeHModule& M) {
    const auto& g = M.algebra();
    std::vector<PolyMatrix> actions;
    for (Label x = 0; x < g.dim(); ++x) {
        auto coords = g.coordinates(g.basis(x).matrix.transpose());
        PolyMatrix A(M.rank(), M.rank(), M.nvars());
        for (Label k = 0; k < g.dim(); ++k)
            if (coords[k] != 0) A += M.action(k) * coords[k];
        actions.push_back(A.apply_shift(M.shift(x)).transpose());
    }
    auto meta = M.metadata();
    meta["dual"] = std::to_string(meta.count("dual") ? std::stoi(meta["dual"]) + 1 : 1);
    return FreeHModule(M.algebra_ptr(), M.rank(), std::move(actions), std::move(meta));
}

ReductionWitness m0_reduction_witness(const Poly& f) {
    if (f.is_zero()) throw PreconditionError("the reduction witness needs a non-zero polynomial");
    ReductionWitness w;
    w.steps.push_back(f);
    Poly cur = f;
    const std::size_t n = f.nvars();
    while (!cur.is_constant()) {
        int best = 0, best_deg = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (cur.degree_in(i) > best_deg) {
                best_deg = cur.degree_in(i);
                best = static_cast<int>(i);
            }
        std::vector<Rat> s(n);
        s[best] = -2;  // sigma: h~_i -> h~_i + 2
        cur = cur - cur.apply_shift(ShiftMap(s));
        w.steps.push_back(cur);
        w.variables.push_back(best);
        if (cur.is_zero()) throw Error("reduction reached zero");
    }
    return w;
}

}  // namespace hfinite::hmodules
