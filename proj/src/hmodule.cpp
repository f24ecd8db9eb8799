#include "hfinite/hmodule.hpp"

#include "hfinite/errors.hpp"

namespace hfinite::hmodules {

FreeHModule::FreeHModule(AlgebraPtr g, std::size_t rank, std::vector<PolyMatrix> actions,
                         std::map<std::string, std::string> metadata)
    : g_(std::move(g)), rank_(rank), actions_(std::move(actions)), metadata_(std::move(metadata)) {
    if (actions_.size() != g_->dim()) throw DimensionError("module needs one action matrix per basis element");
    for (const auto& a : actions_)
        if (a.rows() != rank_ || a.cols() != rank_ || a.nvars() != nvars())
            throw DimensionError("action matrix has the wrong shape");
}

ShiftMap FreeHModule::shift(Label x) const { return ShiftMap(g_->basis(x).root.c); }

std::vector<Poly> FreeHModule::act(Label x, const std::vector<Poly>& m) const {
    if (m.size() != rank_) throw DimensionError("element has the wrong number of coefficients");
    std::vector<Poly> out(rank_, Poly(nvars()));
    ShiftMap s = shift(x);
    const auto& A = actions_.at(x);
    for (std::size_t j = 0; j < rank_; ++j) {
        if (m[j].is_zero()) continue;
        Poly p = m[j].apply_shift(s);
        for (std::size_t i = 0; i < rank_; ++i)
            if (!A(i, j).is_zero()) out[i] += p * A(i, j);
    }
    return out;
}

PolyMatrix FreeHModule::word_matrix(const Word& w) const {
    PolyMatrix result = PolyMatrix::identity(rank_, nvars());
    Weight acc = g_->zero_weight();
    for (auto l : w) {
        result = result * actions_.at(l).apply_shift(ShiftMap(acc.c));
        acc = acc + g_->basis(l).root;
    }
    return result;
}

PolyMatrix FreeHModule::element_matrix(const UEAWord& u) const {
    PolyMatrix total(rank_, rank_, nvars());
    for (const auto& [w, c] : u.terms()) total += word_matrix(w) * c;
    return total;
}

BracketReport validate_bracket(const FreeHModule& M) {
    const auto& g = M.algebra();
    const std::size_t d = g.dim();
    const std::size_t nv = M.nvars();
    BracketReport report;
    std::vector<PolyMatrix> shifted(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) shifted[a * d + b] = M.action(b).apply_shift(M.shift(a));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            PolyMatrix lhs = M.action(a) * shifted[a * d + b] - M.action(b) * shifted[b * d + a];
            PolyMatrix rhs(M.rank(), M.rank(), nv);
            for (const auto& [l, c] : g.bracket(a, b)) rhs += M.action(l) * c;
            ++report.pairs_checked;
            PolyMatrix res = lhs - rhs;
            if (!res.is_zero()) report.failures.push_back({a, b, res});
        }
    for (int k = 0; k < g.rank(); ++k) {
        PolyMatrix expected = PolyMatrix::scalar(M.rank(), Poly::variable(nv, k));
        PolyMatrix res = M.action(k) - expected;
        if (!res.is_zero()) report.cartan_failures.push_back({static_cast<Label>(k), res});
    }
    return report;
}

std::vector<int> default_fingerprint_degrees(const LieAlgebra& g) {
    std::vector<int> out;
    for (int k = 2; k <= std::min(g.matrix_size(), 4); ++k) out.push_back(k);
    return out;
}

std::map<int, std::optional<Rat>> central_fingerprint(const FreeHModule& M, const std::vector<int>& degrees) {
    std::map<int, std::optional<Rat>> out;
    for (int k : degrees) {
        PolyMatrix Z = M.element_matrix(liealg::gelfand_invariant(M.algebra(), k));
        std::optional<Rat> value;
        if (M.rank() > 0 && Z(0, 0).is_constant()) {
            Rat c = Z(0, 0).constant_term();
            if (Z == PolyMatrix::scalar(M.rank(), Poly(M.nvars(), c))) value = c;
        }
        out[k] = value;
    }
    return out;
}

}  // namespace hfinite::hmodules
