#pragma once

#include "hfinite/uea.hpp"

#include <map>
#include <optional>
#include <string>

namespace hfinite::hmodules {

using exactalg::Poly;
using exactalg::PolyMatrix;
using exactalg::Rat;
using exactalg::ShiftMap;
using liealg::AlgebraPtr;
using liealg::Label;
using liealg::LieAlgebra;
using liealg::UEAWord;
using liealg::Weight;
using liealg::Word;

// A g-module that is free of finite rank over U(h). For a root vector x of
// weight alpha, x (p v_j) = sigma_alpha(p) sum_i A_x(i, j) v_i; Cartan
// elements act by A_h = h I.
class FreeHModule {
public:
    FreeHModule(AlgebraPtr g, std::size_t rank, std::vector<PolyMatrix> actions,
                std::map<std::string, std::string> metadata = {});

    const LieAlgebra& algebra() const { return *g_; }
    const AlgebraPtr& algebra_ptr() const { return g_; }
    std::size_t rank() const { return rank_; }
    std::size_t nvars() const { return static_cast<std::size_t>(g_->rank()); }
    const PolyMatrix& action(Label x) const { return actions_.at(x); }
    const std::vector<PolyMatrix>& actions() const { return actions_; }
    const std::map<std::string, std::string>& metadata() const { return metadata_; }
    void set_metadata(const std::string& key, const std::string& value) { metadata_[key] = value; }

    ShiftMap shift(Label x) const;
    // Coefficient vectors over U(h), one polynomial per free generator.
    std::vector<Poly> act(Label x, const std::vector<Poly>& m) const;
    PolyMatrix word_matrix(const Word& w) const;
    PolyMatrix element_matrix(const UEAWord& u) const;
    int label_degree(Label x) const { return actions_.at(x).max_degree(); }

private:
    AlgebraPtr g_;
    std::size_t rank_;
    std::vector<PolyMatrix> actions_;
    std::map<std::string, std::string> metadata_;
};

struct BracketFailure {
    Label a, b;
    PolyMatrix residual;
};

struct CartanFailure {
    Label h;
    PolyMatrix residual;
};

struct BracketReport {
    std::size_t pairs_checked = 0;
    std::vector<BracketFailure> failures;
    std::vector<CartanFailure> cartan_failures;
    bool pass() const { return failures.empty() && cartan_failures.empty(); }
};

// Checks A_[x,y] = A_x sigma_alpha(A_y) - A_y sigma_beta(A_x) for every pair
// of basis elements and A_h = h I on the Cartan basis.
BracketReport validate_bracket(const FreeHModule& M);

// Scalars by which the degree-k Gelfand invariants act; nullopt where the
// action is not a constant scalar matrix.
std::map<int, std::optional<Rat>> central_fingerprint(const FreeHModule& M, const std::vector<int>& degrees);
std::vector<int> default_fingerprint_degrees(const LieAlgebra& g);

}  // namespace hfinite::hmodules
