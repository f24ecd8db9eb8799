#pragma once

#include "hfinite/liealg.hpp"

#include <set>

namespace hfinite::liealg {

// Word convention: word {i1, ..., ik} denotes s_{i1} s_{i2} ... s_{ik}, so the
// rightmost reflection acts first. Indices are zero-based.
struct WeylElement {
    std::vector<int> word;  // a reduced word
    RatMatrix action;       // on Cartan-basis weight coordinates

    std::size_t length() const { return word.size(); }
    std::string word_string() const;  // "s2 s1", or "1"
};

class WeylGroup {
public:
    explicit WeylGroup(AlgebraPtr alg);

    const LieAlgebra& algebra() const { return *alg_; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    std::size_t index_of(const RatMatrix& action) const;
    // The group element of an arbitrary (not necessarily reduced) word.
    const WeylElement& element(const std::vector<int>& word) const;
    bool is_reduced(const std::vector<int>& word) const;

    Weight apply(const WeylElement& w, const Weight& lambda) const;
    Weight dot(const WeylElement& w, const Weight& lambda) const;
    Weight dot(const std::vector<int>& word, const Weight& lambda) const { return dot(element(word), lambda); }

    std::vector<Weight> dot_orbit(const Weight& lambda) const;
    std::set<std::size_t> dot_stabilizer(const Weight& lambda) const;

private:
    AlgebraPtr alg_;
    std::vector<RatMatrix> simple_;
    std::vector<WeylElement> elements_;
};

using WeylPtr = std::shared_ptr<const WeylGroup>;
WeylPtr weyl_group(const AlgebraPtr& alg);

// lambda(h_alpha) is never a negative integer for positive roots alpha.
bool in_dominant_region(const LieAlgebra& g, const Weight& lambda);
// lambda(h_alpha) is an integer for all roots alpha.
bool is_integral(const LieAlgebra& g, const Weight& lambda);
// Regular for the dot action: (lambda + rho)(h_alpha) != 0 for all roots.
bool is_dot_regular(const LieAlgebra& g, const Weight& lambda);
bool is_dominant_integral(const LieAlgebra& g, const Weight& lambda);

bool same_central_character(const WeylGroup& W, const Weight& lambda, const Weight& mu);
bool translation_compatible(const WeylGroup& W, const Weight& lambda, const Weight& mu);

// Levi subalgebra spanned by the Cartan subalgebra and the root spaces of the
// listed simple roots.
struct LeviSpec {
    std::vector<int> simple;
};

// Dimension of the simple Levi module of highest weight lambda; lambda must be
// dominant integral for the Levi roots.
exactalg::Int weyl_dim(const LieAlgebra& g, const LeviSpec& levi, const Weight& lambda);
exactalg::Int weyl_dim(const LieAlgebra& g, const Weight& lambda);
// gl(n) highest weight given by its values on E_11, ..., E_nn.
exactalg::Int gl_weyl_dim(const std::vector<Rat>& eps);

}  // namespace hfinite::liealg
