#pragma once

#include "hfinite/liealg.hpp"

#include <functional>

namespace hfinite::liealg {

// A linear automorphism of g, stored by the basis coordinates of the image of
// each basis element.
class AlgebraAutomorphism {
public:
    AlgebraAutomorphism(AlgebraPtr g, std::vector<std::vector<Rat>> images, std::string name);
    // Builds the automorphism from a linear map on N x N matrices.
    static AlgebraAutomorphism from_matrix_map(AlgebraPtr g, const std::function<RatMatrix(const RatMatrix&)>& f,
                                               std::string name);

    const LieAlgebra& algebra() const { return *g_; }
    const AlgebraPtr& algebra_ptr() const { return g_; }
    const std::string& name() const { return name_; }
    const std::vector<Rat>& image(Label l) const { return images_.at(l); }
    const std::vector<std::vector<Rat>>& images() const { return images_; }
    RatMatrix apply(const RatMatrix& x) const;

    bool preserves_cartan() const;
    // M with psi(H_j) = sum_i M(i, j) H_i; requires preserves_cartan().
    RatMatrix cartan_block() const;
    bool preserves_brackets() const;

    AlgebraAutomorphism inverse() const;
    AlgebraAutomorphism then(const AlgebraAutomorphism& next) const;  // next o this

private:
    AlgebraPtr g_;
    std::vector<std::vector<Rat>> images_;
    std::string name_;
};

// tau(X) = -X^T; on type A this is tau(E_ij) = -E_ji.
AlgebraAutomorphism make_tau(const AlgebraPtr& g);
// Conjugation by a diagonal matrix. Type A takes n+1 scalars; type C takes n
// scalars a and uses diag(a, 1/a).
AlgebraAutomorphism make_diag(const AlgebraPtr& g, const std::vector<Rat>& a);
// theta_b = exp(-ad x_b) with x_b = sum_j b_j E_{n+1,j}; type A only.
AlgebraAutomorphism make_theta(const AlgebraPtr& g, const std::vector<Rat>& b);
RatMatrix theta_matrix(int n, const std::vector<Rat>& b, const RatMatrix& y);

// The complement q_b = theta_b(l + u) to the Cartan subalgebra, where l is the
// gl(n) Levi block and u is spanned by the E_{i,n+1}.
class ParabolicComplement {
public:
    ParabolicComplement(AlgebraPtr g, std::vector<Rat> b);

    const LieAlgebra& algebra() const { return *g_; }
    const AlgebraPtr& algebra_ptr() const { return g_; }
    const std::vector<Rat>& b() const { return b_; }
    std::size_t dim() const { return q_basis_.size(); }
    const std::vector<RatMatrix>& q_basis() const { return q_basis_; }
    bool contains(const RatMatrix& x) const;

    struct Split {
        std::vector<Rat> cartan;  // on the Cartan basis
        RatMatrix q;              // the q_b component
    };
    Split decompose(const RatMatrix& x) const;
    // Element of gl(n) through which q acts on a Levi module: theta_b^{-1}(q)
    // lies in l + u; the u part acts by zero and l is identified with gl(n)
    // via E_ij -> E_ij and h~_k -> E_kk.
    RatMatrix levi_image(const RatMatrix& q) const;

private:
    AlgebraPtr g_;
    std::vector<Rat> b_;
    std::vector<RatMatrix> q_basis_;
    RatMatrix solver_;
};

}  // namespace hfinite::liealg
