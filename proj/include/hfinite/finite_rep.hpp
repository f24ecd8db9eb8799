#pragma once

#include "hfinite/liealg.hpp"

namespace hfinite::liealg {

// A finite-dimensional representation on a weight basis. action[l] is the
// matrix of generator l of the acting algebra; weights[v] lists the
// eigenvalues of its Cartan generators on basis vector v.
struct FiniteRep {
    std::size_t dim = 0;
    std::vector<RatMatrix> action;
    std::vector<std::vector<Rat>> weights;
    std::string description;
};

// gl(n) generators are indexed by i * n + j for E_{i+1, j+1}.
inline std::size_t gl_label(int n, int i, int j) { return static_cast<std::size_t>(i * n + j); }
std::vector<RatMatrix> gl_generators(int n);

// Simple gl(n)-module with highest weight given by its values on E_11..E_nn.
// Requires consecutive differences to be non-negative integers.
FiniteRep irrep_gl(int n, const std::vector<Rat>& eps);

// Simple finite-dimensional module of a dominant integral weight.
FiniteRep irrep(const LieAlgebra& g, const Weight& lambda);

// Largest total violation count of [X_a, X_b] = sum c_k X_k over all pairs
// of g, zero for a genuine representation.
std::size_t representation_defects(const LieAlgebra& g, const FiniteRep& V);

}  // namespace hfinite::liealg
