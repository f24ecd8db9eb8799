#pragma once

#include "hfinite/automorphism.hpp"
#include "hfinite/finite_rep.hpp"
#include "hfinite/hmodule.hpp"

namespace hfinite::hmodules {

using liealg::FiniteRep;

// The rank-one sp(2n)-module M0 on C[h~_1, ..., h~_n].
FreeHModule m0(const AlgebraPtr& g);

// U(g) (x)_{U(q)} V with V a gl(n)-module, viewed as a q_b-module through
// theta_b^{-1} with the nilradical acting by zero.
FreeHModule parabolic_verma(const liealg::ParabolicComplement& q, const FiniteRep& V);

// M^psi with a . m = psi(a) m; psi must preserve the Cartan subalgebra.
FreeHModule twist(const FreeHModule& M, const liealg::AlgebraAutomorphism& psi);

// M (x) V on generators v_j (x) w_mu, with p . (v_j (x) w_mu) = sigma_{-mu}(p) v_j (x) w_mu.
FreeHModule tensor_finite(const FreeHModule& M, const FiniteRep& V);

// Hom_{U(h)}(M, U(h)) with the action twisted by the anti-automorphism x -> x^T.
FreeHModule dual_module(const FreeHModule& M);

// Repeated application of 1 - e_{-2 e_i} to f in M0, ending at a non-zero
// constant. steps[0] = f and variables[k] is the index used at step k.
struct ReductionWitness {
    std::vector<Poly> steps;
    std::vector<int> variables;
};
ReductionWitness m0_reduction_witness(const Poly& f);

}  // namespace hfinite::hmodules
