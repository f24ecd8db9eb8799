#pragma once

#include "hfinite/finite_rep.hpp"
#include "hfinite/hmodule.hpp"

#include <array>
#include <set>

namespace hfinite::hmodules {

using liealg::FiniteRep;

// Choices for the three terms of the realization whose printed form admits
// more than one reading.
struct OmegaReading {
    // E_ij with i in S and j outside S: extra term x_i x_j, or x_i d_j.
    bool mixed_is_product = true;
    // Sign of d_j (x) E_ij inside E_{i,n+1} when i is in S and j is not.
    int levi_sign = -1;
    // Multiplier of (x) E_ir inside E_{i,n+1} when i, r are in S: x_r, or x_i.
    bool wedge_uses_r = true;

    std::string describe() const;
    bool operator==(const OmegaReading& o) const = default;
    static std::vector<OmegaReading> all();
};

// One normally ordered term c x^a d^b (x) X, where X is E_{gl_i, gl_j} of
// gl(n) or the identity when gl_i < 0.
struct WeylTerm {
    Rat coeff;
    exactalg::Monomial xpow, dpow;
    int gl_i = -1, gl_j = -1;
};
using WeylOperator = std::vector<WeylTerm>;

// An element sum_l p_l(x) e^{b.x} (x) v_l, stored as the polynomials p_l.
using CarrierElement = std::vector<Poly>;

// O e^{b.x} (x) V twisted by the realization omega_S of sl(n+1) in
// A_n (x) U(gl(n)); d_i acts on p e^{b.x} as (d/dx_i + b_i) p.
class WeylCarrier {
public:
    WeylCarrier(AlgebraPtr g, std::vector<Rat> b, FiniteRep V, std::set<int> S, OmegaReading reading = {});

    const LieAlgebra& algebra() const { return *g_; }
    const AlgebraPtr& algebra_ptr() const { return g_; }
    int n() const { return g_->rank(); }
    const std::vector<Rat>& b() const { return b_; }
    const FiniteRep& V() const { return V_; }
    const std::set<int>& S() const { return S_; }
    const OmegaReading& reading() const { return reading_; }

    const WeylOperator& image(Label x) const { return images_.at(x); }
    const WeylOperator& htilde_image(int k) const { return htilde_.at(k); }
    CarrierElement apply(const WeylOperator& op, const CarrierElement& c) const;
    CarrierElement act(Label x, const CarrierElement& c) const { return apply(images_.at(x), c); }
    CarrierElement zero() const;

    // p_l(h) e_l  ->  sum_l p_l(h) . (1 e^{b.x} (x) v_l), computed through the
    // carrier action of the Cartan elements.
    CarrierElement from_free(const std::vector<Poly>& coeffs) const;
    // Inverse of from_free, by the closed triangular solve on monomials.
    std::vector<Poly> to_free(const CarrierElement& c) const;

private:
    AlgebraPtr g_;
    std::vector<Rat> b_;
    FiniteRep V_;
    std::set<int> S_;
    OmegaReading reading_;
    std::vector<WeylOperator> images_;
    std::vector<WeylOperator> htilde_;
    std::vector<std::vector<Rat>> htilde_to_basis_;  // h~_k on the Cartan basis
    std::vector<std::vector<Rat>> basis_to_htilde_;  // Cartan basis element j on the h~_k

    void build_images();
};

FreeHModule weyl_to_free(const WeylCarrier& C);

// The module E(b, V, S) with V = L_gl(n)(lambda + (n+1) omega_n).
FreeHModule exponential_module(const AlgebraPtr& g, const std::vector<Rat>& b, const Weight& lambda,
                               const std::set<int>& S, const OmegaReading& reading = {});
// The gl(n) highest weight lambda + (n+1) omega_n on E_11, ..., E_nn.
std::vector<Rat> exponential_gl_weight(const LieAlgebra& g, const Weight& lambda);

struct ReadingCheck {
    OmegaReading reading;
    std::size_t samples = 0;
    std::size_t failures = 0;
};
// Counts bracket residuals of omega_S over sampled carrier elements.
ReadingCheck check_reading(const WeylCarrier& C, std::size_t samples, unsigned seed);

}  // namespace hfinite::hmodules
