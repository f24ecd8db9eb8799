#pragma once

#include "hfinite/weight_window.hpp"
#include "hfinite/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hfinite::coherent {

using exactalg::Int;
using exactalg::Poly;
using exactalg::Rat;
using liealg::AlgebraPtr;
using liealg::LieAlgebra;
using liealg::Weight;
using liealg::WeylElement;
using weightcat::PolynomialFit;
using weightcat::Probe;
using weightcat::WeightWindow;

struct AlmostCoherentCertificate {
    std::size_t degree = 0;
    Weight base;
    int radius = 0;
    std::size_t window_slots = 0;  // valid slots examined
    std::vector<Probe> probes;
    std::vector<PolynomialFit> fits;  // one per probe
    std::vector<std::string> fit_errors;  // empty string when the fit ran
    std::vector<std::size_t> exceptional_slots;
    bool pass = false;
};

// Degree = largest slot dimension; passes when every valid slot has that
// dimension and every probe's trace fits a polynomial with no holdout
// residual.
AlmostCoherentCertificate certify_almost_coherent(const WeightWindow& W, const std::vector<Probe>& probes);

// w_0 = 1 and w_i = s_n s_{n-1} ... s_{n-i+1}, as 0-based simple indices.
std::vector<int> w_word(int n, int i);

// Alternating sum of dimensions of simple modules of the Levi subalgebra on
// the first n - 1 simple roots at w_{k+i} . lambda. Type A, lambda dominant
// integral, 1 <= k <= n.
Int deg_k(const LieAlgebra& g, const Weight& lambda, int k);

struct DegIdentityRow {
    int k;
    Int lhs;  // deg_k + deg_{k+1}
    Int rhs;  // dim of the gl(n)-module at w_k . lambda
    bool ok() const { return lhs == rhs; }
};

std::vector<DegIdentityRow> deg_identity_check(const LieAlgebra& g, const Weight& lambda);

// Rank of the n x m matrix (deg_k(lambda_j)).
std::size_t deg_evaluation_rank(const LieAlgebra& g, const std::vector<Weight>& samples);
bool deg_linear_independence(const LieAlgebra& g, const std::vector<Weight>& samples);

enum class CharClass { IntegralRegular, IntegralSingular, NonIntegral };
std::string class_name(CharClass c);

struct CentralCharClass {
    Weight input;
    CharClass kind = CharClass::IntegralRegular;
    Weight normal_form;
    std::optional<int> singular_index;  // 1-based, integral singular case only
};

// The unique dot-orbit representative satisfying the constraints of its
// class. Throws NotInScope when no representative satisfies any class and
// Error when two do. On sl(2) the non-integral constraints hold for both
// orbit members and the one with (wt + rho)(h_1) > 0 is returned.
CentralCharClass wt_normal_form(const LieAlgebra& g, const Weight& lambda);

// Words w with L(w . wt(chi)) admissible (type A). For the integral regular
// class, family is the index i of the family of L(s_i . lambda).
std::vector<std::vector<int>> admissible_word_list(const LieAlgebra& g, const CentralCharClass& c, int family = 1);

// Harish-Chandra eigenvalue of a central element as a polynomial in the
// weight coordinates, fitted exactly and checked on extra points.
Poly hc_polynomial(const LieAlgebra& g, const liealg::UEAWord& z, int degree);

// Weights on the grid (1/denominator) Z^n inside [-bound, bound]^n whose
// Gelfand eigenvalues match the fingerprint.
std::vector<Weight> weights_with_fingerprint(const LieAlgebra& g, const std::map<int, Rat>& fingerprint, int bound,
                                             int denominator = 2);

// Normal form of the central character with the given fingerprint, found by
// grid search. Throws NotInScope when no grid weight matches and Error when
// matching weights have different normal forms.
CentralCharClass normal_form_from_fingerprint(const LieAlgebra& g, const std::map<int, Rat>& fingerprint, int bound = 4);

enum class DegreeOneVerdict { NotDegreeOne, FirstPattern, SecondPattern, Omega, NoMatch };
std::string verdict_name(DegreeOneVerdict v);

struct DegreeOneResult {
    DegreeOneVerdict verdict = DegreeOneVerdict::NoMatch;
    std::optional<Rat> parameter;  // a or N
    Weight witness;                // the matching orbit element
};

// Type A: a family of degree one has the central character of a omega_1 with
// a not in Z>=0, or of -(N+2) omega_1 + (N+1) omega_2 with N in Z>=0. Type C:
// the central character of omega+. The second type A pattern is tried first.
DegreeOneResult degree_one_recognition(const LieAlgebra& g, const CentralCharClass& c, std::size_t fitted_degree);

// omega+ of sp(2n): Dynkin labels (0, ..., 0, -1/2).
Weight omega_plus(const LieAlgebra& g);

}  // namespace hfinite::coherent
