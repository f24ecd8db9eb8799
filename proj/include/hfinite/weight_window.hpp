#pragma once

#include "hfinite/finite_rep.hpp"
#include "hfinite/hmodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hfinite::weightcat {

using exactalg::Poly;
using exactalg::Rat;
using exactalg::RatMatrix;
using hmodules::FreeHModule;
using liealg::AlgebraPtr;
using liealg::FiniteRep;
using liealg::Label;
using liealg::LieAlgebra;
using liealg::UEAWord;
using liealg::Weight;
using liealg::Word;

// A finite slice of a weight module: the weights base + sum k_i alpha_i with
// |k_i| <= radius, a vector space per weight and the matrices of the root
// vectors between neighbouring weights. Cartan elements act on slot lambda by
// lambda(h). Invalid slots carry no data; any word that passes through an
// invalid slot or leaves the box is undefined there.
class WeightWindow {
public:
    struct Slot {
        std::vector<int> offset;
        Weight weight;
        std::size_t dim = 0;
        bool valid = true;
    };

    WeightWindow(AlgebraPtr g, Weight base, int radius);

    const LieAlgebra& algebra() const { return *g_; }
    const AlgebraPtr& algebra_ptr() const { return g_; }
    const Weight& base() const { return base_; }
    int radius() const { return radius_; }

    std::size_t num_slots() const { return slots_.size(); }
    const Slot& slot(std::size_t s) const { return slots_.at(s); }
    const std::vector<Slot>& slots() const { return slots_; }
    std::optional<std::size_t> find_offset(const std::vector<int>& offset) const;
    std::optional<std::size_t> find_weight(const Weight& w) const;
    // The slot reached from s by a letter of the given root coordinates.
    std::optional<std::size_t> neighbor(std::size_t s, const std::vector<int>& shift) const;
    std::optional<std::size_t> neighbor(std::size_t s, Label x) const;
    bool on_boundary(std::size_t s) const;
    std::size_t boundary_shell_size() const;
    std::vector<std::size_t> valid_slots() const;
    std::size_t max_dim() const;

    // Matrix of the root vector x from slot s to its neighbour, if stored.
    const RatMatrix* map(Label x, std::size_t s) const;

    void set_slot(std::size_t s, std::size_t dim, bool valid = true);
    // Throws DimensionError when the shape disagrees with the slot dimensions.
    void set_map(Label x, std::size_t s, RatMatrix m);
    void clear_map(Label x, std::size_t s);

    // Largest entry degree of each label's action in the source module, or -1
    // when unknown.
    const std::vector<int>& label_degrees() const { return degrees_; }
    void set_label_degrees(std::vector<int> d) { degrees_ = std::move(d); }
    const std::string& description() const { return description_; }
    void set_description(std::string d) { description_ = std::move(d); }

    // The matrix of a word starting at slot s together with the end slot.
    std::optional<std::pair<RatMatrix, std::size_t>> word_action(const Word& w, std::size_t s) const;
    // The matrix of a homogeneous combination of words starting at slot s.
    std::optional<std::pair<RatMatrix, std::size_t>> element_action(const UEAWord& u, std::size_t s) const;

private:
    AlgebraPtr g_;
    Weight base_;
    int radius_;
    std::vector<Slot> slots_;
    std::vector<std::vector<std::optional<RatMatrix>>> maps_;  // [label][slot]
    std::vector<int> degrees_;
    std::string description_;

    std::size_t index_of(const std::vector<int>& offset) const;
};

// Evaluation of a free U(h)-module at the weights of a window. The matrix of
// x from slot lambda to lambda + alpha is A_x evaluated at lambda + alpha.
WeightWindow weighting(const FreeHModule& M, const Weight& base, int radius);

// Trace of u on slot s. Throws PreconditionError when u is not of weight
// zero and WindowError when a word leaves the defined part of the window.
Rat trace_map(const WeightWindow& W, const UEAWord& u, std::size_t s);
std::optional<Rat> try_trace(const WeightWindow& W, const UEAWord& u, std::size_t s);

struct Probe {
    std::string name;
    UEAWord word;
};

// Cartan letters, e f and f e for each simple root and the Gelfand invariants
// of degree 2 and 3.
std::vector<Probe> default_probe_catalog(const LieAlgebra& g);

struct TraceTable {
    Probe probe;
    std::vector<std::optional<Rat>> values;  // indexed by slot
};

TraceTable trace_table(const WeightWindow& W, const Probe& probe);

struct PolynomialFit {
    int degree = -1;
    std::optional<Poly> poly;
    std::vector<std::size_t> training;
    std::vector<std::size_t> holdout;
    std::vector<std::size_t> residual_slots;  // holdout slots that disagree
    bool exact() const { return poly.has_value() && residual_slots.empty(); }
};

// Sum over letters of the largest entry degree of their action, maximised
// over the words of u; nullopt when the window does not know the degrees.
std::optional<int> default_degree_bound(const WeightWindow& W, const UEAWord& u);

// Fits slot values by a polynomial in the weight coordinates. The training
// set is a simplex of lattice points, which determines a polynomial of the
// given degree uniquely; the rest of the defined slots are held out and
// checked exactly. Without a degree the smallest degree that validates is
// searched for. Throws WindowError when the holdout would be smaller than
// the requested fraction.
PolynomialFit fit_slot_values(const WeightWindow& W, const std::vector<std::optional<Rat>>& values,
                              std::optional<int> degree, const Rat& holdout_fraction = Rat(1, 4));

PolynomialFit trace_polynomial(const WeightWindow& W, const UEAWord& u, std::optional<int> degree_bound = std::nullopt,
                               const Rat& holdout_fraction = Rat(1, 4));

struct RootCuspidality {
    Weight root;
    Label up = 0, down = 0;
    PolynomialFit determinant;  // of e_{-alpha} e_alpha on each tested slot
    std::vector<std::size_t> zero_slots;
};

struct CuspidalityVerdict {
    bool cuspidal = false;
    bool degenerate = false;
    std::vector<std::size_t> tested_slots;
    std::vector<RootCuspidality> roots;
};

// For every root alpha, the determinant of going up by alpha and back down
// on each tested slot. Cuspidal when no tested slot makes any of them vanish.
// With no slots given, every slot where all these excursions are defined is
// tested.
CuspidalityVerdict cuspidality_test(const WeightWindow& W, std::vector<std::size_t> slots = {});

// slot(lambda) = sum over weights mu of V of slot_W(lambda - mu) (x) V_mu. The
// base moves up by the highest weight of V; slots whose components are not
// all present are invalid.
WeightWindow window_tensor(const WeightWindow& W, const FiniteRep& V);

// Tensor with the simple module whose highest weight is the dominant
// conjugate of lambda - mu, then keep on each slot the joint generalized
// eigenspace of the Gelfand invariants for the central character of lambda.
WeightWindow window_translate(const WeightWindow& W, const Weight& mu, const Weight& lambda);

struct EquivalenceVerdict {
    bool equivalent = false;
    std::vector<Weight> exceptional;
    std::size_t compared_slots = 0;
    std::size_t threshold = 0;
    std::vector<std::string> probes;
};

// Compares slot dimensions and trace tables on the weights defined in both
// windows. Equivalent when the disagreeing weights number at most the
// threshold, by default the boundary shell size of the smaller window.
EquivalenceVerdict almost_equivalent(const WeightWindow& a, const WeightWindow& b, const std::vector<Probe>& probes,
                                     std::optional<std::size_t> threshold = std::nullopt);

// Valid slots of maximal dimension.
std::vector<std::size_t> essential_support(const WeightWindow& W);

struct WindowBracketFailure {
    std::size_t slot;
    Label a, b;
};

// Checks x y - y x = [x, y] on every slot where both sides are defined.
std::vector<WindowBracketFailure> window_bracket_defects(const WeightWindow& W, std::size_t* checked = nullptr);

}  // namespace hfinite::weightcat
