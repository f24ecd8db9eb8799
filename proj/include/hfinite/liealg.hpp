#pragma once

#include "hfinite/matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hfinite::liealg {

using exactalg::Rat;
using exactalg::RatMatrix;

enum class Family { A, C };

std::string family_name(Family f);
Family parse_family(const std::string& s);

using Label = std::size_t;

// A linear functional on the Cartan subalgebra, stored as its values on the
// fixed Cartan basis (h_i for type A, the diagonal h~_i for type C).
struct Weight {
    std::vector<Rat> c;

    Weight() = default;
    explicit Weight(std::size_t n) : c(n) {}
    explicit Weight(std::vector<Rat> v) : c(std::move(v)) {}

    std::size_t size() const { return c.size(); }
    const Rat& operator[](std::size_t i) const { return c[i]; }
    Rat& operator[](std::size_t i) { return c[i]; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(const Rat& s) const;
    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator<(const Weight& o) const { return c < o.c; }
    bool is_zero() const;
    std::string to_string() const;
};

enum class RootKind { Cartan, Positive, Negative };

struct BasisElement {
    std::string name;
    RatMatrix matrix;
    Weight root;
    RootKind kind;
    std::vector<int> root_coords;  // coefficients on the simple roots
};

using Coeffs = std::vector<std::pair<Label, Rat>>;

class LieAlgebra {
public:
    static std::shared_ptr<const LieAlgebra> make(Family family, int n);

    Family family() const { return family_; }
    int rank() const { return n_; }
    int matrix_size() const { return N_; }
    std::size_t dim() const { return basis_.size(); }
    std::string cartan_tag() const { return family_ == Family::A ? "h" : "htilde"; }
    std::string name() const;

    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& basis(Label l) const { return basis_.at(l); }
    Label find(const std::string& name) const;
    std::optional<Label> root_vector(const Weight& root) const;
    bool is_cartan(Label l) const { return l < static_cast<Label>(n_); }

    const Coeffs& bracket(Label a, Label b) const { return brackets_[a * basis_.size() + b]; }
    // Coordinates of an N x N matrix on the basis; throws if it is not in the algebra.
    std::vector<Rat> coordinates(const RatMatrix& x) const;
    std::optional<std::vector<Rat>> try_coordinates(const RatMatrix& x) const;
    RatMatrix matrix_of(const std::vector<Rat>& coords) const;
    // Cartan-basis coordinates of a Cartan element given as a matrix.
    std::vector<Rat> cartan_coordinates(const RatMatrix& h) const;

    const std::vector<Label>& positive_labels() const { return positive_; }
    const std::vector<Label>& simple_e() const { return simple_e_; }
    const std::vector<Label>& simple_f() const { return simple_f_; }
    Label negative_of(Label positive) const;
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    // Coroot h_alpha of positive root number k, on the Cartan basis.
    const std::vector<Rat>& coroot(std::size_t k) const { return coroots_[k]; }
    const std::vector<Rat>& simple_coroot(std::size_t i) const { return simple_coroots_[i]; }
    std::size_t num_positive_roots() const { return positive_.size(); }
    const Weight& positive_root(std::size_t k) const { return basis_[positive_[k]].root; }

    Rat pair_coroot(const Weight& w, const std::vector<Rat>& coroot) const;
    Rat pair_positive(const Weight& w, std::size_t k) const { return pair_coroot(w, coroots_[k]); }
    std::vector<Rat> dynkin_labels(const Weight& w) const;
    Weight from_dynkin(const std::vector<Rat>& labels) const;
    Weight fundamental_weight(std::size_t i) const;
    const Weight& rho() const { return rho_; }
    Weight zero_weight() const { return Weight(static_cast<std::size_t>(n_)); }

    std::optional<std::vector<int>> root_lattice_coords(const Weight& w) const;
    Weight from_root_coords(const std::vector<int>& k) const;

    // Values of a weight on the diagonal elements h~_k (type A: E_kk - I/(n+1)).
    std::vector<Rat> epsilon_coords(const Weight& w) const;
    Weight from_epsilon(const std::vector<Rat>& eps) const;
    // h~_k written on the Cartan basis.
    std::vector<Rat> htilde_on_basis(std::size_t k) const;

private:
    Family family_{};
    int n_ = 0, N_ = 0;
    std::vector<BasisElement> basis_;
    std::vector<Coeffs> brackets_;
    std::vector<Label> positive_, simple_e_, simple_f_, negative_of_;
    std::vector<Weight> simple_roots_;
    std::vector<std::vector<Rat>> coroots_, simple_coroots_;
    RatMatrix coord_solver_;  // left inverse of the flattened basis
    RatMatrix simple_root_inverse_;
    Weight rho_;

    void finish();
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

}  // namespace hfinite::liealg
