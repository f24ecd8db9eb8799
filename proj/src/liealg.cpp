#include "hfinite/liealg.hpp"

#include "hfinite/errors.hpp"

namespace hfinite::liealg {

std::string family_name(Family f) { return f == Family::A ? "A" : "C"; }

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a" || s == "sl") return Family::A;
    if (s == "C" || s == "c" || s == "sp") return Family::C;
    throw PreconditionError("unknown Lie algebra family '" + s + "'");
}

Weight Weight::operator+(const Weight& o) const {
    if (size() != o.size()) throw DimensionError("weight length mismatch");
    Weight r(*this);
    for (std::size_t i = 0; i < size(); ++i) r.c[i] += o.c[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
    Weight r(*this);
    for (auto& x : r.c) x = -x;
    return r;
}

Weight Weight::operator*(const Rat& s) const {
    Weight r(*this);
    for (auto& x : r.c) x *= s;
    return r;
}

bool Weight::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

std::string Weight::to_string() const { return "(" + exactalg::rat_list_to_string(c) + ")"; }

namespace {

RatMatrix unit(int N, int i, int j, const Rat& v = Rat(1)) {
    RatMatrix m(N, N);
    m(i, j) = v;
    return m;
}

std::string eps_name(int sign_i, int i, int sign_j, int j) {
    auto term = [](int s, int k, bool first) {
        std::string t = s < 0 ? "-" : (first ? "" : "+");
        return t + "e" + std::to_string(k + 1);
    };
    return "e(" + term(sign_i, i, true) + term(sign_j, j, false) + ")";
}

}  // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::make(Family family, int n) {
    if (n < 1) throw PreconditionError("Lie algebra rank must be positive");
    if (n > static_cast<int>(exactalg::kMaxVars)) throw PreconditionError("rank exceeds supported variable count");
    auto g = std::make_shared<LieAlgebra>();
    g->family_ = family;
    g->n_ = n;
    auto& b = g->basis_;
    if (family == Family::A) {
        int N = n + 1;
        g->N_ = N;
        for (int k = 0; k < n; ++k)
            b.push_back({"h" + std::to_string(k + 1), unit(N, k, k) - unit(N, k + 1, k + 1), {}, RootKind::Cartan, {}});
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                b.push_back({"E" + std::to_string(i + 1) + "_" + std::to_string(j + 1), unit(N, i, j), {},
                             RootKind::Positive, {}});
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                b.push_back({"E" + std::to_string(j + 1) + "_" + std::to_string(i + 1), unit(N, j, i), {},
                             RootKind::Negative, {}});
    } else {
        if (n < 1) throw PreconditionError("symplectic rank must be positive");
        int N = 2 * n;
        g->N_ = N;
        for (int k = 0; k < n; ++k)
            b.push_back({"ht" + std::to_string(k + 1), unit(N, k, k) - unit(N, n + k, n + k), {}, RootKind::Cartan, {}});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                b.push_back({eps_name(1, i, -1, j), unit(N, i, j) - unit(N, n + j, n + i), {}, RootKind::Positive, {}});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                b.push_back({eps_name(1, i, 1, j), unit(N, i, n + j) + unit(N, j, n + i), {}, RootKind::Positive, {}});
        for (int i = 0; i < n; ++i)
            b.push_back({"e(2e" + std::to_string(i + 1) + ")", unit(N, i, n + i, 2), {}, RootKind::Positive, {}});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                b.push_back({eps_name(1, j, -1, i), unit(N, j, i) - unit(N, n + i, n + j), {}, RootKind::Negative, {}});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                b.push_back({eps_name(-1, i, -1, j), unit(N, n + i, j, -1) + unit(N, n + j, i, -1), {},
                             RootKind::Negative, {}});
        for (int i = 0; i < n; ++i)
            b.push_back({"e(-2e" + std::to_string(i + 1) + ")", unit(N, n + i, i, -2), {}, RootKind::Negative, {}});
    }
    if (family == Family::A) {
        for (int i = 0; i < n; ++i) g->simple_e_.push_back(g->find("E" + std::to_string(i + 1) + "_" + std::to_string(i + 2)));
    } else {
        for (int i = 0; i + 1 < n; ++i) g->simple_e_.push_back(g->find(eps_name(1, i, -1, i + 1)));
        g->simple_e_.push_back(g->find("e(2e" + std::to_string(n) + ")"));
    }
    g->finish();
    return g;
}

void LieAlgebra::finish() {
    const std::size_t d = basis_.size();
    const std::size_t NN = static_cast<std::size_t>(N_) * N_;
    RatMatrix B(NN, d);
    for (std::size_t j = 0; j < d; ++j)
        for (int r = 0; r < N_; ++r)
            for (int c = 0; c < N_; ++c) B(r * N_ + c, j) = basis_[j].matrix(r, c);
    RatMatrix bt = B.transpose();
    auto gram_inv = exactalg::solve(bt * B, RatMatrix::identity(d));
    if (!gram_inv) throw Error("basis matrices are linearly dependent");
    coord_solver_ = *gram_inv * bt;

    for (auto& e : basis_) {
        e.root = Weight(static_cast<std::size_t>(n_));
        if (e.kind == RootKind::Cartan) continue;
        int r0 = -1, c0 = -1;
        for (int r = 0; r < N_ && r0 < 0; ++r)
            for (int c = 0; c < N_; ++c)
                if (e.matrix(r, c) != 0) {
                    r0 = r;
                    c0 = c;
                    break;
                }
        for (int k = 0; k < n_; ++k) {
            RatMatrix ad = exactalg::commutator(basis_[k].matrix, e.matrix);
            Rat v = ad(r0, c0) / e.matrix(r0, c0);
            if (ad != e.matrix * v) throw Error("basis element is not a root vector");
            e.root[k] = v;
        }
    }

    brackets_.assign(d * d, {});
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            auto coords = coordinates(exactalg::commutator(basis_[a].matrix, basis_[b].matrix));
            Coeffs cs;
            for (std::size_t k = 0; k < d; ++k)
                if (coords[k] != 0) cs.emplace_back(k, coords[k]);
            brackets_[a * d + b] = std::move(cs);
        }

    negative_of_.assign(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        if (basis_[a].kind == RootKind::Positive) positive_.push_back(a);
        if (basis_[a].kind == RootKind::Cartan) continue;
        for (std::size_t b = 0; b < d; ++b)
            if (basis_[b].kind != RootKind::Cartan && basis_[b].root == -basis_[a].root) negative_of_[a] = b;
    }
    for (auto e : simple_e_) {
        simple_f_.push_back(negative_of_[e]);
        simple_roots_.push_back(basis_[e].root);
    }

    auto coroot_of = [&](Label e) {
        Label f = negative_of_[e];
        auto h = cartan_coordinates(exactalg::commutator(basis_[e].matrix, basis_[f].matrix));
        Rat val = pair_coroot(basis_[e].root, h);
        if (val == 0) throw Error("degenerate root pairing");
        for (auto& x : h) x *= Rat(2) / val;
        return h;
    };
    for (auto e : positive_) coroots_.push_back(coroot_of(e));
    for (auto e : simple_e_) simple_coroots_.push_back(coroot_of(e));

    RatMatrix S(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) S(k, i) = simple_roots_[i][k];
    auto inv = exactalg::solve(S, RatMatrix::identity(n_));
    if (!inv) throw Error("simple roots are dependent");
    simple_root_inverse_ = *inv;
    for (auto& e : basis_) {
        auto rc = root_lattice_coords(e.root);
        if (!rc) throw Error("root outside the root lattice");
        e.root_coords = *rc;
    }

    rho_ = zero_weight();
    for (auto p : positive_) rho_ = rho_ + basis_[p].root;
    rho_ = rho_ * Rat(1, 2);
}

std::string LieAlgebra::name() const {
    return family_ == Family::A ? "sl(" + std::to_string(n_ + 1) + ")" : "sp(" + std::to_string(2 * n_) + ")";
}

Label LieAlgebra::find(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return i;
    throw PreconditionError("no basis element named '" + name + "'");
}

std::optional<Label> LieAlgebra::root_vector(const Weight& root) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].kind != RootKind::Cartan && basis_[i].root == root) return i;
    return std::nullopt;
}

Label LieAlgebra::negative_of(Label positive) const {
    if (basis_.at(positive).kind == RootKind::Cartan) throw PreconditionError("Cartan element has no opposite root vector");
    return negative_of_[positive];
}

std::optional<std::vector<Rat>> LieAlgebra::try_coordinates(const RatMatrix& x) const {
    if (x.rows() != static_cast<std::size_t>(N_) || x.cols() != static_cast<std::size_t>(N_))
        throw DimensionError("matrix size does not match the algebra");
    const std::size_t d = basis_.size();
    std::vector<Rat> c(d);
    for (std::size_t j = 0; j < d; ++j)
        for (int r = 0; r < N_; ++r)
            for (int s = 0; s < N_; ++s) {
                const Rat& v = x(r, s);
                if (v != 0) c[j] += coord_solver_(j, r * N_ + s) * v;
            }
    if (matrix_of(c) != x) return std::nullopt;
    return c;
}

std::vector<Rat> LieAlgebra::coordinates(const RatMatrix& x) const {
    auto c = try_coordinates(x);
    if (!c) throw PreconditionError("matrix does not lie in " + name());
    return *c;
}

RatMatrix LieAlgebra::matrix_of(const std::vector<Rat>& coords) const {
    RatMatrix m(N_, N_);
    for (std::size_t j = 0; j < basis_.size(); ++j)
        if (coords[j] != 0) m += basis_[j].matrix * coords[j];
    return m;
}

std::vector<Rat> LieAlgebra::cartan_coordinates(const RatMatrix& h) const {
    auto c = coordinates(h);
    for (std::size_t j = n_; j < c.size(); ++j)
        if (c[j] != 0) throw PreconditionError("matrix is not in the Cartan subalgebra");
    c.resize(n_);
    return c;
}

Rat LieAlgebra::pair_coroot(const Weight& w, const std::vector<Rat>& coroot) const {
    Rat s(0);
    for (int i = 0; i < n_; ++i) s += w[i] * coroot[i];
    return s;
}

std::vector<Rat> LieAlgebra::dynkin_labels(const Weight& w) const {
    std::vector<Rat> out;
    for (const auto& h : simple_coroots_) out.push_back(pair_coroot(w, h));
    return out;
}

Weight LieAlgebra::from_dynkin(const std::vector<Rat>& labels) const {
    if (labels.size() != static_cast<std::size_t>(n_)) throw DimensionError("wrong number of Dynkin labels");
    RatMatrix H(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) H(i, k) = simple_coroots_[i][k];
    RatMatrix rhs(n_, 1);
    for (int i = 0; i < n_; ++i) rhs(i, 0) = labels[i];
    auto x = exactalg::solve(H, rhs);
    return Weight(x->column(0));
}

Weight LieAlgebra::fundamental_weight(std::size_t i) const {
    std::vector<Rat> labels(n_);
    labels.at(i) = 1;
    return from_dynkin(labels);
}

std::optional<std::vector<int>> LieAlgebra::root_lattice_coords(const Weight& w) const {
    std::vector<int> k(n_);
    for (int i = 0; i < n_; ++i) {
        Rat v(0);
        for (int j = 0; j < n_; ++j) v += simple_root_inverse_(i, j) * w[j];
        if (!exactalg::is_integer(v)) return std::nullopt;
        k[i] = static_cast<int>(v.get_num().get_si());
    }
    return k;
}

Weight LieAlgebra::from_root_coords(const std::vector<int>& k) const {
    Weight w = zero_weight();
    for (int i = 0; i < n_; ++i) w = w + simple_roots_[i] * Rat(k[i]);
    return w;
}

std::vector<Rat> LieAlgebra::htilde_on_basis(std::size_t k) const {
    if (family_ == Family::C) {
        std::vector<Rat> v(n_);
        v.at(k) = 1;
        return v;
    }
    RatMatrix m(N_, N_);
    m(k, k) = 1;
    for (int i = 0; i < N_; ++i) m(i, i) -= Rat(1, N_);
    return cartan_coordinates(m);
}

std::vector<Rat> LieAlgebra::epsilon_coords(const Weight& w) const {
    std::vector<Rat> e(n_);
    for (int k = 0; k < n_; ++k) e[k] = pair_coroot(w, htilde_on_basis(k));
    return e;
}

Weight LieAlgebra::from_epsilon(const std::vector<Rat>& eps) const {
    if (eps.size() != static_cast<std::size_t>(n_)) throw DimensionError("wrong number of epsilon coordinates");
    RatMatrix T(n_, n_), rhs(n_, 1);
    for (int k = 0; k < n_; ++k) {
        auto row = htilde_on_basis(k);
        for (int j = 0; j < n_; ++j) T(k, j) = row[j];
        rhs(k, 0) = eps[k];
    }
    auto x = exactalg::solve(T, rhs);
    return Weight(x->column(0));
}

}  // namespace hfinite::liealg
