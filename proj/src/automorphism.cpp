#include "hfinite/automorphism.hpp"

#include "hfinite/errors.hpp"

namespace hfinite::liealg {

AlgebraAutomorphism::AlgebraAutomorphism(AlgebraPtr g, std::vector<std::vector<Rat>> images, std::string name)
    : g_(std::move(g)), images_(std::move(images)), name_(std::move(name)) {
    if (images_.size() != g_->dim()) throw DimensionError("automorphism needs one image per basis element");
    RatMatrix m(g_->dim(), g_->dim());
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (images_[j].size() != g_->dim()) throw DimensionError("automorphism image has wrong length");
        for (std::size_t i = 0; i < g_->dim(); ++i) m(i, j) = images_[j][i];
    }
    if (exactalg::rank(m) != g_->dim()) throw PreconditionError("linear map is not invertible");
}

AlgebraAutomorphism AlgebraAutomorphism::from_matrix_map(AlgebraPtr g,
                                                         const std::function<RatMatrix(const RatMatrix&)>& f,
                                                         std::string name) {
    std::vector<std::vector<Rat>> images;
    for (const auto& e : g->basis()) images.push_back(g->coordinates(f(e.matrix)));
    return AlgebraAutomorphism(std::move(g), std::move(images), std::move(name));
}

RatMatrix AlgebraAutomorphism::apply(const RatMatrix& x) const {
    auto c = g_->coordinates(x);
    std::vector<Rat> out(g_->dim());
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[j] * images_[j][i];
    }
    return g_->matrix_of(out);
}

bool AlgebraAutomorphism::preserves_cartan() const {
    for (int j = 0; j < g_->rank(); ++j)
        for (std::size_t i = g_->rank(); i < g_->dim(); ++i)
            if (images_[j][i] != 0) return false;
    return true;
}

RatMatrix AlgebraAutomorphism::cartan_block() const {
    if (!preserves_cartan()) throw PreconditionError("automorphism does not preserve the Cartan subalgebra");
    const int n = g_->rank();
    RatMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m(i, j) = images_[j][i];
    return m;
}

bool AlgebraAutomorphism::preserves_brackets() const {
    const std::size_t d = g_->dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            RatMatrix lhs = exactalg::commutator(g_->matrix_of(images_[a]), g_->matrix_of(images_[b]));
            std::vector<Rat> rc(d);
            for (const auto& [l, c] : g_->bracket(a, b))
                for (std::size_t i = 0; i < d; ++i) rc[i] += c * images_[l][i];
            if (lhs != g_->matrix_of(rc)) return false;
        }
    return true;
}

AlgebraAutomorphism AlgebraAutomorphism::inverse() const {
    const std::size_t d = g_->dim();
    RatMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) m(i, j) = images_[j][i];
    auto inv = exactalg::solve(m, RatMatrix::identity(d));
    std::vector<std::vector<Rat>> images;
    for (std::size_t j = 0; j < d; ++j) images.push_back(inv->column(j));
    return AlgebraAutomorphism(g_, std::move(images), name_ + "^-1");
}

AlgebraAutomorphism AlgebraAutomorphism::then(const AlgebraAutomorphism& next) const {
    const std::size_t d = g_->dim();
    std::vector<std::vector<Rat>> images;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rat> out(d);
        for (std::size_t k = 0; k < d; ++k) {
            if (images_[j][k] == 0) continue;
            for (std::size_t i = 0; i < d; ++i) out[i] += images_[j][k] * next.images_[k][i];
        }
        images.push_back(std::move(out));
    }
    return AlgebraAutomorphism(g_, std::move(images), next.name_ + "*" + name_);
}

AlgebraAutomorphism make_tau(const AlgebraPtr& g) {
    return AlgebraAutomorphism::from_matrix_map(g, [](const RatMatrix& x) { return x.transpose() * Rat(-1); }, "tau");
}

AlgebraAutomorphism make_diag(const AlgebraPtr& g, const std::vector<Rat>& a) {
    std::vector<Rat> d;
    if (g->family() == Family::A) {
        if (a.size() != static_cast<std::size_t>(g->matrix_size())) throw DimensionError("diagonal twist needs n+1 scalars");
        d = a;
    } else {
        if (a.size() != static_cast<std::size_t>(g->rank())) throw DimensionError("diagonal twist needs n scalars");
        d = a;
        for (const auto& x : a) d.push_back(1 / x);
    }
    for (const auto& x : d)
        if (x == 0) throw PreconditionError("diagonal twist needs non-zero scalars");
    std::string name = "diag(" + exactalg::rat_list_to_string(a) + ")";
    return AlgebraAutomorphism::from_matrix_map(
        g,
        [d](const RatMatrix& x) {
            RatMatrix y(x.rows(), x.cols());
            for (std::size_t i = 0; i < x.rows(); ++i)
                for (std::size_t j = 0; j < x.cols(); ++j) y(i, j) = d[i] * x(i, j) / d[j];
            return y;
        },
        name);
}

RatMatrix theta_matrix(int n, const std::vector<Rat>& b, const RatMatrix& y) {
    RatMatrix x(n + 1, n + 1);
    for (int j = 0; j < n; ++j) x(n, j) = b[j];
    RatMatrix I = RatMatrix::identity(n + 1);
    return (I - x) * y * (I + x);
}

AlgebraAutomorphism make_theta(const AlgebraPtr& g, const std::vector<Rat>& b) {
    if (g->family() != Family::A) throw PreconditionError("theta_b is defined for type A only");
    if (b.size() != static_cast<std::size_t>(g->rank())) throw DimensionError("b must have n entries");
    int n = g->rank();
    return AlgebraAutomorphism::from_matrix_map(
        g, [n, b](const RatMatrix& y) { return theta_matrix(n, b, y); },
        "theta(" + exactalg::rat_list_to_string(b) + ")");
}

ParabolicComplement::ParabolicComplement(AlgebraPtr g, std::vector<Rat> b) : g_(std::move(g)), b_(std::move(b)) {
    if (g_->family() != Family::A) throw PreconditionError("parabolic complement is defined for type A only");
    const int n = g_->rank();
    const int N = n + 1;
    if (b_.size() != static_cast<std::size_t>(n)) throw DimensionError("b must have n entries");
    for (const auto& x : b_)
        if (x == 0) throw PreconditionError("b must have non-zero entries");
    std::vector<RatMatrix> p;
    for (int k = 0; k < n; ++k) p.push_back(g_->basis(k).matrix);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                RatMatrix m(N, N);
                m(i, j) = 1;
                p.push_back(m);
            }
    for (int i = 0; i < n; ++i) {
        RatMatrix m(N, N);
        m(i, n) = 1;
        p.push_back(m);
    }
    for (const auto& m : p) q_basis_.push_back(theta_matrix(n, b_, m));

    const std::size_t total = n + q_basis_.size();
    const std::size_t NN = static_cast<std::size_t>(N) * N;
    RatMatrix B(NN, total);
    auto put = [&](std::size_t col, const RatMatrix& m) {
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) B(r * N + c, col) = m(r, c);
    };
    for (int k = 0; k < n; ++k) put(k, g_->basis(k).matrix);
    for (std::size_t j = 0; j < q_basis_.size(); ++j) put(n + j, q_basis_[j]);
    RatMatrix bt = B.transpose();
    auto inv = exactalg::solve(bt * B, RatMatrix::identity(total));
    if (!inv) throw Error("h + q_b is not a direct sum");
    solver_ = *inv * bt;
}

ParabolicComplement::Split ParabolicComplement::decompose(const RatMatrix& x) const {
    const int n = g_->rank();
    const int N = n + 1;
    std::vector<Rat> c(solver_.rows());
    for (std::size_t j = 0; j < c.size(); ++j)
        for (int r = 0; r < N; ++r)
            for (int s = 0; s < N; ++s)
                if (x(r, s) != 0) c[j] += solver_(j, r * N + s) * x(r, s);
    Split out;
    out.cartan.assign(c.begin(), c.begin() + n);
    out.q = RatMatrix(N, N);
    for (std::size_t j = 0; j < q_basis_.size(); ++j)
        if (c[n + j] != 0) out.q += q_basis_[j] * c[n + j];
    RatMatrix h(N, N);
    for (int k = 0; k < n; ++k) h += g_->basis(k).matrix * out.cartan[k];
    if (h + out.q != x) throw PreconditionError("element is not in sl(n+1)");
    return out;
}

bool ParabolicComplement::contains(const RatMatrix& x) const {
    auto s = decompose(x);
    for (const auto& v : s.cartan)
        if (v != 0) return false;
    return true;
}

RatMatrix ParabolicComplement::levi_image(const RatMatrix& q) const {
    const int n = g_->rank();
    std::vector<Rat> minus_b(b_);
    for (auto& x : minus_b) x = -x;
    RatMatrix z = theta_matrix(n, minus_b, q);
    for (int j = 0; j < n; ++j)
        if (z(n, j) != 0) throw PreconditionError("element is not in q_b");
    RatMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = z(i, j);
    for (int i = 0; i < n; ++i) out(i, i) -= z(n, n);
    return out;
}

}  // namespace hfinite::liealg
