#include "hfinite/matrix.hpp"

#include "hfinite/errors.hpp"

#include <functional>

namespace hfinite::exactalg {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    RatMatrix r(*this);
    r += o;
    return r;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    RatMatrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) r(i, j) += a * o(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
    RatMatrix r(*this);
    for (auto& x : r.data_) x *= c;
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Rat RatMatrix::trace() const {
    if (rows_ != cols_) throw DimensionError("trace of a non-square matrix");
    Rat t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool RatMatrix::is_scalar(Rat* value) const {
    if (rows_ != cols_) return false;
    Rat v = rows_ ? (*this)(0, 0) : Rat(0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? v : Rat(0))) return false;
    if (value) *value = v;
    return true;
}

std::vector<Rat> RatMatrix::column(std::size_t j) const {
    std::vector<Rat> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RatMatrix RatMatrix::columns(const std::vector<std::size_t>& idx) const {
    RatMatrix r(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rat inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(row, j) != 0) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rat>> rat_kernel(const RatMatrix& m) {
    RatMatrix r(m);
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rat scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int l(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= Rat(l);
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = m(i, j) * Rat(l);
            a[i][j] = v.get_num();
        }
    }
    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rat(0);
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    Rat det(a[n - 1][n - 1]);
    if (sign < 0) det = -det;
    return det / scale;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve: row counts differ");
    RatMatrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    auto pivots = rref(aug);
    RatMatrix x(a.cols(), b.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[k], j) = aug(k, a.cols() + j);
    }
    return x;
}

std::optional<std::vector<Rat>> solve_unique(const RatMatrix& a, const std::vector<Rat>& b) {
    RatMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    if (rank(a) < a.cols()) throw UnderdeterminedError("linear system does not determine the unknowns");
    auto x = solve(a, rhs);
    if (!x) return std::nullopt;
    return x->column(0);
}

RatMatrix matrix_power(const RatMatrix& m, unsigned e) {
    RatMatrix r = RatMatrix::identity(m.rows());
    for (unsigned i = 0; i < e; ++i) r = r * m;
    return r;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
    return scalar(n, Poly(nvars, Rat(1)));
}

PolyMatrix PolyMatrix::scalar(std::size_t n, const Poly& p) {
    PolyMatrix m(n, n, p.nvars());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = p;
    return m;
}

PolyMatrix PolyMatrix::from_rat(const RatMatrix& r, std::size_t nvars) {
    PolyMatrix m(r.rows(), r.cols(), nvars);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) m(i, j) = Poly(nvars, r(i, j));
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    PolyMatrix r(*this);
    r += o;
    return r;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("poly matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("poly matrix difference shape mismatch");
    PolyMatrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("poly matrix product shape mismatch");
    PolyMatrix r(rows_, o.cols_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Poly& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::operator*(const Rat& c) const {
    PolyMatrix r(*this);
    for (auto& p : r.data_) p *= c;
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMatrix PolyMatrix::apply_shift(const ShiftMap& s) const {
    PolyMatrix r(*this);
    if (s.is_zero()) return r;
    for (auto& p : r.data_) p = p.apply_shift(s);
    return r;
}

PolyMatrix PolyMatrix::compose(const std::vector<Poly>& images) const {
    std::size_t target = images.empty() ? 0 : images.front().nvars();
    PolyMatrix r(rows_, cols_, target);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].compose(images);
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(cols_, rows_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

RatMatrix PolyMatrix::eval(const std::vector<Rat>& point) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).eval(point);
    return r;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

int PolyMatrix::max_degree() const {
    int d = -1;
    for (const auto& p : data_) d = std::max(d, p.total_degree());
    return d;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == nvars) {
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.exp[i] = static_cast<std::uint16_t>(e);
            rec(i + 1, left - e);
        }
        m.exp[i] = 0;
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), GrlexDescending{});
    return out;
}

std::optional<Poly> fit_polynomial(const std::vector<Sample>& samples, std::size_t nvars, int degree_bound) {
    auto monos = monomials_up_to(nvars, degree_bound);
    if (samples.size() < monos.size())
        throw UnderdeterminedError("fewer samples than monomials of the requested degree");
    RatMatrix a(samples.size(), monos.size());
    std::vector<Rat> b(samples.size());
    for (std::size_t r = 0; r < samples.size(); ++r) {
        if (samples[r].point.size() != nvars) throw DimensionError("sample point has wrong length");
        for (std::size_t c = 0; c < monos.size(); ++c)
            a(r, c) = Poly::monomial(nvars, monos[c], Rat(1)).eval(samples[r].point);
        b[r] = samples[r].value;
    }
    auto x = solve_unique(a, b);
    if (!x) return std::nullopt;
    Poly p(nvars);
    for (std::size_t c = 0; c < monos.size(); ++c) p.add_term(monos[c], (*x)[c]);
    return p;
}

}  // namespace hfinite::exactalg
