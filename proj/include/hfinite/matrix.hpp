#pragma once

#include "hfinite/poly.hpp"

#include <optional>
#include <vector>

namespace hfinite::exactalg {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& c) const;
    RatMatrix& operator+=(const RatMatrix& o);
    bool operator==(const RatMatrix& o) const = default;

    RatMatrix transpose() const;
    Rat trace() const;
    bool is_zero() const;
    bool is_scalar(Rat* value = nullptr) const;

    std::vector<Rat> column(std::size_t j) const;
    RatMatrix columns(const std::vector<std::size_t>& idx) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

// Row-reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);
std::size_t rank(RatMatrix m);
// Basis of the null space, one vector per free column, from the reduced form.
std::vector<std::vector<Rat>> rat_kernel(const RatMatrix& m);
// Fraction-free (Bareiss) determinant after clearing denominators row by row.
Rat determinant(const RatMatrix& m);
// Some X with A X = B, or nullopt when the system is inconsistent.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);
// Solve when the solution must be unique; throws otherwise.
std::optional<std::vector<Rat>> solve_unique(const RatMatrix& a, const std::vector<Rat>& b);
RatMatrix matrix_power(const RatMatrix& m, unsigned e);

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    static PolyMatrix identity(std::size_t n, std::size_t nvars);
    static PolyMatrix scalar(std::size_t n, const Poly& p);
    static PolyMatrix from_rat(const RatMatrix& m, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }
    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator*(const Rat& c) const;
    PolyMatrix& operator+=(const PolyMatrix& o);
    bool operator==(const PolyMatrix& o) const;

    PolyMatrix apply_shift(const ShiftMap& s) const;
    PolyMatrix compose(const std::vector<Poly>& images) const;
    PolyMatrix transpose() const;
    RatMatrix eval(const std::vector<Rat>& point) const;
    bool is_zero() const;
    int max_degree() const;

private:
    std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<Poly> data_;
};

struct Sample {
    std::vector<Rat> point;
    Rat value;
};

// Monomials of total degree <= d in n variables, leading term first.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int degree);

// Exact interpolation by a polynomial of total degree <= degree_bound.
// Returns nullopt (NoFit) when the samples are inconsistent and throws
// UnderdeterminedError when they do not determine the polynomial.
std::optional<Poly> fit_polynomial(const std::vector<Sample>& samples, std::size_t nvars, int degree_bound);

}  // namespace hfinite::exactalg
