#pragma once

#include "hfinite/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hfinite::exactalg {

inline constexpr std::size_t kMaxVars = 8;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> exp{};

    int degree() const;
    bool operator==(const Monomial& other) const = default;
};

// Orders monomials by descending total degree, then descending lexicographic
// exponent; iteration over a Poly therefore lists the leading term first.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Offsets s with sigma_s(h_i) = h_i - s_i. Composition adds offsets.
struct ShiftMap {
    std::vector<Rat> offset;

    ShiftMap() = default;
    explicit ShiftMap(std::vector<Rat> s) : offset(std::move(s)) {}
    static ShiftMap zero(std::size_t n) { return ShiftMap(std::vector<Rat>(n)); }

    ShiftMap operator+(const ShiftMap& other) const;
    ShiftMap operator-() const;
    bool is_zero() const;
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexDescending>;

    Poly() = default;
    explicit Poly(std::size_t nvars);
    Poly(std::size_t nvars, const Rat& c);

    static Poly variable(std::size_t nvars, std::size_t i);
    static Poly monomial(std::size_t nvars, const Monomial& m, const Rat& c);
    static Poly parse(std::string_view text, std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    Rat coefficient(const Monomial& m) const;
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t var) const;

    void add_term(const Monomial& m, const Rat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& c);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rat eval(const std::vector<Rat>& point) const;
    Poly apply_shift(const ShiftMap& s) const;
    // Substitute variable i by images[i]; all images share one variable count.
    Poly compose(const std::vector<Poly>& images) const;
    Poly partial(std::size_t var) const;

    // Canonical text: descending graded-lex terms, coefficients as num/den.
    std::string to_string(std::string_view var_prefix = "h") const;

private:
    std::size_t nvars_ = 0;
    TermMap terms_;

    void check_same(const Poly& o) const;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

Poly pow(const Poly& p, unsigned e);

}  // namespace hfinite::exactalg
