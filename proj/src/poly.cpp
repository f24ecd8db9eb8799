#include "hfinite/poly.hpp"

#include "hfinite/errors.hpp"

#include <cctype>

namespace hfinite::exactalg {

int Monomial::degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
    return false;
}

ShiftMap ShiftMap::operator+(const ShiftMap& other) const {
    if (offset.size() != other.offset.size()) throw DimensionError("shift length mismatch");
    ShiftMap r(offset);
    for (std::size_t i = 0; i < offset.size(); ++i) r.offset[i] += other.offset[i];
    return r;
}

ShiftMap ShiftMap::operator-() const {
    ShiftMap r(offset);
    for (auto& x : r.offset) x = -x;
    return r;
}

bool ShiftMap::is_zero() const {
    for (const auto& x : offset)
        if (x != 0) return false;
    return true;
}

Poly::Poly(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxVars) throw DimensionError("too many polynomial variables");
}

Poly::Poly(std::size_t nvars, const Rat& c) : Poly(nvars) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DimensionError("variable index out of range");
    Monomial m;
    m.exp[i] = 1;
    return monomial(nvars, m, Rat(1));
}

Poly Poly::monomial(std::size_t nvars, const Monomial& m, const Rat& c) {
    Poly p(nvars);
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rat Poly::constant_term() const { return coefficient(Monomial{}); }

Rat Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::total_degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int Poly::degree_in(std::size_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m.exp[var]);
    return d;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_same(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomial variable counts differ");
}

Poly& Poly::operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*this);
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*this);
    r -= o;
    return r;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(*this);
    r *= c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    Poly r(nvars_);
    if (terms_.empty() || o.terms_.empty()) return r;
    Rat prod;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < nvars_; ++i) m.exp[i] = ma.exp[i] + mb.exp[i];
            prod = ca * cb;
            r.add_term(m, prod);
        }
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (point.size() != nvars_) throw DimensionError("evaluation point has wrong length");
    std::vector<std::vector<Rat>> powers(nvars_);
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            unsigned e = m.exp[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Rat(1));
            while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
            t *= pw[e];
        }
        total += t;
    }
    return total;
}

namespace {

// Coefficients of (h - s)^e as a list indexed by the power of h.
std::vector<Rat> shifted_power(const Rat& s, unsigned e) {
    std::vector<Rat> row{Rat(1)};
    for (unsigned k = 0; k < e; ++k) {
        std::vector<Rat> next(row.size() + 1);
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j + 1] += row[j];
            next[j] -= s * row[j];
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

Poly Poly::apply_shift(const ShiftMap& s) const {
    if (s.offset.size() != nvars_) throw DimensionError("shift length does not match variables");
    if (s.is_zero()) return *this;
    std::vector<std::map<unsigned, std::vector<Rat>>> cache(nvars_);
    auto expansion = [&](std::size_t i, unsigned e) -> const std::vector<Rat>& {
        auto it = cache[i].find(e);
        if (it == cache[i].end()) it = cache[i].emplace(e, shifted_power(s.offset[i], e)).first;
        return it->second;
    };
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        std::vector<std::pair<Monomial, Rat>> partial{{Monomial{}, c}};
        for (std::size_t i = 0; i < nvars_; ++i) {
            unsigned e = m.exp[i];
            if (e == 0) continue;
            const auto& coeffs = expansion(i, e);
            std::vector<std::pair<Monomial, Rat>> next;
            next.reserve(partial.size() * coeffs.size());
            for (const auto& [pm, pc] : partial) {
                for (std::size_t j = 0; j < coeffs.size(); ++j) {
                    if (coeffs[j] == 0) continue;
                    Monomial nm = pm;
                    nm.exp[i] = static_cast<std::uint16_t>(j);
                    next.emplace_back(nm, pc * coeffs[j]);
                }
            }
            partial = std::move(next);
        }
        for (const auto& [pm, pc] : partial) r.add_term(pm, pc);
    }
    return r;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
    if (images.size() != nvars_) throw DimensionError("compose needs one image per variable");
    std::size_t target = images.empty() ? 0 : images.front().nvars();
    for (const auto& p : images)
        if (p.nvars() != target) throw DimensionError("compose images disagree on variables");
    std::vector<std::vector<Poly>> powers(nvars_);
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Poly t(target, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            unsigned e = m.exp[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Poly(target, Rat(1)));
            while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
            t = t * pw[e];
        }
        r += t;
    }
    return r;
}

Poly Poly::partial(std::size_t var) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exp[var] == 0) continue;
        Monomial nm = m;
        nm.exp[var] -= 1;
        r.add_term(nm, c * m.exp[var]);
    }
    return r;
}

std::string Poly::to_string(std::string_view var_prefix) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += rat_to_string(c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m.exp[i] == 0) continue;
            out += "*";
            out += var_prefix;
            out += std::to_string(i + 1);
            if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
        }
    }
    return out;
}

namespace {

Monomial parse_factor_into(Monomial m, std::string_view factor, std::size_t nvars, Rat& coeff,
                           bool& have_coeff) {
    if (factor.empty()) throw PreconditionError("empty factor in polynomial text");
    if (std::isalpha(static_cast<unsigned char>(factor.front()))) {
        std::size_t pos = 0;
        while (pos < factor.size() && std::isalpha(static_cast<unsigned char>(factor[pos]))) ++pos;
        auto caret = factor.find('^');
        std::string idx(factor.substr(pos, caret == std::string_view::npos ? std::string_view::npos : caret - pos));
        unsigned e = 1;
        if (caret != std::string_view::npos) e = static_cast<unsigned>(std::stoul(std::string(factor.substr(caret + 1))));
        if (idx.empty()) throw PreconditionError("variable without index in polynomial text");
        std::size_t i = std::stoul(idx);
        if (i == 0 || i > nvars) throw PreconditionError("variable index out of range in polynomial text");
        m.exp[i - 1] = static_cast<std::uint16_t>(m.exp[i - 1] + e);
        return m;
    }
    if (have_coeff) throw PreconditionError("two coefficients in one polynomial term");
    coeff = parse_rat(factor);
    have_coeff = true;
    return m;
}

}  // namespace

Poly Poly::parse(std::string_view text, std::size_t nvars) {
    Poly p(nvars);
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw PreconditionError("empty polynomial text");
    if (s == "0") return p;
    // Split into terms at '+' signs; a '-' belongs to the following coefficient.
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        char prev = i > 0 ? s[i - 1] : '\0';
        bool sep = (c == '+' || c == '-') && i > 0 && prev != '^' && prev != '*' && prev != '/' && prev != '+';
        if (sep) {
            terms.push_back(cur);
            cur.clear();
            if (c == '-') cur += '-';
        } else {
            cur += c;
        }
    }
    terms.push_back(cur);
    for (std::string t : terms) {
        if (t.empty() || t == "-") throw PreconditionError("malformed polynomial text");
        bool neg = false;
        if (t.front() == '-' && t.size() > 1 && std::isalpha(static_cast<unsigned char>(t[1]))) {
            neg = true;
            t.erase(0, 1);
        }
        Rat coeff(1);
        bool have = false;
        Monomial m;
        std::string_view rest(t);
        while (!rest.empty()) {
            auto star = rest.find('*');
            m = parse_factor_into(m, rest.substr(0, star), nvars, coeff, have);
            if (star == std::string_view::npos) break;
            rest.remove_prefix(star + 1);
        }
        p.add_term(m, neg ? Rat(-coeff) : coeff);
    }
    return p;
}

Poly pow(const Poly& p, unsigned e) {
    Poly r(p.nvars(), Rat(1));
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

}  // namespace hfinite::exactalg
