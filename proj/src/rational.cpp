#include "hfinite/rational.hpp"

#include "hfinite/errors.hpp"

#include <cctype>

namespace hfinite::exactalg {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat make_rat(long num, long den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string num(s.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    if (!valid_integer_text(num) || !valid_integer_text(den))
        throw PreconditionError("malformed rational: '" + std::string(text) + "'");
    Int n(num), d(den);
    if (d == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_to_short_string(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : rat_to_string(q);
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Rat floor_rat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rat(f);
}

std::vector<Rat> parse_rat_list(std::string_view text) {
    std::vector<Rat> out;
    std::string_view s = trim(text);
    if (s.empty()) return out;
    while (true) {
        auto comma = s.find(',');
        out.push_back(parse_rat(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::string rat_list_to_string(const std::vector<Rat>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_to_short_string(v[i]);
    }
    return out;
}

}  // namespace hfinite::exactalg
