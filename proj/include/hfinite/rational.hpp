#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hfinite::exactalg {

// Exact rational arithmetic is delegated to GMP; values are kept canonical.
using Rat = mpq_class;
using Int = mpz_class;

// Canonical num/den; mpq_class(num, den) alone does not reduce.
Rat make_rat(long num, long den = 1);
Rat parse_rat(std::string_view text);
std::string rat_to_string(const Rat& q);          // "num/den" always
std::string rat_to_short_string(const Rat& q);    // "num" when den == 1

bool is_integer(const Rat& q);
Rat floor_rat(const Rat& q);

std::vector<Rat> parse_rat_list(std::string_view text);  // comma separated
std::string rat_list_to_string(const std::vector<Rat>& v);

}  // namespace hfinite::exactalg
