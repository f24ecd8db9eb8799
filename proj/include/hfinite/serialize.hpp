#pragma once

#include "hfinite/coherent.hpp"
#include "hfinite/hmodule.hpp"
#include "hfinite/weight_window.hpp"

#include "json.hpp"

namespace hfinite::io {

using json = nlohmann::json;

// Rationals are written as "num/den" strings; integers and such strings are
// both accepted on input.
json rat_json(const exactalg::Rat& r);
exactalg::Rat json_rat(const json& j);
json rats_json(const std::vector<exactalg::Rat>& v);
std::vector<exactalg::Rat> json_rats(const json& j);

// Builds a module from a spec of the form
//   {"algebra": {"family": "A", "n": 2}, "constructor": "exponential",
//    "params": {"b": ["2", "-1/3"], "lambda": ["1", "0"], "S": [2]}}
// Constructors: m0, exponential (b, lambda, S with 1-based indices), verma
// (b and either eps or lambda), twist (base plus tau or diag),
// tensor (base plus V as a dominant weight), dual (base). Nested specs under
// "base" may omit the algebra.
hmodules::FreeHModule build_module(const json& spec);

json dump_module(const hmodules::FreeHModule& M);
// Throws Error on any structural problem in the dump.
hmodules::FreeHModule load_module(const json& dump);

json bracket_report_json(const hmodules::FreeHModule& M, const hmodules::BracketReport& r);
json fit_json(const weightcat::WeightWindow& W, const weightcat::PolynomialFit& f);
json certificate_json(const weightcat::WeightWindow& W, const coherent::AlmostCoherentCertificate& c);
json verdict_json(const weightcat::EquivalenceVerdict& v);

// Text and JSON files.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hfinite::io
