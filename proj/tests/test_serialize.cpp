#include "doctest.h"

#include "hfinite/constructors.hpp"
#include "hfinite/errors.hpp"
#include "hfinite/serialize.hpp"
#include "hfinite/weyl_carrier.hpp"

using namespace hfinite;
using io::json;

namespace {

bool same_actions(const hmodules::FreeHModule& a, const hmodules::FreeHModule& b) {
    if (a.rank() != b.rank() || a.algebra().dim() != b.algebra().dim()) return false;
    for (liealg::Label x = 0; x < a.algebra().dim(); ++x)
        if (!(a.action(x) == b.action(x))) return false;
    return true;
}

json spec_exp() {
    return json::parse(R"({"algebra": {"family": "A", "n": 2}, "constructor": "exponential",
                           "params": {"b": ["2", "-1/3"], "lambda": [1, 0], "S": [2]}})");
}

}  // namespace

TEST_CASE("rationals in both accepted encodings") {
    CHECK(io::json_rat(json(3)) == 3);
    CHECK(io::json_rat(json("-5/10")) == exactalg::make_rat(-1, 2));
    CHECK(io::rat_json(exactalg::make_rat(4, 6)) == json("2/3"));
    CHECK_THROWS_AS(io::json_rat(json(0.5)), Error);
}

TEST_CASE("dump and load round trip") {
    std::vector<json> specs = {
        json::parse(R"({"algebra": {"family": "C", "n": 2}, "constructor": "m0"})"),
        json::parse(R"({"algebra": {"family": "C", "n": 3}, "constructor": "m0"})"),
        spec_exp(),
        json::parse(R"({"algebra": {"family": "A", "n": 2}, "constructor": "verma",
                        "params": {"b": [1, "1/2"], "eps": [1, 0]}})"),
        json::parse(R"({"algebra": {"family": "C", "n": 2}, "constructor": "dual",
                        "params": {"base": {"constructor": "twist",
                                            "params": {"diag": ["2", "-3"], "base": {"constructor": "m0"}}}}})"),
        json::parse(R"({"algebra": {"family": "C", "n": 2}, "constructor": "tensor",
                        "params": {"V": [1, 0], "base": {"constructor": "m0"}}})"),
    };
    for (const auto& spec : specs) {
        auto M = io::build_module(spec);
        CHECK(hmodules::validate_bracket(M).pass());
        json dump = io::dump_module(M);
        auto back = io::load_module(json::parse(dump.dump()));
        CHECK(same_actions(M, back));
        CHECK(back.metadata() == M.metadata());
        CHECK(io::dump_module(back) == dump);
    }
}

TEST_CASE("a corrupted dump loads but fails the bracket check") {
    auto g = liealg::LieAlgebra::make(liealg::Family::C, 2);
    json dump = io::dump_module(hmodules::m0(g));
    CHECK(hmodules::validate_bracket(io::load_module(dump)).pass());
    dump["actions"][4][0][0] = "1/1*h1^2 + -2/1*h1 + 1/4";
    auto bad = io::load_module(dump);
    auto report = hmodules::validate_bracket(bad);
    CHECK_FALSE(report.pass());
    json r = io::bracket_report_json(bad, report);
    CHECK_FALSE(r["pass"].get<bool>());
}

TEST_CASE("structural problems in dumps are rejected") {
    auto g = liealg::LieAlgebra::make(liealg::Family::C, 2);
    const json good = io::dump_module(hmodules::m0(g));
    json d = good;
    d["format"] = "other";
    CHECK_THROWS_AS(io::load_module(d), Error);
    d = good;
    d["labels"][0] = "h1";
    CHECK_THROWS_AS(io::load_module(d), Error);
    d = good;
    d["rank"] = 2;
    CHECK_THROWS_AS(io::load_module(d), Error);
    d = good;
    d["actions"].erase(0);
    CHECK_THROWS_AS(io::load_module(d), Error);
    d = good;
    d["actions"][0][0][0] = "1/1*h1 +";
    CHECK_THROWS(io::load_module(d));
}

TEST_CASE("module specs are validated") {
    json s = spec_exp();
    s["params"]["b"] = json::array({0, 1});
    CHECK_THROWS(io::build_module(s));
    s = spec_exp();
    s["params"]["S"] = json::array({3});
    CHECK_THROWS_AS(io::build_module(s), Error);
    s = spec_exp();
    s["params"]["lambda"] = json::array({1});
    CHECK_THROWS_AS(io::build_module(s), Error);
    s = spec_exp();
    s["constructor"] = "nothing";
    CHECK_THROWS_AS(io::build_module(s), Error);
    CHECK_THROWS_AS(io::build_module(json::parse(R"({"constructor": "m0"})")), Error);
    CHECK_THROWS_AS(io::build_module(json::parse(R"({"algebra": {"family": "C", "n": 2}, "constructor": "twist",
                                                     "params": {"base": {"constructor": "m0"}}})")),
                    Error);
}

TEST_CASE("built modules match direct construction") {
    auto M = io::build_module(spec_exp());
    auto g = liealg::LieAlgebra::make(liealg::Family::A, 2);
    auto direct = hmodules::exponential_module(g, {2, exactalg::make_rat(-1, 3)}, liealg::Weight({1, 0}), {1});
    CHECK(same_actions(M, direct));
    CHECK(M.metadata().at("constructor") == "exponential");
}
