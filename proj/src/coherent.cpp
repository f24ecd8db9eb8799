#include "hfinite/coherent.hpp"

#include "hfinite/errors.hpp"
#include "hfinite/parallel.hpp"

#include <algorithm>
#include <set>

namespace hfinite::coherent {

using exactalg::is_integer;
using liealg::Family;

AlmostCoherentCertificate certify_almost_coherent(const WeightWindow& W, const std::vector<Probe>& probes) {
    AlmostCoherentCertificate cert;
    cert.base = W.base();
    cert.radius = W.radius();
    cert.probes = probes;
    auto valid = W.valid_slots();
    cert.window_slots = valid.size();
    cert.degree = W.max_dim();
    std::set<std::size_t> exceptional;
    for (auto s : valid)
        if (W.slot(s).dim != cert.degree) exceptional.insert(s);
    bool fits_ok = !valid.empty();
    for (const auto& p : probes) {
        try {
            cert.fits.push_back(weightcat::trace_polynomial(W, p.word));
            cert.fit_errors.emplace_back();
            const auto& f = cert.fits.back();
            exceptional.insert(f.residual_slots.begin(), f.residual_slots.end());
            fits_ok = fits_ok && f.exact();
        } catch (const Error& e) {
            cert.fits.emplace_back();
            cert.fit_errors.emplace_back(e.what());
            fits_ok = false;
        }
    }
    cert.exceptional_slots.assign(exceptional.begin(), exceptional.end());
    cert.pass = fits_ok && exceptional.empty();
    return cert;
}

std::vector<int> w_word(int n, int i) {
    if (i < 0 || i > n) throw PreconditionError("w_i needs 0 <= i <= n");
    std::vector<int> word;
    for (int j = n; j >= n - i + 1; --j) word.push_back(j - 1);
    return word;
}

namespace {

void require_type_a(const LieAlgebra& g) {
    if (g.family() != Family::A) throw PreconditionError("only defined for sl(n+1)");
}

liealg::LeviSpec first_simple_roots(int n) {
    liealg::LeviSpec levi;
    for (int i = 0; i + 1 < n; ++i) levi.simple.push_back(i);
    return levi;
}

}  // namespace

Int deg_k(const LieAlgebra& g, const Weight& lambda, int k) {
    require_type_a(g);
    const int n = g.rank();
    if (k < 1 || k > n) throw PreconditionError("deg_k needs 1 <= k <= n");
    if (!liealg::is_dominant_integral(g, lambda)) throw PreconditionError("deg_k needs a dominant integral weight");
    auto W = liealg::weyl_group(LieAlgebra::make(g.family(), n));
    const auto levi = first_simple_roots(n);
    Int total = 0;
    for (int i = 0; i <= n - k; ++i) {
        Int d = liealg::weyl_dim(g, levi, W->dot(w_word(n, k + i), lambda));
        total += (i % 2 == 0) ? d : Int(-d);
    }
    return total;
}

std::vector<DegIdentityRow> deg_identity_check(const LieAlgebra& g, const Weight& lambda) {
    require_type_a(g);
    const int n = g.rank();
    auto W = liealg::weyl_group(LieAlgebra::make(g.family(), n));
    std::vector<DegIdentityRow> rows;
    for (int k = 1; k <= n; ++k) {
        DegIdentityRow row{k, deg_k(g, lambda, k) + (k < n ? deg_k(g, lambda, k + 1) : Int(0)), 0};
        row.rhs = liealg::gl_weyl_dim(g.epsilon_coords(W->dot(w_word(n, k), lambda)));
        rows.push_back(row);
    }
    return rows;
}

std::size_t deg_evaluation_rank(const LieAlgebra& g, const std::vector<Weight>& samples) {
    const int n = g.rank();
    exactalg::RatMatrix m(n, samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j)
        for (int k = 1; k <= n; ++k) m(k - 1, j) = Rat(deg_k(g, samples[j], k));
    return exactalg::rank(m);
}

bool deg_linear_independence(const LieAlgebra& g, const std::vector<Weight>& samples) {
    if (samples.size() < static_cast<std::size_t>(g.rank())) throw PreconditionError("need at least n sample weights");
    return deg_evaluation_rank(g, samples) == static_cast<std::size_t>(g.rank());
}

std::string class_name(CharClass c) {
    switch (c) {
        case CharClass::IntegralRegular: return "integral-regular";
        case CharClass::IntegralSingular: return "integral-singular";
        case CharClass::NonIntegral: return "non-integral";
    }
    return "?";
}

namespace {

bool nonneg_int(const Rat& r) { return is_integer(r) && r >= 0; }

bool satisfies_type_c(const std::vector<Rat>& h) {
    const std::size_t n = h.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!nonneg_int(h[i])) return false;
    const Rat& last = h[n - 1];
    if (!is_integer(last - Rat(1, 2)) || last < Rat(-1, 2)) return false;
    return nonneg_int(h[n - 2] + 2 * last + 2);
}

}  // namespace

CentralCharClass wt_normal_form(const LieAlgebra& g, const Weight& lambda) {
    auto W = liealg::weyl_group(LieAlgebra::make(g.family(), g.rank()));
    CentralCharClass out;
    out.input = lambda;
    const auto orbit = W->dot_orbit(lambda);
    std::vector<Weight> found;
    std::optional<int> index;

    if (g.family() == Family::C) {
        if (g.rank() < 2) throw PreconditionError("type C normal forms need n >= 2");
        out.kind = CharClass::NonIntegral;
        for (const auto& mu : orbit)
            if (satisfies_type_c(g.dynkin_labels(mu))) found.push_back(mu);
    } else if (liealg::is_integral(g, lambda)) {
        out.kind = liealg::is_dot_regular(g, lambda) ? CharClass::IntegralRegular : CharClass::IntegralSingular;
        for (const auto& mu : orbit) {
            if (out.kind == CharClass::IntegralRegular) {
                if (liealg::is_dominant_integral(g, mu)) found.push_back(mu);
                continue;
            }
            auto labels = g.dynkin_labels(mu + g.rho());
            int zeros = 0, zero_at = -1;
            bool positive = true;
            for (int i = 0; i < g.rank(); ++i) {
                if (labels[i] == 0) {
                    ++zeros;
                    zero_at = i;
                } else if (!(labels[i] > 0)) {
                    positive = false;
                }
            }
            if (zeros == 1 && positive) {
                found.push_back(mu);
                index = zero_at + 1;
            }
        }
    } else {
        out.kind = CharClass::NonIntegral;
        for (const auto& mu : orbit) {
            auto labels = g.dynkin_labels(mu);
            bool ok = !is_integer(labels[0]);
            for (int i = 1; i < g.rank() && ok; ++i) ok = nonneg_int(labels[i]);
            if (ok) found.push_back(mu);
        }
    }
    if (found.empty()) throw NotInScope("central character of " + lambda.to_string() + " is not of admissible infinite type");
    if (found.size() == 2 && g.family() == Family::A && g.rank() == 1 && out.kind == CharClass::NonIntegral) {
        // a non-integral sl(2) orbit has two members with h_1 outside Z
        if (g.dynkin_labels(found[0] + g.rho())[0] < 0) std::swap(found[0], found[1]);
        found.resize(1);
    }
    if (found.size() > 1) throw Error("central character of " + lambda.to_string() + " has two normal-form candidates");
    out.normal_form = found.front();
    out.singular_index = index;
    return out;
}

std::vector<std::vector<int>> admissible_word_list(const LieAlgebra& g, const CentralCharClass& c, int family) {
    require_type_a(g);
    const int n = g.rank();
    std::vector<std::vector<int>> out;
    // 1-based s_a s_{a+-1} ... s_b, stored 0-based
    auto run = [](int from, int to) {
        std::vector<int> w;
        int step = from <= to ? 1 : -1;
        for (int j = from;; j += step) {
            w.push_back(j - 1);
            if (j == to) break;
        }
        return w;
    };
    switch (c.kind) {
        case CharClass::IntegralRegular: {
            const int i = family;
            if (i < 1 || i > n) throw PreconditionError("family index must lie in 1..n");
            for (int j = i; j <= n; ++j) out.push_back(run(j, i));
            for (int j = 1; j < i; ++j) out.push_back(run(j, i));
            break;
        }
        case CharClass::IntegralSingular: {
            if (!c.singular_index) throw PreconditionError("integral singular class without its index");
            const int ic = *c.singular_index;
            for (int j = 1; j < ic; ++j) out.push_back(run(j, ic - 1));
            for (int j = ic + 1; j <= n; ++j) out.push_back(run(j, ic + 1));
            break;
        }
        case CharClass::NonIntegral:
            for (int k = 1; k <= n; ++k) out.push_back(run(k, 1));
            break;
    }
    return out;
}

Poly hc_polynomial(const LieAlgebra& g, const liealg::UEAWord& z, int degree) {
    const std::size_t n = static_cast<std::size_t>(g.rank());
    std::vector<exactalg::Sample> train;
    std::vector<int> k(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == n) {
            Weight w(n);
            for (std::size_t j = 0; j < n; ++j) w[j] = Rat(k[j]);
            train.push_back({w.c, liealg::verma_hc_eigenvalue(g, z, w)});
            return;
        }
        for (int v = 0; v <= left; ++v) {
            k[i] = v;
            self(self, i + 1, left - v);
        }
        k[i] = 0;
    };
    rec(rec, 0, degree);
    auto p = exactalg::fit_polynomial(train, n, degree);
    if (!p) throw Error("Harish-Chandra eigenvalues are not polynomial of the expected degree");
    for (int t = 1; t <= 3; ++t) {
        Weight w(n);
        for (std::size_t j = 0; j < n; ++j) w[j] = exactalg::make_rat(2 * t + 3 * static_cast<long>(j) - 5, t + 2);
        if (p->eval(w.c) != liealg::verma_hc_eigenvalue(g, z, w))
            throw Error("Harish-Chandra polynomial failed its check point");
    }
    return *p;
}

std::vector<Weight> weights_with_fingerprint(const LieAlgebra& g, const std::map<int, Rat>& fingerprint, int bound,
                                             int denominator) {
    const std::size_t n = static_cast<std::size_t>(g.rank());
    std::vector<std::pair<Poly, Rat>> tests;
    for (const auto& [deg, value] : fingerprint)
        tests.emplace_back(hc_polynomial(g, liealg::gelfand_invariant(g, deg), deg), value);
    const int side = 2 * bound * denominator + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(side);
    std::vector<char> hit(total, 0);
    auto point = [&](std::size_t idx) {
        Weight w(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = exactalg::make_rat(static_cast<long>(idx % side) - bound * denominator, denominator);
            idx /= side;
        }
        return w;
    };
    parallel_for(total, [&](std::size_t idx) {
        Weight w = point(idx);
        for (const auto& [p, v] : tests)
            if (p.eval(w.c) != v) return;
        hit[idx] = 1;
    });
    std::vector<Weight> out;
    for (std::size_t idx = 0; idx < total; ++idx)
        if (hit[idx]) out.push_back(point(idx));
    return out;
}

CentralCharClass normal_form_from_fingerprint(const LieAlgebra& g, const std::map<int, Rat>& fingerprint, int bound) {
    auto candidates = weights_with_fingerprint(g, fingerprint, bound);
    if (candidates.empty()) throw NotInScope("no grid weight has this fingerprint");
    std::optional<CentralCharClass> result;
    for (const auto& w : candidates) {
        auto c = wt_normal_form(g, w);
        if (result && !(result->normal_form == c.normal_form))
            throw Error("fingerprint does not determine the central character on the search grid");
        if (!result) result = c;
    }
    return *result;
}

std::string verdict_name(DegreeOneVerdict v) {
    switch (v) {
        case DegreeOneVerdict::NotDegreeOne: return "not-degree-one";
        case DegreeOneVerdict::FirstPattern: return "a*omega1";
        case DegreeOneVerdict::SecondPattern: return "-(N+2)*omega1+(N+1)*omega2";
        case DegreeOneVerdict::Omega: return "omega+";
        case DegreeOneVerdict::NoMatch: return "no-match";
    }
    return "?";
}

Weight omega_plus(const LieAlgebra& g) {
    if (g.family() != Family::C) throw PreconditionError("omega+ is defined for sp(2n)");
    std::vector<Rat> labels(g.rank());
    labels.back() = Rat(-1, 2);
    return g.from_dynkin(labels);
}

DegreeOneResult degree_one_recognition(const LieAlgebra& g, const CentralCharClass& c, std::size_t fitted_degree) {
    DegreeOneResult out;
    if (fitted_degree != 1) {
        out.verdict = DegreeOneVerdict::NotDegreeOne;
        return out;
    }
    auto W = liealg::weyl_group(LieAlgebra::make(g.family(), g.rank()));
    if (g.family() == Family::C) {
        Weight om = omega_plus(g);
        if (liealg::same_central_character(*W, c.normal_form, om)) {
            out.verdict = DegreeOneVerdict::Omega;
            out.witness = om;
        }
        return out;
    }
    const int n = g.rank();
    const auto orbit = W->dot_orbit(c.normal_form);
    if (n >= 2)
        for (const auto& mu : orbit) {
            auto h = g.dynkin_labels(mu);
            bool rest_zero = true;
            for (int i = 2; i < n; ++i) rest_zero = rest_zero && h[i] == 0;
            Rat N = h[1] - 1;
            if (rest_zero && nonneg_int(N) && h[0] == -(N + 2)) return {DegreeOneVerdict::SecondPattern, N, mu};
        }
    for (const auto& mu : orbit) {
        auto h = g.dynkin_labels(mu);
        bool rest_zero = true;
        for (int i = 1; i < n; ++i) rest_zero = rest_zero && h[i] == 0;
        if (rest_zero && !nonneg_int(h[0])) return {DegreeOneVerdict::FirstPattern, h[0], mu};
    }
    return out;
}

}  // namespace hfinite::coherent
