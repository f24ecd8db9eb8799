#include "hfinite/weyl_carrier.hpp"

#include "hfinite/errors.hpp"

#include <random>

namespace hfinite::hmodules {

using exactalg::Monomial;

std::string OmegaReading::describe() const {
    std::string s = mixed_is_product ? "mixed=x_i*x_j" : "mixed=x_i*d_j";
    s += levi_sign < 0 ? ";levi=-d_j(x)E_ij" : ";levi=+d_j(x)E_ij";
    s += wedge_uses_r ? ";wedge=x_r(x)E_ir" : ";wedge=x_i(x)E_ir";
    return s;
}

std::vector<OmegaReading> OmegaReading::all() {
    std::vector<OmegaReading> out;
    for (bool m : {true, false})
        for (int s : {-1, 1})
            for (bool w : {true, false}) out.push_back({m, s, w});
    return out;
}

namespace {

struct TermBuilder {
    WeylOperator op;

    void add(Rat c, std::initializer_list<int> xs, std::initializer_list<int> ds, int gi = -1, int gj = -1) {
        WeylTerm t;
        t.coeff = c;
        for (int i : xs) ++t.xpow.exp[i];
        for (int i : ds) ++t.dpow.exp[i];
        t.gl_i = gi;
        t.gl_j = gj;
        op.push_back(t);
    }
};

}  // namespace

WeylCarrier::WeylCarrier(AlgebraPtr g, std::vector<Rat> b, FiniteRep V, std::set<int> S, OmegaReading reading)
    : g_(std::move(g)), b_(std::move(b)), V_(std::move(V)), S_(std::move(S)), reading_(reading) {
    if (g_->family() != liealg::Family::A) throw PreconditionError("the Weyl carrier realizes sl(n+1) only");
    const int n = g_->rank();
    if (b_.size() != static_cast<std::size_t>(n)) throw DimensionError("b must have n entries");
    for (const auto& x : b_)
        if (x == 0) throw PreconditionError("b must have non-zero entries");
    for (int s : S_)
        if (s < 0 || s >= n) throw PreconditionError("S must be a subset of {1, ..., n}");
    if (V_.action.size() != static_cast<std::size_t>(n * n)) throw DimensionError("V must be a gl(n)-module");
    for (const auto& w : V_.weights)
        if (w.size() != static_cast<std::size_t>(n)) throw DimensionError("V weights must have n entries");
    for (int k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < V_.dim; ++a)
            for (std::size_t c = 0; c < V_.dim; ++c) {
                Rat expect = a == c ? V_.weights[a][k] : Rat(0);
                if (V_.action[liealg::gl_label(n, k, k)](a, c) != expect)
                    throw PreconditionError("V must be given on a weight basis");
            }
    }
    for (int k = 0; k < n; ++k) htilde_to_basis_.push_back(g_->htilde_on_basis(k));
    for (int j = 0; j < n; ++j) {
        const exactalg::RatMatrix& h = g_->basis(j).matrix;
        std::vector<Rat> c(n);
        for (int k = 0; k < n; ++k) c[k] = h(k, k) - h(n, n);
        basis_to_htilde_.push_back(c);
    }
    build_images();
}

void WeylCarrier::build_images() {
    const int n = g_->rank();
    auto in = [&](int i) { return S_.count(i) > 0; };
    const Rat sz(static_cast<long>(S_.size()));

    htilde_.assign(n, {});
    for (int k = 0; k < n; ++k) {
        TermBuilder t;
        if (!in(k)) {
            t.add(Rat(-1), {k}, {k});
            t.add(Rat(1), {}, {}, k, k);
            t.add(Rat(-1), {}, {});
        } else {
            t.add(Rat(1), {k}, {k});
            t.add(Rat(1), {}, {}, k, k);
        }
        htilde_[k] = t.op;
    }

    images_.assign(g_->dim(), {});
    for (Label l = 0; l < g_->dim(); ++l) {
        const auto& e = g_->basis(l);
        TermBuilder t;
        if (e.kind == liealg::RootKind::Cartan) {
            for (int k = 0; k < n; ++k) {
                const Rat& c = basis_to_htilde_[l][k];
                if (c == 0) continue;
                for (auto term : htilde_[k]) {
                    term.coeff *= c;
                    t.op.push_back(term);
                }
            }
            images_[l] = t.op;
            continue;
        }
        int i = -1, j = -1;
        for (int r = 0; r <= n; ++r)
            for (int c = 0; c <= n; ++c)
                if (e.matrix(r, c) != 0) {
                    i = r;
                    j = c;
                }
        if (i < n && j < n) {
            t.add(Rat(1), {}, {}, i, j);
            if (!in(i) && !in(j)) t.add(Rat(-1), {j}, {i});
            else if (in(i) && in(j)) t.add(Rat(1), {i}, {j});
            else if (in(i) && !in(j)) {
                if (reading_.mixed_is_product) t.add(Rat(1), {i, j}, {});
                else t.add(Rat(1), {i}, {j});
            } else t.add(Rat(-1), {}, {i, j});
        } else if (i == n) {
            if (!in(j)) t.add(Rat(-1), {j}, {});
            else t.add(Rat(-1), {}, {j});
        } else {
            // E_{i, n+1}
            if (!in(i)) {
                for (int q = 0; q < n; ++q) {
                    if (!in(q)) {
                        t.add(Rat(1), {q}, {q, i});
                        t.add(Rat(-1), {}, {q}, i, q);
                    } else {
                        t.add(Rat(-1), {q}, {q, i});
                        t.add(Rat(1), {q}, {}, i, q);
                    }
                }
                for (int q = 0; q < n; ++q) t.add(Rat(-1), {}, {i}, q, q);
                t.add(Rat(n + 1) - sz, {}, {i});
            } else {
                for (int q = 0; q < n; ++q) {
                    if (in(q)) {
                        t.add(Rat(1), {i, q}, {q});
                        if (reading_.wedge_uses_r) t.add(Rat(1), {q}, {}, i, q);
                        else t.add(Rat(1), {i}, {}, i, q);
                    } else {
                        t.add(Rat(-1), {i, q}, {q});
                        t.add(Rat(reading_.levi_sign), {}, {q}, i, q);
                    }
                }
                for (int q = 0; q < n; ++q) t.add(Rat(1), {i}, {}, q, q);
                t.add(-(Rat(n) - sz), {i}, {});
            }
        }
        images_[l] = t.op;
    }
}

CarrierElement WeylCarrier::zero() const { return CarrierElement(V_.dim, Poly(n())); }

CarrierElement WeylCarrier::apply(const WeylOperator& op, const CarrierElement& c) const {
    const int n = this->n();
    if (c.size() != V_.dim) throw DimensionError("carrier element has the wrong length");
    CarrierElement out = zero();
    for (const auto& t : op) {
        CarrierElement part = zero();
        for (std::size_t l = 0; l < V_.dim; ++l) {
            Poly p = c[l];
            if (p.is_zero()) continue;
            for (int k = 0; k < n; ++k)
                for (unsigned r = 0; r < t.dpow.exp[k]; ++r) p = p.partial(k) + p * b_[k];
            Poly xm = Poly::monomial(n, t.xpow, t.coeff);
            part[l] = p * xm;
        }
        if (t.gl_i < 0) {
            for (std::size_t l = 0; l < V_.dim; ++l) out[l] += part[l];
        } else {
            const auto& X = V_.action[liealg::gl_label(n, t.gl_i, t.gl_j)];
            for (std::size_t a = 0; a < V_.dim; ++a)
                for (std::size_t l = 0; l < V_.dim; ++l)
                    if (X(a, l) != 0 && !part[l].is_zero()) out[a] += part[l] * X(a, l);
        }
    }
    return out;
}

CarrierElement WeylCarrier::from_free(const std::vector<Poly>& coeffs) const {
    const int n = this->n();
    if (coeffs.size() != V_.dim) throw DimensionError("coefficient vector has the wrong length");
    std::vector<Poly> to_htilde;
    for (int j = 0; j < n; ++j) {
        Poly p(n);
        for (int k = 0; k < n; ++k) p += Poly::variable(n, k) * basis_to_htilde_[j][k];
        to_htilde.push_back(p);
    }
    CarrierElement out = zero();
    for (std::size_t l = 0; l < V_.dim; ++l) {
        Poly P = coeffs[l].compose(to_htilde);
        for (const auto& [m, c] : P.terms()) {
            CarrierElement v = zero();
            v[l] = Poly(n, c);
            for (int k = 0; k < n; ++k)
                for (unsigned r = 0; r < m.exp[k]; ++r) v = apply(htilde_[k], v);
            for (std::size_t a = 0; a < V_.dim; ++a) out[a] += v[a];
        }
    }
    return out;
}

std::vector<Poly> WeylCarrier::to_free(const CarrierElement& c) const {
    const int n = this->n();
    if (c.size() != V_.dim) throw DimensionError("carrier element has the wrong length");
    std::vector<Poly> to_basis;
    for (int k = 0; k < n; ++k) {
        Poly p(n);
        for (int j = 0; j < n; ++j) p += Poly::variable(n, j) * htilde_to_basis_[k][j];
        to_basis.push_back(p);
    }
    std::vector<Poly> out;
    for (std::size_t l = 0; l < V_.dim; ++l) {
        // h~_k acts on component l by s_k (x_k d_k + b_k x_k) + c_k, so
        // x^m = prod_k prod_{t < m_k} (h~_k - s_k t - c_k) / (s_k b_k) applied to 1.
        Poly acc(n);
        std::map<std::pair<int, unsigned>, Poly> factor_cache;
        for (const auto& [m, coeff] : c[l].terms()) {
            Poly term(n, coeff);
            for (int k = 0; k < n; ++k) {
                Rat s = S_.count(k) ? Rat(1) : Rat(-1);
                Rat ck = V_.weights[l][k] - (S_.count(k) ? Rat(0) : Rat(1));
                for (unsigned t = 0; t < m.exp[k]; ++t) {
                    auto key = std::make_pair(k, t);
                    auto it = factor_cache.find(key);
                    if (it == factor_cache.end()) {
                        Poly f = (Poly::variable(n, k) - Poly(n, s * Rat(t) + ck)) * (1 / (s * b_[k]));
                        it = factor_cache.emplace(key, f).first;
                    }
                    term = term * it->second;
                }
            }
            acc += term;
        }
        out.push_back(acc.compose(to_basis));
    }
    return out;
}

FreeHModule weyl_to_free(const WeylCarrier& C) {
    const auto& g = C.algebra();
    const std::size_t r = C.V().dim;
    const std::size_t nv = static_cast<std::size_t>(g.rank());
    std::vector<PolyMatrix> actions;
    for (Label x = 0; x < g.dim(); ++x) {
        PolyMatrix A(r, r, nv);
        for (std::size_t mu = 0; mu < r; ++mu) {
            CarrierElement gen = C.zero();
            gen[mu] = Poly(nv, Rat(1));
            auto col = C.to_free(C.act(x, gen));
            for (std::size_t l = 0; l < r; ++l) A(l, mu) = col[l];
        }
        actions.push_back(std::move(A));
    }
    std::string S = "{";
    for (int s : C.S()) S += (S.size() > 1 ? "," : "") + std::to_string(s + 1);
    S += "}";
    std::map<std::string, std::string> meta{{"constructor", "exponential"},
                                            {"b", exactalg::rat_list_to_string(C.b())},
                                            {"S", S},
                                            {"V", C.V().description},
                                            {"omega_reading", C.reading().describe()}};
    return FreeHModule(C.algebra_ptr(), r, std::move(actions), std::move(meta));
}

std::vector<Rat> exponential_gl_weight(const LieAlgebra& g, const Weight& lambda) {
    auto eps = g.epsilon_coords(lambda);
    for (auto& e : eps) e += 1;
    return eps;
}

FreeHModule exponential_module(const AlgebraPtr& g, const std::vector<Rat>& b, const Weight& lambda,
                               const std::set<int>& S, const OmegaReading& reading) {
    if (g->family() != liealg::Family::A) throw PreconditionError("exponential modules are defined for sl(n+1)");
    auto eps = exponential_gl_weight(*g, lambda);
    WeylCarrier C(g, b, liealg::irrep_gl(g->rank(), eps), S, reading);
    FreeHModule M = weyl_to_free(C);
    M.set_metadata("lambda", exactalg::rat_list_to_string(lambda.c));
    return M;
}

ReadingCheck check_reading(const WeylCarrier& C, std::size_t samples, unsigned seed) {
    const auto& g = C.algebra();
    const int n = C.n();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2);
    ReadingCheck out{C.reading(), 0, 0};
    for (std::size_t s = 0; s < samples; ++s) {
        CarrierElement c = C.zero();
        for (std::size_t l = 0; l < C.V().dim; ++l)
            for (int t = 0; t < 2; ++t) {
                Monomial m;
                for (int k = 0; k < n; ++k) m.exp[k] = static_cast<std::uint16_t>(deg(rng));
                c[l].add_term(m, exactalg::make_rat(coef(rng), 1 + std::abs(coef(rng))));
            }
        std::vector<CarrierElement> once(g.dim());
        for (Label a = 0; a < g.dim(); ++a) once[a] = C.act(a, c);
        bool ok = true;
        for (Label a = 0; a < g.dim() && ok; ++a)
            for (Label b = a + 1; b < g.dim() && ok; ++b) {
                CarrierElement lhs = C.act(a, once[b]);
                CarrierElement rhs = C.act(b, once[a]);
                for (const auto& [l, coeff] : g.bracket(a, b)) {
                    for (std::size_t i = 0; i < lhs.size(); ++i) rhs[i] += once[l][i] * coeff;
                }
                for (std::size_t i = 0; i < lhs.size(); ++i)
                    if (lhs[i] != rhs[i]) ok = false;
            }
        ++out.samples;
        if (!ok) ++out.failures;
    }
    return out;
}

}  // namespace hfinite::hmodules
