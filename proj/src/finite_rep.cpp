#include "hfinite/finite_rep.hpp"

#include "hfinite/errors.hpp"

#include <deque>
#include <map>

namespace hfinite::liealg {

namespace {

using Key = std::vector<int>;
using SparseVec = std::map<Key, Rat>;

// Sparse matrix of X on the k-th exterior power, indexed by sorted subsets.
struct WedgeTable {
    std::vector<std::vector<int>> subsets;
    std::map<std::vector<int>, int> index;
    // per generator, per subset: list of (target subset, coefficient)
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> act;
};

void enumerate_subsets(int N, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int t = start; t < N; ++t) {
        cur.push_back(t);
        enumerate_subsets(N, k, t + 1, cur, out);
        cur.pop_back();
    }
}

WedgeTable make_wedge_table(const std::vector<RatMatrix>& gens, int N, int k) {
    WedgeTable t;
    std::vector<int> cur;
    enumerate_subsets(N, k, 0, cur, t.subsets);
    for (std::size_t i = 0; i < t.subsets.size(); ++i) t.index[t.subsets[i]] = static_cast<int>(i);
    t.act.resize(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        t.act[g].resize(t.subsets.size());
        for (std::size_t s = 0; s < t.subsets.size(); ++s) {
            std::map<int, Rat> acc;
            const auto& S = t.subsets[s];
            for (std::size_t pos = 0; pos < S.size(); ++pos) {
                for (int r = 0; r < N; ++r) {
                    const Rat& x = gens[g](r, S[pos]);
                    if (x == 0) continue;
                    std::vector<int> T = S;
                    T[pos] = r;
                    bool repeated = false;
                    for (std::size_t q = 0; q < T.size(); ++q)
                        if (q != pos && T[q] == r) repeated = true;
                    if (repeated) continue;
                    int sign = 1;
                    for (std::size_t a = 0; a < T.size(); ++a)
                        for (std::size_t b = a + 1; b < T.size(); ++b)
                            if (T[a] > T[b]) sign = -sign;
                    std::sort(T.begin(), T.end());
                    acc[t.index.at(T)] += sign > 0 ? x : Rat(-x);
                }
            }
            for (const auto& [target, c] : acc)
                if (c != 0) t.act[g][s].emplace_back(target, c);
        }
    }
    return t;
}

struct WeightSpace {
    std::vector<SparseVec> basis;
    std::vector<Key> pivots;
};

void add_scaled(SparseVec& into, const SparseVec& v, const Rat& c) {
    if (c == 0) return;
    for (const auto& [k, x] : v) {
        auto [it, ins] = into.emplace(k, x * c);
        if (!ins) {
            it->second += x * c;
            if (it->second == 0) into.erase(it);
        }
    }
}

Rat entry(const SparseVec& v, const Key& k) {
    auto it = v.find(k);
    return it == v.end() ? Rat(0) : it->second;
}

// Builds the cyclic module generated by a highest-weight vector inside a
// tensor product of exterior powers of the natural representation.
FiniteRep highest_weight_span(const std::vector<RatMatrix>& gens, int N, const std::vector<std::size_t>& cartan,
                              const std::vector<std::size_t>& lowering, const std::vector<int>& multiplicity,
                              const std::vector<Rat>& cartan_shift) {
    std::vector<int> layout;  // exterior degree of each tensor factor
    for (std::size_t k = 0; k < multiplicity.size(); ++k)
        for (int c = 0; c < multiplicity[k]; ++c) layout.push_back(static_cast<int>(k + 1));
    std::map<int, WedgeTable> tables;
    for (int k : layout)
        if (!tables.count(k)) tables.emplace(k, make_wedge_table(gens, N, k));

    auto apply = [&](std::size_t g, const SparseVec& v) {
        SparseVec out;
        for (const auto& [key, c] : v) {
            for (std::size_t f = 0; f < layout.size(); ++f) {
                const auto& tab = tables.at(layout[f]);
                for (const auto& [target, x] : tab.act[g][key[f]]) {
                    Key nk = key;
                    nk[f] = target;
                    auto [it, ins] = out.emplace(nk, c * x);
                    if (!ins) {
                        it->second += c * x;
                        if (it->second == 0) out.erase(it);
                    }
                }
            }
        }
        return out;
    };
    auto weight_of = [&](const Key& key) {
        std::vector<Rat> w(cartan.size());
        for (std::size_t c = 0; c < cartan.size(); ++c) {
            for (std::size_t f = 0; f < layout.size(); ++f)
                for (int t : tables.at(layout[f]).subsets[key[f]]) w[c] += gens[cartan[c]](t, t);
        }
        return w;
    };

    Key top(layout.size());
    for (std::size_t f = 0; f < layout.size(); ++f) {
        std::vector<int> S;
        for (int t = 0; t < layout[f]; ++t) S.push_back(t);
        top[f] = tables.at(layout[f]).index.at(S);
    }

    std::map<std::vector<Rat>, WeightSpace> spaces;
    std::vector<std::vector<Rat>> order;  // weight spaces in discovery order
    auto insert = [&](SparseVec v) -> bool {
        if (v.empty()) return false;
        auto w = weight_of(v.begin()->first);
        auto& sp = spaces[w];
        for (std::size_t i = 0; i < sp.basis.size(); ++i) add_scaled(v, sp.basis[i], -entry(v, sp.pivots[i]));
        if (v.empty()) return false;
        Key p = v.begin()->first;
        Rat inv = 1 / v.begin()->second;
        for (auto& [k, x] : v) x *= inv;
        for (auto& b : sp.basis) add_scaled(b, v, -entry(b, p));
        if (sp.basis.empty()) order.push_back(w);
        sp.basis.push_back(v);
        sp.pivots.push_back(p);
        return true;
    };

    std::deque<SparseVec> queue;
    SparseVec v0{{top, Rat(1)}};
    insert(v0);
    queue.push_back(v0);
    while (!queue.empty()) {
        SparseVec v = std::move(queue.front());
        queue.pop_front();
        for (auto g : lowering) {
            SparseVec u = apply(g, v);
            if (insert(u)) queue.push_back(std::move(u));
        }
        if (spaces.size() > 20000) throw PreconditionError("highest-weight module too large");
    }

    // Global basis: weight spaces in discovery order; the reduced vectors change
    // as later vectors arrive, so coordinates are taken from the final state.
    std::vector<std::pair<std::vector<Rat>, std::size_t>> index;
    for (const auto& w : order)
        for (std::size_t i = 0; i < spaces[w].basis.size(); ++i) index.emplace_back(w, i);
    std::map<std::pair<std::vector<Rat>, std::size_t>, std::size_t> position;
    for (std::size_t i = 0; i < index.size(); ++i) position[index[i]] = i;

    FiniteRep rep;
    rep.dim = index.size();
    rep.action.assign(gens.size(), RatMatrix(rep.dim, rep.dim));
    for (std::size_t col = 0; col < rep.dim; ++col) {
        const auto& [w, i] = index[col];
        std::vector<Rat> wt = w;
        for (std::size_t c = 0; c < cartan.size(); ++c) wt[c] += cartan_shift[c];
        rep.weights.push_back(wt);
        const SparseVec& b = spaces[w].basis[i];
        for (std::size_t g = 0; g < gens.size(); ++g) {
            SparseVec u = apply(g, b);
            if (u.empty()) continue;
            auto uw = weight_of(u.begin()->first);
            auto it = spaces.find(uw);
            if (it == spaces.end()) throw Error("generator leaves the generated module");
            SparseVec rem = u;
            for (std::size_t j = 0; j < it->second.basis.size(); ++j) {
                Rat c = entry(u, it->second.pivots[j]);
                if (c == 0) continue;
                rep.action[g](position.at({uw, j}), col) = c;
                add_scaled(rem, it->second.basis[j], -c);
            }
            if (!rem.empty()) throw Error("generator image is outside the generated module");
        }
    }
    for (std::size_t c = 0; c < cartan.size(); ++c)
        if (cartan_shift[c] != 0) rep.action[cartan[c]] += RatMatrix::identity(rep.dim) * cartan_shift[c];
    return rep;
}

}  // namespace

std::vector<RatMatrix> gl_generators(int n) {
    std::vector<RatMatrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatMatrix m(n, n);
            m(i, j) = 1;
            gens.push_back(std::move(m));
        }
    return gens;
}

FiniteRep irrep_gl(int n, const std::vector<Rat>& eps) {
    if (n < 1 || eps.size() != static_cast<std::size_t>(n)) throw DimensionError("gl(n) weight has wrong length");
    std::vector<int> mult;
    for (int k = 0; k + 1 < n; ++k) {
        Rat d = eps[k] - eps[k + 1];
        if (!exactalg::is_integer(d) || d < 0) throw PreconditionError("gl(n) weight is not dominant integral");
        mult.push_back(static_cast<int>(d.get_num().get_si()));
    }
    std::vector<std::size_t> cartan, lowering;
    for (int k = 0; k < n; ++k) cartan.push_back(gl_label(n, k, k));
    for (int k = 0; k + 1 < n; ++k) lowering.push_back(gl_label(n, k + 1, k));
    std::vector<Rat> shift(n, eps[n - 1]);
    FiniteRep rep = highest_weight_span(gl_generators(n), n, cartan, lowering, mult, shift);
    rep.description = "L_gl(" + std::to_string(n) + ")(" + exactalg::rat_list_to_string(eps) + ")";
    return rep;
}

FiniteRep irrep(const LieAlgebra& g, const Weight& lambda) {
    auto labels = g.dynkin_labels(lambda);
    std::vector<int> mult;
    for (const auto& a : labels) {
        if (!exactalg::is_integer(a) || a < 0) throw PreconditionError("weight is not dominant integral");
        mult.push_back(static_cast<int>(a.get_num().get_si()));
    }
    std::vector<RatMatrix> gens;
    for (const auto& b : g.basis()) gens.push_back(b.matrix);
    std::vector<std::size_t> cartan, lowering(g.simple_f().begin(), g.simple_f().end());
    for (int k = 0; k < g.rank(); ++k) cartan.push_back(k);
    FiniteRep rep = highest_weight_span(gens, g.matrix_size(), cartan, lowering, mult, std::vector<Rat>(g.rank()));
    rep.description = "L(" + lambda.to_string() + ")";
    return rep;
}

std::size_t representation_defects(const LieAlgebra& g, const FiniteRep& V) {
    std::size_t bad = 0;
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = 0; b < g.dim(); ++b) {
            RatMatrix lhs = exactalg::commutator(V.action[a], V.action[b]);
            RatMatrix rhs(V.dim, V.dim);
            for (const auto& [l, c] : g.bracket(a, b)) rhs += V.action[l] * c;
            if (lhs != rhs) ++bad;
        }
    return bad;
}

}  // namespace hfinite::liealg
