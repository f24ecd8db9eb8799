#include "hfinite/uea.hpp"

#include "hfinite/errors.hpp"

#include <algorithm>
#include <functional>

namespace hfinite::liealg {

UEAWord UEAWord::letter(Label l) { return word({l}); }

UEAWord UEAWord::word(Word w, const Rat& c) {
    UEAWord u;
    u.add(w, c);
    return u;
}

UEAWord UEAWord::scalar(const Rat& c) { return word({}, c); }

void UEAWord::add(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::size_t UEAWord::max_length() const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.size());
    return m;
}

UEAWord UEAWord::operator+(const UEAWord& o) const {
    UEAWord r(*this);
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

UEAWord UEAWord::operator-(const UEAWord& o) const { return *this + o * Rat(-1); }

UEAWord UEAWord::operator*(const UEAWord& o) const {
    UEAWord r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            r.add(w, ca * cb);
        }
    return r;
}

UEAWord UEAWord::operator*(const Rat& c) const {
    UEAWord r;
    for (const auto& [w, v] : terms_) r.add(w, v * c);
    return r;
}

Weight UEAWord::weight(const LieAlgebra& g) const {
    std::optional<Weight> wt;
    for (const auto& [w, c] : terms_) {
        Weight s = g.zero_weight();
        for (auto l : w) s = s + g.basis(l).root;
        if (wt && !(*wt == s)) throw PreconditionError("enveloping algebra element is not homogeneous");
        wt = s;
    }
    return wt ? *wt : g.zero_weight();
}

std::string UEAWord::to_string(const LieAlgebra& g) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += exactalg::rat_to_short_string(c);
        for (auto l : w) out += "*" + g.basis(l).name;
    }
    return out;
}

UEAWord gelfand_invariant(const LieAlgebra& g, int k) {
    if (k < 1) throw PreconditionError("invariant degree must be positive");
    const std::size_t d = g.dim();
    const int N = g.matrix_size();
    RatMatrix gram(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) gram(a, b) = (g.basis(a).matrix * g.basis(b).matrix).trace();
    auto inv = exactalg::solve(gram, RatMatrix::identity(d));
    if (!inv) throw Error("trace form is degenerate");
    // F(i,j) = sum_a (X_a)_{ij} X^a with X^a = sum_b inv(b,a) X_b.
    std::vector<UEAWord> F(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            UEAWord& f = F[i * N + j];
            for (std::size_t a = 0; a < d; ++a) {
                const Rat& x = g.basis(a).matrix(i, j);
                if (x == 0) continue;
                for (std::size_t b = 0; b < d; ++b)
                    if ((*inv)(b, a) != 0) f.add({b}, x * (*inv)(b, a));
            }
        }
    std::vector<UEAWord> P = F;
    for (int step = 1; step < k; ++step) {
        std::vector<UEAWord> Q(P.size());
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int l = 0; l < N; ++l) {
                    if (P[i * N + l].is_zero() || F[l * N + j].is_zero()) continue;
                    Q[i * N + j] = Q[i * N + j] + P[i * N + l] * F[l * N + j];
                }
        P = std::move(Q);
    }
    UEAWord tr;
    for (int i = 0; i < N; ++i) tr = tr + P[i * N + i];
    return tr;
}

namespace {

using Mono = std::vector<Label>;  // sorted negative root labels, leftmost first
using Vec = std::map<Mono, Rat>;

void accumulate(Vec& into, const Vec& v, const Rat& c) {
    if (c == 0) return;
    for (const auto& [m, x] : v) {
        auto [it, inserted] = into.emplace(m, x * c);
        if (!inserted) {
            it->second += x * c;
            if (it->second == 0) into.erase(it);
        }
    }
}

class VermaAction {
public:
    VermaAction(const LieAlgebra& g, const Weight& lambda) : g_(g), lambda_(lambda) {}

    const Vec& act(Label x, const Mono& m) {
        auto key = std::make_pair(x, m);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Vec out = compute(x, m);
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    Vec act_vec(Label x, const Vec& v) {
        Vec out;
        for (const auto& [m, c] : v) accumulate(out, act(x, m), c);
        return out;
    }

private:
    const LieAlgebra& g_;
    Weight lambda_;
    std::map<std::pair<Label, Mono>, Vec> memo_;

    Vec compute(Label x, const Mono& m) {
        const auto kind = g_.basis(x).kind;
        if (m.empty()) {
            if (kind == RootKind::Cartan) return lambda_[x] == 0 ? Vec{} : Vec{{Mono{}, lambda_[x]}};
            if (kind == RootKind::Positive) return {};
            return {{Mono{x}, Rat(1)}};
        }
        if (kind == RootKind::Negative && x <= m.front()) {
            Mono nm{x};
            nm.insert(nm.end(), m.begin(), m.end());
            return {{nm, Rat(1)}};
        }
        Label y = m.front();
        Mono rest(m.begin() + 1, m.end());
        // x y rest = y (x rest) + [x, y] rest
        Vec out = act_vec(y, act(x, rest));
        for (const auto& [l, c] : g_.bracket(x, y)) accumulate(out, act(l, rest), c);
        return out;
    }
};

}  // namespace

Rat verma_hc_eigenvalue(const LieAlgebra& g, const UEAWord& z, const Weight& lambda) {
    if (!z.weight(g).is_zero()) throw PreconditionError("element does not have weight zero");
    VermaAction action(g, lambda);
    Rat total(0);
    for (const auto& [w, c] : z.terms()) {
        Vec v{{Mono{}, Rat(1)}};
        for (auto it = w.rbegin(); it != w.rend() && !v.empty(); ++it) v = action.act_vec(*it, v);
        auto top = v.find(Mono{});
        if (top != v.end()) total += c * top->second;
    }
    return total;
}

UEAWord map_letters(const UEAWord& u, const std::vector<std::vector<Rat>>& images) {
    UEAWord out;
    for (const auto& [w, c] : u.terms()) {
        UEAWord acc = UEAWord::scalar(c);
        for (auto l : w) {
            UEAWord img;
            for (std::size_t k = 0; k < images[l].size(); ++k)
                if (images[l][k] != 0) img.add({k}, images[l][k]);
            acc = acc * img;
        }
        out = out + acc;
    }
    return out;
}

}  // namespace hfinite::liealg
