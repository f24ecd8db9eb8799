#include "hfinite/weyl.hpp"

#include "hfinite/errors.hpp"

#include <deque>
#include <map>
#include <mutex>

namespace hfinite::liealg {

std::string WeylElement::word_string() const {
    if (word.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += " ";
        s += "s" + std::to_string(word[i] + 1);
    }
    return s;
}

WeylGroup::WeylGroup(AlgebraPtr alg) : alg_(std::move(alg)) {
    const int n = alg_->rank();
    for (int i = 0; i < n; ++i) {
        RatMatrix s = RatMatrix::identity(n);
        const auto& h = alg_->simple_coroot(i);
        const auto& a = alg_->simple_roots()[i];
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) s(k, j) -= a[k] * h[j];
        simple_.push_back(std::move(s));
    }
    elements_.push_back({{}, RatMatrix::identity(n)});
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            RatMatrix m = elements_[cur].action * simple_[i];
            bool seen = false;
            for (const auto& e : elements_)
                if (e.action == m) {
                    seen = true;
                    break;
                }
            if (seen) continue;
            auto word = elements_[cur].word;
            word.push_back(i);
            elements_.push_back({std::move(word), std::move(m)});
            queue.push_back(elements_.size() - 1);
            if (elements_.size() > 100000) throw PreconditionError("Weyl group too large");
        }
    }
}

std::size_t WeylGroup::index_of(const RatMatrix& action) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].action == action) return i;
    throw Error("matrix is not a Weyl group element");
}

const WeylElement& WeylGroup::element(const std::vector<int>& word) const {
    RatMatrix m = RatMatrix::identity(alg_->rank());
    for (int i : word) {
        if (i < 0 || i >= alg_->rank()) throw PreconditionError("simple reflection index out of range");
        m = m * simple_[i];
    }
    return elements_[index_of(m)];
}

bool WeylGroup::is_reduced(const std::vector<int>& word) const { return element(word).length() == word.size(); }

Weight WeylGroup::apply(const WeylElement& w, const Weight& lambda) const {
    const int n = alg_->rank();
    Weight r(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) r[k] += w.action(k, j) * lambda[j];
    return r;
}

Weight WeylGroup::dot(const WeylElement& w, const Weight& lambda) const {
    return apply(w, lambda + alg_->rho()) - alg_->rho();
}

std::vector<Weight> WeylGroup::dot_orbit(const Weight& lambda) const {
    std::set<Weight> seen;
    std::vector<Weight> out;
    for (const auto& w : elements_) {
        Weight m = dot(w, lambda);
        if (seen.insert(m).second) out.push_back(m);
    }
    return out;
}

std::set<std::size_t> WeylGroup::dot_stabilizer(const Weight& lambda) const {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (dot(elements_[i], lambda) == lambda) s.insert(i);
    return s;
}

WeylPtr weyl_group(const AlgebraPtr& alg) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, WeylPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(alg->family()), alg->rank());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto w = std::make_shared<const WeylGroup>(alg);
    cache.emplace(key, w);
    return w;
}

bool in_dominant_region(const LieAlgebra& g, const Weight& lambda) {
    for (std::size_t k = 0; k < g.num_positive_roots(); ++k) {
        Rat v = g.pair_positive(lambda, k);
        if (exactalg::is_integer(v) && v <= -1) return false;
    }
    return true;
}

bool is_integral(const LieAlgebra& g, const Weight& lambda) {
    for (std::size_t k = 0; k < g.num_positive_roots(); ++k)
        if (!exactalg::is_integer(g.pair_positive(lambda, k))) return false;
    return true;
}

bool is_dot_regular(const LieAlgebra& g, const Weight& lambda) {
    Weight s = lambda + g.rho();
    for (std::size_t k = 0; k < g.num_positive_roots(); ++k)
        if (g.pair_positive(s, k) == 0) return false;
    return true;
}

bool is_dominant_integral(const LieAlgebra& g, const Weight& lambda) {
    for (const auto& a : g.dynkin_labels(lambda))
        if (!exactalg::is_integer(a) || a < 0) return false;
    return true;
}

bool same_central_character(const WeylGroup& W, const Weight& lambda, const Weight& mu) {
    for (const auto& w : W.elements())
        if (W.dot(w, lambda) == mu) return true;
    return false;
}

bool translation_compatible(const WeylGroup& W, const Weight& lambda, const Weight& mu) {
    const auto& g = W.algebra();
    if (!in_dominant_region(g, lambda + g.rho()) || !in_dominant_region(g, mu + g.rho())) return false;
    if (!is_integral(g, lambda - mu)) return false;
    return W.dot_stabilizer(lambda) == W.dot_stabilizer(mu);
}

exactalg::Int weyl_dim(const LieAlgebra& g, const LeviSpec& levi, const Weight& lambda) {
    auto labels = g.dynkin_labels(lambda);
    for (int i : levi.simple) {
        if (i < 0 || i >= g.rank()) throw PreconditionError("Levi simple root index out of range");
        if (!exactalg::is_integer(labels[i]) || labels[i] < 0)
            throw PreconditionError("weight is not dominant integral for the Levi subalgebra");
    }
    Weight shifted = lambda + g.rho();
    Rat num(1), den(1);
    for (std::size_t k = 0; k < g.num_positive_roots(); ++k) {
        const auto& coords = g.basis(g.positive_labels()[k]).root_coords;
        bool inside = true;
        for (int i = 0; i < g.rank(); ++i) {
            if (coords[i] == 0) continue;
            bool listed = false;
            for (int j : levi.simple) listed = listed || j == i;
            inside = inside && listed;
        }
        if (!inside) continue;
        num *= g.pair_positive(shifted, k);
        den *= g.pair_positive(g.rho(), k);
    }
    Rat d = num / den;
    if (!exactalg::is_integer(d)) throw Error("Weyl dimension formula produced a non-integer");
    return d.get_num();
}

exactalg::Int weyl_dim(const LieAlgebra& g, const Weight& lambda) {
    LeviSpec all;
    for (int i = 0; i < g.rank(); ++i) all.simple.push_back(i);
    return weyl_dim(g, all, lambda);
}

exactalg::Int gl_weyl_dim(const std::vector<Rat>& eps) {
    const std::size_t n = eps.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Rat d = eps[i] - eps[i + 1];
        if (!exactalg::is_integer(d) || d < 0) throw PreconditionError("gl(n) weight is not dominant integral");
    }
    Rat num(1), den(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= eps[i] - eps[j] + Rat(static_cast<long>(j - i));
            den *= Rat(static_cast<long>(j - i));
        }
    Rat d = num / den;
    return d.get_num();
}

}  // namespace hfinite::liealg
