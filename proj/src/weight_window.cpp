#include "hfinite/weight_window.hpp"

#include "hfinite/errors.hpp"
#include "hfinite/parallel.hpp"
#include "hfinite/weyl.hpp"

#include <algorithm>
#include <set>

namespace hfinite::weightcat {

using exactalg::Sample;

WeightWindow::WeightWindow(AlgebraPtr g, Weight base, int radius)
    : g_(std::move(g)), base_(std::move(base)), radius_(radius) {
    if (radius < 0) throw PreconditionError("window radius must be non-negative");
    const auto n = static_cast<std::size_t>(g_->rank());
    if (base_.size() != n) throw DimensionError("base weight has the wrong number of coordinates");
    const int side = 2 * radius + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(side);
    slots_.resize(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<int> k(n);
        std::size_t rest = idx;
        for (std::size_t i = 0; i < n; ++i) {
            k[i] = static_cast<int>(rest % side) - radius;
            rest /= side;
        }
        slots_[idx].weight = base_ + g_->from_root_coords(k);
        slots_[idx].offset = std::move(k);
    }
    maps_.assign(g_->dim(), std::vector<std::optional<RatMatrix>>(total));
    degrees_.assign(g_->dim(), -1);
}

std::size_t WeightWindow::index_of(const std::vector<int>& offset) const {
    const int side = 2 * radius_ + 1;
    std::size_t idx = 0, scale = 1;
    for (int k : offset) {
        idx += static_cast<std::size_t>(k + radius_) * scale;
        scale *= static_cast<std::size_t>(side);
    }
    return idx;
}

std::optional<std::size_t> WeightWindow::find_offset(const std::vector<int>& offset) const {
    if (offset.size() != base_.size()) return std::nullopt;
    for (int k : offset)
        if (k < -radius_ || k > radius_) return std::nullopt;
    return index_of(offset);
}

std::optional<std::size_t> WeightWindow::find_weight(const Weight& w) const {
    auto k = g_->root_lattice_coords(w - base_);
    if (!k) return std::nullopt;
    return find_offset(*k);
}

std::optional<std::size_t> WeightWindow::neighbor(std::size_t s, const std::vector<int>& shift) const {
    std::vector<int> k = slots_.at(s).offset;
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += shift[i];
    return find_offset(k);
}

std::optional<std::size_t> WeightWindow::neighbor(std::size_t s, Label x) const {
    return neighbor(s, g_->basis(x).root_coords);
}

bool WeightWindow::on_boundary(std::size_t s) const {
    for (int k : slots_.at(s).offset)
        if (k == radius_ || k == -radius_) return true;
    return false;
}

std::size_t WeightWindow::boundary_shell_size() const {
    std::size_t count = 0;
    for (std::size_t s = 0; s < slots_.size(); ++s) count += on_boundary(s) ? 1 : 0;
    return count;
}

std::vector<std::size_t> WeightWindow::valid_slots() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < slots_.size(); ++s)
        if (slots_[s].valid) out.push_back(s);
    return out;
}

std::size_t WeightWindow::max_dim() const {
    std::size_t d = 0;
    for (const auto& sl : slots_)
        if (sl.valid) d = std::max(d, sl.dim);
    return d;
}

const RatMatrix* WeightWindow::map(Label x, std::size_t s) const {
    const auto& m = maps_.at(x).at(s);
    return m ? &*m : nullptr;
}

void WeightWindow::set_slot(std::size_t s, std::size_t dim, bool valid) {
    slots_.at(s).dim = valid ? dim : 0;
    slots_.at(s).valid = valid;
    if (!valid)
        for (auto& per_label : maps_) per_label[s].reset();
}

void WeightWindow::set_map(Label x, std::size_t s, RatMatrix m) {
    if (g_->is_cartan(x)) throw PreconditionError("Cartan elements act by the slot weight");
    auto t = neighbor(s, x);
    if (!t) throw WindowError("map target lies outside the window");
    if (!slots_[s].valid || !slots_[*t].valid) throw WindowError("map between invalid slots");
    if (m.cols() != slots_[s].dim || m.rows() != slots_[*t].dim)
        throw DimensionError("slot map shape does not match the slot dimensions");
    maps_.at(x).at(s) = std::move(m);
}

void WeightWindow::clear_map(Label x, std::size_t s) { maps_.at(x).at(s).reset(); }

std::optional<std::pair<RatMatrix, std::size_t>> WeightWindow::word_action(const Word& w, std::size_t s) const {
    if (!slots_.at(s).valid) return std::nullopt;
    RatMatrix acc = RatMatrix::identity(slots_[s].dim);
    std::size_t cur = s;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Label x = *it;
        if (g_->is_cartan(x)) {
            acc = acc * slots_[cur].weight[x];
            continue;
        }
        const RatMatrix* m = map(x, cur);
        if (!m) return std::nullopt;
        acc = *m * acc;
        cur = *neighbor(cur, x);
    }
    return std::make_pair(std::move(acc), cur);
}

std::optional<std::pair<RatMatrix, std::size_t>> WeightWindow::element_action(const UEAWord& u,
                                                                              std::size_t s) const {
    std::optional<std::pair<RatMatrix, std::size_t>> total;
    for (const auto& [w, c] : u.terms()) {
        auto part = word_action(w, s);
        if (!part) return std::nullopt;
        if (!total)
            total = std::make_pair(part->first * c, part->second);
        else
            total->first += part->first * c;
    }
    if (!total && slots_.at(s).valid) return std::make_pair(RatMatrix(slots_[s].dim, slots_[s].dim), s);
    return total;
}

WeightWindow weighting(const FreeHModule& M, const Weight& base, int radius) {
    const auto& g = M.algebra();
    WeightWindow W(M.algebra_ptr(), base, radius);
    for (std::size_t s = 0; s < W.num_slots(); ++s) W.set_slot(s, M.rank());
    std::vector<Label> roots;
    for (Label x = 0; x < g.dim(); ++x)
        if (!g.is_cartan(x)) roots.push_back(x);
    std::vector<std::vector<std::optional<RatMatrix>>> cells(roots.size(), std::vector<std::optional<RatMatrix>>(W.num_slots()));
    parallel_for(W.num_slots(), [&](std::size_t s) {
        for (std::size_t r = 0; r < roots.size(); ++r) {
            auto t = W.neighbor(s, roots[r]);
            if (t) cells[r][s] = M.action(roots[r]).eval(W.slot(*t).weight.c);
        }
    });
    for (std::size_t r = 0; r < roots.size(); ++r)
        for (std::size_t s = 0; s < W.num_slots(); ++s)
            if (cells[r][s]) W.set_map(roots[r], s, std::move(*cells[r][s]));
    std::vector<int> degrees(g.dim());
    for (Label x = 0; x < g.dim(); ++x) degrees[x] = g.is_cartan(x) ? 1 : std::max(0, M.label_degree(x));
    W.set_label_degrees(std::move(degrees));
    auto ctor = M.metadata().find("constructor");
    W.set_description("weighting of " + (ctor == M.metadata().end() ? std::string("module") : ctor->second));
    return W;
}

namespace {

void require_weight_zero(const WeightWindow& W, const UEAWord& u) {
    if (!u.weight(W.algebra()).is_zero()) throw PreconditionError("trace probes must have weight zero");
}

}  // namespace

std::optional<Rat> try_trace(const WeightWindow& W, const UEAWord& u, std::size_t s) {
    require_weight_zero(W, u);
    Rat total(0);
    for (const auto& [w, c] : u.terms()) {
        auto part = W.word_action(w, s);
        if (!part) return std::nullopt;
        total += part->first.trace() * c;
    }
    if (!W.slot(s).valid) return std::nullopt;
    return total;
}

Rat trace_map(const WeightWindow& W, const UEAWord& u, std::size_t s) {
    auto t = try_trace(W, u, s);
    if (!t) throw WindowError("probe excursion leaves the defined part of the window at " + W.slot(s).weight.to_string());
    return *t;
}

std::vector<Probe> default_probe_catalog(const LieAlgebra& g) {
    std::vector<Probe> out;
    for (int k = 0; k < g.rank(); ++k) out.push_back({g.basis(k).name, UEAWord::letter(k)});
    for (int i = 0; i < g.rank(); ++i) {
        Label e = g.simple_e()[i], f = g.simple_f()[i];
        out.push_back({g.basis(e).name + " " + g.basis(f).name, UEAWord::word({e, f})});
        out.push_back({g.basis(f).name + " " + g.basis(e).name, UEAWord::word({f, e})});
    }
    for (int k : {2, 3}) out.push_back({"gelfand" + std::to_string(k), liealg::gelfand_invariant(g, k)});
    return out;
}

TraceTable trace_table(const WeightWindow& W, const Probe& probe) {
    require_weight_zero(W, probe.word);
    TraceTable table{probe, std::vector<std::optional<Rat>>(W.num_slots())};
    parallel_for(W.num_slots(), [&](std::size_t s) { table.values[s] = try_trace(W, probe.word, s); });
    return table;
}

std::optional<int> default_degree_bound(const WeightWindow& W, const UEAWord& u) {
    int best = 0;
    for (const auto& [w, c] : u.terms()) {
        int sum = 0;
        for (Label x : w) {
            int d = W.label_degrees().at(x);
            if (d < 0) return std::nullopt;
            sum += d;
        }
        best = std::max(best, sum);
    }
    return best;
}

namespace {

// Lattice points k >= 0 with sum k <= d.
std::vector<std::vector<int>> simplex_points(std::size_t n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> k(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == n) {
            out.push_back(k);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            k[i] = v;
            self(self, i + 1, left - v);
        }
        k[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

// A simplex of usable slots, anchored at some slot and opening towards one
// orthant.
std::optional<std::vector<std::size_t>> place_simplex(const WeightWindow& W, const std::vector<bool>& usable, int d) {
    const std::size_t n = W.base().size();
    auto pts = simplex_points(n, d);
    for (std::size_t a = 0; a < W.num_slots(); ++a) {
        if (!usable[a]) continue;
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            std::vector<std::size_t> chosen;
            bool ok = true;
            for (const auto& p : pts) {
                std::vector<int> shift(n);
                for (std::size_t i = 0; i < n; ++i) shift[i] = (signs >> i & 1u) ? -p[i] : p[i];
                auto t = W.neighbor(a, shift);
                if (!t || !usable[*t]) {
                    ok = false;
                    break;
                }
                chosen.push_back(*t);
            }
            if (ok) return chosen;
        }
    }
    return std::nullopt;
}

PolynomialFit fit_at_degree(const WeightWindow& W, const std::vector<std::optional<Rat>>& values,
                            const std::vector<bool>& usable, std::size_t usable_count, int degree,
                            const Rat& holdout_fraction) {
    PolynomialFit fit;
    fit.degree = degree;
    auto training = place_simplex(W, usable, degree);
    if (!training) throw WindowError("window too small to place a degree " + std::to_string(degree) + " training set");
    fit.training = *training;
    std::set<std::size_t> train_set(training->begin(), training->end());
    for (std::size_t s = 0; s < W.num_slots(); ++s)
        if (usable[s] && !train_set.count(s)) fit.holdout.push_back(s);
    if (Rat(static_cast<long>(fit.holdout.size())) < holdout_fraction * Rat(static_cast<long>(usable_count)))
        throw WindowError("not enough slots left for the holdout set");
    std::vector<Sample> samples;
    for (auto s : fit.training) samples.push_back({W.slot(s).weight.c, *values[s]});
    fit.poly = exactalg::fit_polynomial(samples, W.base().size(), degree);
    if (!fit.poly) throw Error("simplex training set failed to determine a polynomial");
    for (auto s : fit.holdout)
        if (fit.poly->eval(W.slot(s).weight.c) != *values[s]) fit.residual_slots.push_back(s);
    return fit;
}

}  // namespace

PolynomialFit fit_slot_values(const WeightWindow& W, const std::vector<std::optional<Rat>>& values,
                              std::optional<int> degree, const Rat& holdout_fraction) {
    std::vector<bool> usable(W.num_slots());
    std::size_t count = 0;
    for (std::size_t s = 0; s < W.num_slots(); ++s) {
        usable[s] = values.at(s).has_value();
        count += usable[s] ? 1 : 0;
    }
    if (count == 0) throw WindowError("no slot values to fit");
    if (degree) return fit_at_degree(W, values, usable, count, *degree, holdout_fraction);
    std::optional<PolynomialFit> last;
    for (int d = 0;; ++d) {
        try {
            auto fit = fit_at_degree(W, values, usable, count, d, holdout_fraction);
            if (fit.exact()) return fit;
            last = std::move(fit);
        } catch (const WindowError&) {
            if (!last) throw;
            return *last;
        }
    }
}

PolynomialFit trace_polynomial(const WeightWindow& W, const UEAWord& u, std::optional<int> degree_bound,
                               const Rat& holdout_fraction) {
    if (!degree_bound) degree_bound = default_degree_bound(W, u);
    return fit_slot_values(W, trace_table(W, {"", u}).values, degree_bound, holdout_fraction);
}

CuspidalityVerdict cuspidality_test(const WeightWindow& W, std::vector<std::size_t> slots) {
    const auto& g = W.algebra();
    CuspidalityVerdict verdict;
    std::vector<std::pair<Label, Label>> pairs;
    for (Label e : g.positive_labels()) {
        pairs.emplace_back(e, g.negative_of(e));
        pairs.emplace_back(g.negative_of(e), e);
    }
    auto excursion = [&](std::size_t s, Label up, Label down) { return W.word_action({down, up}, s); };
    if (slots.empty()) {
        for (auto s : W.valid_slots()) {
            bool all = true;
            for (auto [up, down] : pairs) all = all && excursion(s, up, down).has_value();
            if (all) slots.push_back(s);
        }
        if (slots.empty()) throw WindowError("no slot admits every root excursion");
    }
    verdict.tested_slots = slots;
    if (W.max_dim() == 0) {
        verdict.degenerate = true;
        return verdict;
    }
    verdict.cuspidal = true;
    for (auto [up, down] : pairs) {
        RootCuspidality rc;
        rc.root = g.basis(up).root;
        rc.up = up;
        rc.down = down;
        std::vector<std::optional<Rat>> dets(W.num_slots());
        std::vector<char> zero(W.num_slots(), 0);
        parallel_for(slots.size(), [&](std::size_t i) {
            std::size_t s = slots[i];
            auto m = excursion(s, up, down);
            if (!m) throw WindowError("tested slot does not admit the root excursion");
            dets[s] = exactalg::determinant(m->first);
            zero[s] = *dets[s] == 0 ? 1 : 0;
        });
        for (auto s : slots)
            if (zero[s]) rc.zero_slots.push_back(s);
        std::optional<int> bound;
        int du = W.label_degrees().at(up), dd = W.label_degrees().at(down);
        if (du >= 0 && dd >= 0) bound = static_cast<int>(W.max_dim()) * (du + dd);
        try {
            rc.determinant = fit_slot_values(W, dets, bound);
        } catch (const WindowError&) {
            // too few tested slots to fit; the verdict only needs the samples
        }
        if (!rc.zero_slots.empty()) verdict.cuspidal = false;
        verdict.roots.push_back(std::move(rc));
    }
    return verdict;
}

namespace {

Weight highest_weight_of(const LieAlgebra& g, const FiniteRep& V) {
    if (V.dim == 0) throw PreconditionError("empty representation");
    Weight ref(V.weights[0]);
    std::optional<Weight> best;
    int best_height = 0;
    for (const auto& w : V.weights) {
        auto k = g.root_lattice_coords(Weight(w) - ref);
        if (!k) throw PreconditionError("representation weights are not in one root-lattice coset");
        int h = 0;
        for (int v : *k) h += v;
        if (!best || h > best_height) {
            best = Weight(w);
            best_height = h;
        }
    }
    return *best;
}

}  // namespace

WeightWindow window_tensor(const WeightWindow& W, const FiniteRep& V) {
    const auto& g = W.algebra();
    if (V.action.size() != g.dim()) throw DimensionError("representation does not match the algebra");
    const Weight top = highest_weight_of(g, V);
    const std::size_t n = W.base().size();
    // depth[v] = root coordinates of top - weight(v)
    std::vector<std::vector<int>> depth;
    for (const auto& w : V.weights) depth.push_back(*g.root_lattice_coords(top - Weight(w)));

    WeightWindow T(W.algebra_ptr(), W.base() + top, W.radius());
    // Component slot of W for each tensor slot and V basis vector, with the
    // row offset of that block.
    std::vector<std::vector<std::size_t>> comp(T.num_slots()), start(T.num_slots());
    for (std::size_t s = 0; s < T.num_slots(); ++s) {
        bool ok = true;
        std::size_t dim = 0;
        for (std::size_t v = 0; v < V.dim && ok; ++v) {
            std::vector<int> k = T.slot(s).offset;
            for (std::size_t i = 0; i < n; ++i) k[i] += depth[v][i];
            auto ws = W.find_offset(k);
            if (!ws || !W.slot(*ws).valid) {
                ok = false;
                break;
            }
            comp[s].push_back(*ws);
            start[s].push_back(dim);
            dim += W.slot(*ws).dim;
        }
        T.set_slot(s, dim, ok);
    }
    for (Label x = 0; x < g.dim(); ++x) {
        if (g.is_cartan(x)) continue;
        for (std::size_t s = 0; s < T.num_slots(); ++s) {
            if (!T.slot(s).valid) continue;
            auto t = T.neighbor(s, x);
            if (!t || !T.slot(*t).valid) continue;
            RatMatrix m(T.slot(*t).dim, T.slot(s).dim);
            bool ok = true;
            for (std::size_t v = 0; v < V.dim && ok; ++v) {
                const std::size_t dv = W.slot(comp[s][v]).dim;
                const RatMatrix* wx = W.map(x, comp[s][v]);
                if (!wx) {
                    ok = false;
                    break;
                }
                for (std::size_t i = 0; i < wx->rows(); ++i)
                    for (std::size_t j = 0; j < dv; ++j) m(start[*t][v] + i, start[s][v] + j) += (*wx)(i, j);
                for (std::size_t u = 0; u < V.dim; ++u) {
                    const Rat& c = V.action[x](u, v);
                    if (c == 0) continue;
                    for (std::size_t j = 0; j < dv; ++j) m(start[*t][u] + j, start[s][v] + j) += c;
                }
            }
            if (ok) T.set_map(x, s, std::move(m));
        }
    }
    std::vector<int> degrees = W.label_degrees();
    for (Label x = 0; x < g.dim(); ++x)
        if (degrees[x] >= 0 && !g.is_cartan(x)) degrees[x] = std::max(degrees[x], 0);
    T.set_label_degrees(std::move(degrees));
    T.set_description(W.description() + " tensor " + V.description);
    return T;
}

WeightWindow window_translate(const WeightWindow& W, const Weight& mu, const Weight& lambda) {
    const auto& g = W.algebra();
    auto weyl = liealg::weyl_group(W.algebra_ptr());
    if (!liealg::translation_compatible(*weyl, lambda, mu))
        throw PreconditionError("weights are not compatible for translation");
    const auto degrees = hmodules::default_fingerprint_degrees(g);
    std::vector<UEAWord> z;
    std::vector<Rat> from, to;
    for (int k : degrees) {
        z.push_back(liealg::gelfand_invariant(g, k));
        from.push_back(liealg::verma_hc_eigenvalue(g, z.back(), mu));
        to.push_back(liealg::verma_hc_eigenvalue(g, z.back(), lambda));
    }

    std::size_t verified = 0;
    std::vector<char> mismatch(W.num_slots(), 0), seen(W.num_slots(), 0);
    parallel_for(W.num_slots(), [&](std::size_t s) {
        if (!W.slot(s).valid) return;
        const std::size_t d = W.slot(s).dim;
        for (std::size_t k = 0; k < z.size(); ++k) {
            auto m = W.element_action(z[k], s);
            if (!m) return;
            if (!exactalg::matrix_power(m->first - RatMatrix::identity(d) * from[k], static_cast<unsigned>(d)).is_zero())
                mismatch[s] = 1;
        }
        seen[s] = 1;
    });
    for (std::size_t s = 0; s < W.num_slots(); ++s) {
        if (mismatch[s]) throw PreconditionError("window does not have the central character of mu");
        verified += seen[s] ? 1 : 0;
    }
    if (verified == 0) throw WindowError("no slot admits the Gelfand invariants");

    Weight nu = lambda - mu;
    std::optional<Weight> dominant;
    for (const auto& w : weyl->elements()) {
        Weight c = weyl->apply(w, nu);
        if (liealg::is_dominant_integral(g, c)) {
            dominant = c;
            break;
        }
    }
    if (!dominant) throw PreconditionError("lambda - mu is not integral");
    const FiniteRep V = liealg::irrep(g, *dominant);
    const WeightWindow T = window_tensor(W, V);

    std::vector<std::optional<RatMatrix>> basis(T.num_slots());
    parallel_for(T.num_slots(), [&](std::size_t s) {
        if (!T.slot(s).valid) return;
        const std::size_t d = T.slot(s).dim;
        RatMatrix stacked(d * z.size(), d);
        for (std::size_t k = 0; k < z.size(); ++k) {
            auto m = T.element_action(z[k], s);
            if (!m) return;
            RatMatrix p = exactalg::matrix_power(m->first - RatMatrix::identity(d) * to[k], static_cast<unsigned>(d));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) stacked(k * d + i, j) = p(i, j);
        }
        auto ker = exactalg::rat_kernel(stacked);
        RatMatrix B(d, ker.size());
        for (std::size_t c = 0; c < ker.size(); ++c)
            for (std::size_t i = 0; i < d; ++i) B(i, c) = ker[c][i];
        basis[s] = std::move(B);
    });

    WeightWindow out(W.algebra_ptr(), T.base(), T.radius());
    for (std::size_t s = 0; s < out.num_slots(); ++s) out.set_slot(s, basis[s] ? basis[s]->cols() : 0, basis[s].has_value());
    for (Label x = 0; x < g.dim(); ++x) {
        if (g.is_cartan(x)) continue;
        for (std::size_t s = 0; s < out.num_slots(); ++s) {
            if (!basis[s]) continue;
            auto t = out.neighbor(s, x);
            const RatMatrix* tx = T.map(x, s);
            if (!t || !basis[*t] || !tx) continue;
            auto restricted = exactalg::solve(*basis[*t], *tx * *basis[s]);
            if (!restricted) throw Error("generalized eigenspace is not preserved by a root vector");
            out.set_map(x, s, std::move(*restricted));
        }
    }
    out.set_description("translation of " + W.description() + " from " + mu.to_string() + " to " + lambda.to_string());
    return out;
}

EquivalenceVerdict almost_equivalent(const WeightWindow& a, const WeightWindow& b, const std::vector<Probe>& probes,
                                     std::optional<std::size_t> threshold) {
    if (a.algebra().family() != b.algebra().family() || a.algebra().rank() != b.algebra().rank())
        throw PreconditionError("windows belong to different algebras");
    if (!a.algebra().root_lattice_coords(b.base() - a.base()))
        throw PreconditionError("windows lie in different root-lattice cosets");
    EquivalenceVerdict verdict;
    for (const auto& p : probes) verdict.probes.push_back(p.name);
    std::vector<std::pair<std::size_t, std::size_t>> common;
    for (std::size_t s = 0; s < a.num_slots(); ++s) {
        if (!a.slot(s).valid) continue;
        auto t = b.find_weight(a.slot(s).weight);
        if (t && b.slot(*t).valid) common.emplace_back(s, *t);
    }
    if (common.empty()) throw WindowError("the windows have no common slot");
    std::vector<char> differs(common.size(), 0), compared(common.size(), 0);
    parallel_for(common.size(), [&](std::size_t i) {
        auto [s, t] = common[i];
        compared[i] = 1;
        if (a.slot(s).dim != b.slot(t).dim) {
            differs[i] = 1;
            return;
        }
        for (const auto& p : probes) {
            auto x = try_trace(a, p.word, s);
            auto y = try_trace(b, p.word, t);
            if (x && y && *x != *y) {
                differs[i] = 1;
                return;
            }
        }
    });
    for (std::size_t i = 0; i < common.size(); ++i) {
        verdict.compared_slots += compared[i];
        if (differs[i]) verdict.exceptional.push_back(a.slot(common[i].first).weight);
    }
    verdict.threshold = threshold ? *threshold : std::min(a.boundary_shell_size(), b.boundary_shell_size());
    verdict.equivalent = verdict.exceptional.size() <= verdict.threshold;
    return verdict;
}

std::vector<std::size_t> essential_support(const WeightWindow& W) {
    const std::size_t d = W.max_dim();
    std::vector<std::size_t> out;
    for (auto s : W.valid_slots())
        if (W.slot(s).dim == d) out.push_back(s);
    return out;
}

std::vector<WindowBracketFailure> window_bracket_defects(const WeightWindow& W, std::size_t* checked) {
    const auto& g = W.algebra();
    std::vector<std::pair<Label, Label>> pairs;
    for (Label x = 0; x < g.dim(); ++x)
        for (Label y = x + 1; y < g.dim(); ++y)
            if (!g.is_cartan(x) && !g.is_cartan(y)) pairs.emplace_back(x, y);
    std::vector<std::vector<WindowBracketFailure>> per_slot(W.num_slots());
    std::vector<std::size_t> counts(W.num_slots(), 0);
    parallel_for(W.num_slots(), [&](std::size_t s) {
        for (auto [x, y] : pairs) {
            auto xy = W.word_action({x, y}, s);
            auto yx = W.word_action({y, x}, s);
            if (!xy || !yx) continue;
            UEAWord rhs;
            for (const auto& [l, c] : g.bracket(x, y)) rhs.add({l}, c);
            auto r = W.element_action(rhs, s);
            if (!r) continue;
            ++counts[s];
            if (xy->first - yx->first != r->first) per_slot[s].push_back({s, x, y});
        }
    });
    std::vector<WindowBracketFailure> out;
    std::size_t total = 0;
    for (std::size_t s = 0; s < W.num_slots(); ++s) {
        total += counts[s];
        out.insert(out.end(), per_slot[s].begin(), per_slot[s].end());
    }
    if (checked) *checked = total;
    return out;
}

}  // namespace hfinite::weightcat
