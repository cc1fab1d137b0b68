#include "sqcol/oracle.hpp"

#include <algorithm>
#include <functional>

#include "sqcol/errors.hpp"

namespace sqcol {

namespace {

// Backtracking with forbidden-color counts. Once the uncolored part of the current
// subproblem falls apart, each piece is searched on its own.
class Backtracker {
public:
    // `conflict` is the graph whose proper colorings are searched, usually G^2.
    Backtracker(Graph conflict, int q, std::size_t budget, OracleOrder order)
        : n_(conflict.n()), q_(q), budget_(budget), mode_(order), sq_(std::move(conflict)) {
        std::vector<int> order_(n_);
        for (int v = 0; v < n_; ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return sq_.degree(a) > sq_.degree(b); });
        rank_.resize(n_);
        for (int i = 0; i < n_; ++i) rank_[order_[i]] = i;
        color_.assign(n_, 0);
        forb_.assign(static_cast<std::size_t>(n_) * (q_ + 1), 0);
        dom_.assign(n_, q_);
        used_.assign(q_ + 2, 0);
        mark_.assign(n_, 0);
    }

    Verdict run(const Coloring* fixed = nullptr) {
        if (fixed) {
            for (int v = 0; v < n_; ++v) {
                const int c = (*fixed)[v];
                if (c == 0) continue;
                if (c < 1 || c > q_ || forb(v, c) > 0) return Verdict::no;
                assign(v, c);
            }
        }
        std::vector<int> open;
        for (int v = 0; v < n_; ++v)
            if (color_[v] == 0) open.push_back(v);
        if (open.empty()) return Verdict::yes;
        if (q_ == 0) return Verdict::no;
        bool ok = true;
        for (auto& part : split(open))
            if (!(ok = solve(part))) break;
        if (timed_out_) return Verdict::timeout;
        return ok ? Verdict::yes : Verdict::no;
    }

    const Coloring& coloring() const { return color_; }
    std::size_t nodes() const { return nodes_; }

private:
    int& forb(int v, int c) { return forb_[static_cast<std::size_t>(v) * (q_ + 1) + c]; }

    void assign(int v, int c) {
        color_[v] = c;
        ++used_[c];
        for (int w : sq_.neighbors(v))
            if (forb(w, c)++ == 0) --dom_[w];
        trail_.push_back(v);
    }

    void undo_to(std::size_t size) {
        while (trail_.size() > size) {
            const int v = trail_.back();
            trail_.pop_back();
            const int c = color_[v];
            for (int w : sq_.neighbors(v))
                if (--forb(w, c) == 0) ++dom_[w];
            --used_[c];
            color_[v] = 0;
        }
    }

    // Connected pieces of the uncolored vertices in `verts`.
    std::vector<std::vector<int>> split(const std::vector<int>& verts) {
        ++stamp_;
        std::vector<std::vector<int>> parts;
        for (int s : verts) {
            if (color_[s] != 0 || mark_[s] == stamp_) continue;
            mark_[s] = stamp_;
            std::vector<int> part{s};
            for (std::size_t i = 0; i < part.size(); ++i)
                for (int w : sq_.neighbors(part[i]))
                    if (color_[w] == 0 && mark_[w] != stamp_) {
                        mark_[w] = stamp_;
                        part.push_back(w);
                    }
            parts.push_back(std::move(part));
        }
        return parts;
    }

    int pick(const std::vector<int>& verts) const {
        int best = -1;
        for (int v : verts) {
            if (color_[v] != 0) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            // Singleton domains go first in either mode.
            const bool fv = dom_[v] <= 1, fb = dom_[best] <= 1;
            if (fv != fb) {
                if (fv) best = v;
                continue;
            }
            if (mode_ == OracleOrder::saturation && dom_[v] != dom_[best]) {
                if (dom_[v] < dom_[best]) best = v;
                continue;
            }
            if (rank_[v] < rank_[best]) best = v;
        }
        return best;
    }

    bool solve(const std::vector<int>& verts) {
        const int v = pick(verts);
        if (v < 0) return true;
        if (dom_[v] == 0) return false;
        int fresh = 1;
        while (fresh <= q_ && used_[fresh] > 0) ++fresh;
        const std::size_t saved = trail_.size();
        for (int c = 1; c <= q_; ++c) {
            if (forb(v, c) > 0) continue;
            // Unused colors are interchangeable; try only the smallest.
            if (used_[c] == 0 && c != fresh) continue;
            if (++nodes_ > budget_) {
                timed_out_ = true;
                return false;
            }
            assign(v, c);
            bool ok = true;
            for (auto& part : split(verts))
                if (!(ok = solve(part))) break;
            if (ok) return true;
            undo_to(saved);
            if (timed_out_) return false;
        }
        return false;
    }

    int n_, q_;
    std::size_t budget_;
    OracleOrder mode_;
    Graph sq_;
    std::vector<int> rank_, color_, forb_, dom_, used_, trail_, mark_;
    int stamp_ = 0;
    std::size_t nodes_ = 0;
    bool timed_out_ = false;
};

OracleResult search(const Graph& conflict, int q, const Coloring* fixed, std::size_t budget, OracleOrder order) {
    OracleResult res;
    Backtracker bt(conflict, q, budget, order);
    res.verdict = bt.run(fixed);
    res.nodes = bt.nodes();
    if (res.verdict == Verdict::yes) res.witness = bt.coloring();
    return res;
}

}  // namespace

OracleResult brute_force_decide(const Graph& g, int q, std::size_t budget, OracleOrder order) {
    if (q < 0) throw input_error("q must be nonnegative");
    auto res = search(square_graph(g), q, nullptr, budget, order);
    if (res.witness && verify_square_coloring(g, q, *res.witness))
        throw std::logic_error("oracle produced an invalid coloring");
    return res;
}

OracleResult extend_proper_coloring(const Graph& conflict, int q, const Coloring& fixed, std::size_t budget,
                                    OracleOrder order) {
    if (q < 0) throw input_error("q must be nonnegative");
    if (static_cast<int>(fixed.size()) != conflict.n()) throw input_error("precoloring has wrong size");
    return search(conflict, q, &fixed, budget, order);
}

OracleResult extend_square_coloring(const Graph& g, int q, const Coloring& fixed, std::size_t budget,
                                    OracleOrder order) {
    auto res = extend_proper_coloring(square_graph(g), q, fixed, budget, order);
    if (res.witness && verify_square_coloring(g, q, *res.witness))
        throw std::logic_error("oracle produced an invalid coloring");
    return res;
}

std::size_t for_each_proper_coloring(const Graph& conflict, int q, const Coloring& fixed,
                                     const std::function<bool(const Coloring&)>& fn) {
    const int n = conflict.n();
    if (static_cast<int>(fixed.size()) != n) throw input_error("precoloring has wrong size");
    Coloring col = fixed;
    for (int v = 0; v < n; ++v)
        if (col[v] != 0)
            for (int w : conflict.neighbors(v))
                if (col[w] == col[v]) return 0;
    std::vector<int> free;
    for (int v = 0; v < n; ++v)
        if (col[v] == 0) free.push_back(v);
    std::size_t count = 0;
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stop) return;
        if (i == free.size()) {
            ++count;
            if (!fn(col)) stop = true;
            return;
        }
        const int v = free[i];
        for (int c = 1; c <= q && !stop; ++c) {
            bool ok = true;
            for (int w : conflict.neighbors(v))
                if (col[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col[v] = c;
            rec(i + 1);
            col[v] = 0;
        }
    };
    rec(0);
    return count;
}

ChromaticResult square_chromatic_number(const Graph& g, std::size_t budget, OracleOrder order) {
    ChromaticResult res;
    if (g.n() == 0) return res;
    for (int q = g.max_degree() + 1;; ++q) {
        auto r = brute_force_decide(g, q, budget, order);
        if (r.verdict == Verdict::timeout) {
            res.verdict = Verdict::timeout;
            res.value = q;
            return res;
        }
        if (r.verdict == Verdict::yes) {
            res.value = q;
            res.witness = r.witness;
            return res;
        }
    }
}

}  // namespace sqcol
