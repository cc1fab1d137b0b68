#include "sqcol/ilp.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "sqcol/errors.hpp"

namespace sqcol {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

using StateSet = std::unordered_set<std::vector<int>, VecHash>;

}  // namespace

int ReachableIlp::add_row(int target, bool fixed) {
    if (target < 0) throw input_error("negative right-hand side");
    target_.push_back(target);
    fixed_.push_back(fixed);
    return static_cast<int>(target_.size()) - 1;
}

void ReachableIlp::add_variable(std::vector<Term> terms, int upper) {
    for (const auto& t : terms)
        if (t.row < 0 || t.row >= static_cast<int>(target_.size()) || t.coeff < 0)
            throw input_error("bad ILP term");
    vars_.push_back(std::move(terms));
    upper_.push_back(upper);
}

std::vector<std::vector<int>> ReachableIlp::outcomes(bool first_only) const {
    const int rows = static_cast<int>(target_.size());
    const int nv = static_cast<int>(vars_.size());
    std::vector<int> last(rows, -1);
    for (int j = 0; j < nv; ++j)
        for (const auto& t : vars_[j])
            if (t.coeff > 0) last[t.row] = j;
    for (int r = 0; r < rows; ++r)
        if (fixed_[r] && last[r] < 0 && target_[r] != 0) return {};
    std::vector<std::vector<int>> closing(nv);
    for (int r = 0; r < rows; ++r)
        if (fixed_[r] && last[r] >= 0) closing[last[r]].push_back(r);

    StateSet cur{std::vector<int>(rows, 0)};
    for (int j = 0; j < nv && !cur.empty(); ++j) {
        StateSet next;
        bool inert = std::none_of(vars_[j].begin(), vars_[j].end(), [](const Term& t) { return t.coeff > 0; });
        const int hi = inert ? 0 : upper_[j];
        for (const auto& s : cur) {
            std::vector<int> v = s;
            for (int x = 0; x <= hi; ++x) {
                if (x > 0) {
                    bool over = false;
                    for (const auto& t : vars_[j]) {
                        v[t.row] += t.coeff;
                        if (v[t.row] > target_[t.row]) over = true;
                    }
                    if (over) break;
                }
                bool ok = true;
                for (int r : closing[j])
                    if (v[r] != target_[r]) {
                        ok = false;
                        break;
                    }
                if (ok) next.insert(v);
            }
        }
        cur.swap(next);
    }
    std::set<std::vector<int>> out;
    for (const auto& s : cur) {
        std::vector<int> free;
        for (int r = 0; r < rows; ++r)
            if (!fixed_[r]) free.push_back(s[r]);
        out.insert(std::move(free));
        if (first_only) break;
    }
    return {out.begin(), out.end()};
}

std::vector<int> ReachableIlp::solution() const {
    const int rows = static_cast<int>(target_.size());
    const int nv = static_cast<int>(vars_.size());
    // Forward pass keeping every reachable state per layer, then walk back.
    std::vector<StateSet> layers(nv + 1);
    layers[0].insert(std::vector<int>(rows, 0));
    for (int j = 0; j < nv; ++j) {
        for (const auto& s : layers[j]) {
            std::vector<int> v = s;
            for (int x = 0; x <= upper_[j]; ++x) {
                if (x > 0) {
                    bool over = false;
                    for (const auto& t : vars_[j]) {
                        v[t.row] += t.coeff;
                        if (v[t.row] > target_[t.row]) over = true;
                    }
                    if (over) break;
                }
                layers[j + 1].insert(v);
            }
        }
    }
    const std::vector<int>* goal = nullptr;
    for (const auto& s : layers[nv]) {
        bool ok = true;
        for (int r = 0; r < rows && ok; ++r)
            if (fixed_[r] && s[r] != target_[r]) ok = false;
        if (ok) {
            goal = &s;
            break;
        }
    }
    if (!goal) return {};
    std::vector<int> x(nv, 0);
    std::vector<int> cur = *goal;
    for (int j = nv - 1; j >= 0; --j) {
        for (int val = 0; val <= upper_[j]; ++val) {
            std::vector<int> prev = cur;
            bool neg = false;
            for (const auto& t : vars_[j]) {
                prev[t.row] -= t.coeff * val;
                if (prev[t.row] < 0) neg = true;
            }
            if (!neg && layers[j].count(prev)) {
                x[j] = val;
                cur = std::move(prev);
                break;
            }
        }
    }
    return x;
}

bool ilp_feasible(const IlpInstance& inst) {
    const int C = static_cast<int>(inst.b.size());
    if (static_cast<int>(inst.A.size()) != C) throw input_error("ILP row count mismatch");
    if (C == 0) return true;
    const int V = static_cast<int>(inst.A[0].size());
    int bmax = 0;
    for (int x : inst.b) {
        if (x < 0) throw input_error("negative right-hand side");
        bmax = std::max(bmax, x);
    }
    for (const auto& row : inst.A) {
        if (static_cast<int>(row.size()) != V) throw input_error("ragged ILP matrix");
        for (int a : row)
            if (a < 0) throw input_error("negative ILP coefficient");
    }
    if (V == 0) return bmax == 0;
    ReachableIlp dp;
    for (int x : inst.b) dp.add_row(x, true);
    for (int j = 0; j < V; ++j) {
        std::vector<ReachableIlp::Term> terms;
        for (int r = 0; r < C; ++r)
            if (inst.A[r][j] > 0) terms.push_back({r, inst.A[r][j]});
        dp.add_variable(std::move(terms), bmax);
    }
    return !dp.outcomes(true).empty();
}

}  // namespace sqcol
