#pragma once

#include <cstdint>
#include <vector>

namespace sqcol {

// Ax = b with A, b nonnegative; x integral with 0 <= x_i <= max(b).
struct IlpInstance {
    std::vector<std::vector<int>> A;  // C rows of length V
    std::vector<int> b;
};

bool ilp_feasible(const IlpInstance& inst);

// Row-wise feasibility DP over partial left-hand sides, shared by ilp_feasible and the
// Join step. Rows are either fixed (must end equal to target) or free (bounded by target,
// reported in the outcome). Every variable has coefficients only in the listed rows.
class ReachableIlp {
public:
    struct Term {
        int row;
        int coeff;
    };

    int add_row(int target, bool fixed);
    void add_variable(std::vector<Term> terms, int upper);

    // Distinct values of the free rows over all feasible assignments, in free-row order.
    // Stops after the first outcome when `first_only` is set.
    std::vector<std::vector<int>> outcomes(bool first_only = false) const;

    // One feasible assignment (variable values) or empty if infeasible.
    std::vector<int> solution() const;

private:
    std::vector<int> target_;
    std::vector<bool> fixed_;
    std::vector<std::vector<Term>> vars_;
    std::vector<int> upper_;
};

}  // namespace sqcol
