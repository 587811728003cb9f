#include "qlines/lp.hpp"

#include <algorithm>

#include "qlines/errors.hpp"

namespace qlines {

ExactLP::ExactLP(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw InvalidArgumentError("negative variable count");
}

void ExactLP::add_eq(std::vector<Rational> coeffs, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != num_vars_)
        throw InvalidArgumentError("coefficient row has wrong length");
    rows_.push_back({std::move(coeffs), std::move(rhs), true});
}

void ExactLP::add_ge(std::vector<Rational> coeffs, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != num_vars_)
        throw InvalidArgumentError("coefficient row has wrong length");
    rows_.push_back({std::move(coeffs), std::move(rhs), false});
}

// Phase-1 simplex over exact rationals. Inequalities get surplus columns;
// rows are sign-normalized so the right-hand side is nonnegative; rows
// without a ready identity column get an artificial. Minimizing the sum of
// artificials decides feasibility. Pivoting uses the most-negative reduced
// cost until a pivot-count threshold, then switches to Bland's rule, which
// guarantees termination.
std::optional<std::vector<Rational>> ExactLP::solve() const {
    const int m = static_cast<int>(rows_.size());
    if (m == 0) return std::vector<Rational>(num_vars_, Rational(0));

    int cols = num_vars_;
    std::vector<int> surplus_col(m, -1);
    for (int i = 0; i < m; ++i)
        if (!rows_[i].equality) surplus_col[i] = cols++;
    const int first_artificial = cols;

    std::vector<std::vector<Rational>> a(m);
    std::vector<Rational> b(m);
    std::vector<int> basis(m, -1);

    for (int i = 0; i < m; ++i) {
        a[i].assign(cols, Rational(0));
        for (int j = 0; j < num_vars_; ++j) a[i][j] = rows_[i].coeffs[j];
        b[i] = rows_[i].rhs;
        if (surplus_col[i] >= 0) a[i][surplus_col[i]] = Rational(-1);
        if (b[i] < 0) {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
        }
        if (surplus_col[i] >= 0 && a[i][surplus_col[i]] == 1) basis[i] = surplus_col[i];
    }
    int num_artificial = 0;
    for (int i = 0; i < m; ++i)
        if (basis[i] < 0) ++num_artificial;
    for (auto& row : a) row.resize(cols + num_artificial, Rational(0));
    {
        int next = first_artificial;
        for (int i = 0; i < m; ++i)
            if (basis[i] < 0) {
                a[i][next] = Rational(1);
                basis[i] = next++;
            }
        cols += num_artificial;
    }

    // Reduced-cost row for min sum(artificials): d_j = c_j - sum over basic
    // artificial rows of a[i][j]; objective value = sum of their b.
    std::vector<Rational> d(cols, Rational(0));
    Rational objective(0);
    for (int j = first_artificial; j < cols; ++j) d[j] = Rational(1);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < first_artificial) continue;
        for (int j = 0; j < cols; ++j) d[j] -= a[i][j];
        objective += b[i];
    }

    long long pivots = 0;
    const long long bland_after = 64 + 8LL * (m + cols);
    while (true) {
        int entering = -1;
        if (pivots < bland_after) {
            const Rational* best = nullptr;
            for (int j = 0; j < cols; ++j)
                if (d[j] < 0 && (best == nullptr || d[j] < *best)) {
                    best = &d[j];
                    entering = j;
                }
        } else {
            for (int j = 0; j < cols; ++j)
                if (d[j] < 0) {
                    entering = j;
                    break;
                }
        }
        if (entering < 0) break;

        int leaving = -1;
        Rational best_ratio(0);
        for (int i = 0; i < m; ++i) {
            if (a[i][entering] <= 0) continue;
            Rational ratio = b[i] / a[i][entering];
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = std::move(ratio);
            }
        }
        if (leaving < 0) return std::nullopt; // cannot happen: phase-1 is bounded

        const Rational pivot = a[leaving][entering];
        for (auto& v : a[leaving]) v /= pivot;
        b[leaving] /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leaving || a[i][entering] == 0) continue;
            const Rational factor = a[i][entering];
            for (int j = 0; j < cols; ++j)
                if (a[leaving][j] != 0) a[i][j] -= factor * a[leaving][j];
            b[i] -= factor * b[leaving];
        }
        if (d[entering] != 0) {
            const Rational factor = d[entering];
            for (int j = 0; j < cols; ++j)
                if (a[leaving][j] != 0) d[j] -= factor * a[leaving][j];
            objective += factor * b[leaving];
        }
        basis[leaving] = entering;
        ++pivots;
    }

    if (objective != 0) return std::nullopt;
    std::vector<Rational> solution(num_vars_, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < num_vars_) solution[basis[i]] = b[i];
    return solution;
}

} // namespace qlines
