#pragma once

#include <optional>
#include <vector>

#include "qlines/rational.hpp"

namespace qlines {

// Exact rational feasibility solver for systems of linear equalities and
// >=-inequalities over nonnegative variables. Phase-1 simplex with Bland's
// rule, so termination is guaranteed and verdicts are exact; problem sizes
// in this project are tiny.
class ExactLP {
public:
    explicit ExactLP(int num_vars);

    // coeffs has num_vars entries.
    void add_eq(std::vector<Rational> coeffs, Rational rhs);
    void add_ge(std::vector<Rational> coeffs, Rational rhs);

    // A feasible assignment of the variables, or nullopt when the system is
    // infeasible.
    std::optional<std::vector<Rational>> solve() const;

private:
    struct Row {
        std::vector<Rational> coeffs;
        Rational rhs;
        bool equality = false;
    };

    int num_vars_;
    std::vector<Row> rows_;
};

} // namespace qlines
