#include "qlines/realizability.hpp"

#include <string>

#include "qlines/errors.hpp"
#include "qlines/lp.hpp"

namespace qlines {

const char* mode_name(Mode m) { return m == Mode::quasimetric ? "quasimetric" : "metric"; }

std::optional<Mode> parse_mode(const std::string& s) {
    if (s == "quasimetric") return Mode::quasimetric;
    if (s == "metric") return Mode::metric;
    return std::nullopt;
}

RealizabilityCertificate realize(const Betweenness& b, Mode mode) {
    if (auto viol = property1_violations(b); !viol.empty()) {
        const auto& v = viol.front();
        throw PropertyViolationError(
            "property (1) fails: both (" + std::to_string(v.present[0]) + "," +
            std::to_string(v.present[1]) + "," + std::to_string(v.present[2]) + ") and (" +
            std::to_string(v.forbidden[0]) + "," + std::to_string(v.forbidden[1]) + "," +
            std::to_string(v.forbidden[2]) + ") are present");
    }

    const int n = b.point_count();
    // Variables: shifted distances x(i,j) = rho(i,j) - 1 >= 0 for i != j.
    std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
    int num_vars = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) var[i][j] = num_vars++;

    ExactLP lp(num_vars);
    auto triple_row = [&](int x, int y, int z) {
        std::vector<Rational> row(num_vars, Rational(0));
        row[var[x][y]] += 1;
        row[var[y][z]] += 1;
        row[var[x][z]] -= 1;
        return row;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                // rho(x,y)+rho(y,z)-rho(x,z) shifts to x(x,y)+x(y,z)-x(x,z)+1.
                if (b.contains(x, y, z))
                    lp.add_eq(triple_row(x, y, z), Rational(-1));
                else
                    lp.add_ge(triple_row(x, y, z), Rational(0));
            }
        }
    if (mode == Mode::metric)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<Rational> row(num_vars, Rational(0));
                row[var[i][j]] += 1;
                row[var[j][i]] -= 1;
                lp.add_eq(std::move(row), Rational(0));
            }

    auto solution = lp.solve();
    if (!solution) return RealizabilityCertificate{Verdict::infeasible, std::nullopt};

    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) matrix[i][j] = (*solution)[var[i][j]] + 1;
    QuasimetricSpace witness = QuasimetricSpace::from_matrix(std::move(matrix));
    if (!verify_witness(b, witness))
        throw Error("internal", "LP witness failed betweenness verification");
    return RealizabilityCertificate{Verdict::realizable, std::move(witness)};
}

bool verify_witness(const Betweenness& b, const QuasimetricSpace& s) {
    if (b.point_count() != s.point_count())
        throw SizeMismatchError(b.point_count(), s.point_count());
    return betweenness_of(s) == b;
}

} // namespace qlines
