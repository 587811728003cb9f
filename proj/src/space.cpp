#include "qlines/space.hpp"

#include <optional>

#include "qlines/errors.hpp"

namespace qlines {

QuasimetricSpace QuasimetricSpace::from_matrix(std::vector<std::vector<Rational>> matrix) {
    const int n = static_cast<int>(matrix.size());
    if (n < 1) throw AxiomViolation("shape", {0, 0, 0}, "empty distance matrix");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n)
            throw AxiomViolation("shape", {0, 0, 0}, "distance matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (matrix[i][i] != 0)
            throw AxiomViolation("identity", {i, i, 0},
                                 "dist(" + std::to_string(i) + "," + std::to_string(i) +
                                     ") must be 0");
        for (int j = 0; j < n; ++j)
            if (i != j && matrix[i][j] <= 0)
                throw AxiomViolation("identity", {i, j, 0},
                                     "dist(" + std::to_string(i) + "," + std::to_string(j) +
                                         ") must be positive for distinct points");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (matrix[i][k] > matrix[i][j] + matrix[j][k])
                    throw AxiomViolation("triangle", {i, j, k},
                                         "dist(" + std::to_string(i) + "," + std::to_string(k) +
                                             ") > dist(" + std::to_string(i) + "," +
                                             std::to_string(j) + ") + dist(" + std::to_string(j) +
                                             "," + std::to_string(k) + ")");
    std::vector<Rational> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (auto& row : matrix)
        for (auto& v : row) flat.push_back(std::move(v));
    return QuasimetricSpace(n, std::move(flat));
}

std::vector<std::vector<Rational>> QuasimetricSpace::matrix() const {
    std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m[i][j] = dist(i, j);
    return m;
}

QuasimetricSpace QuasimetricSpace::scaled(const Rational& factor) const {
    if (factor <= 0) throw InvalidArgumentError("scale factor must be positive");
    std::vector<Rational> flat = d_;
    for (auto& v : flat) v *= factor;
    return QuasimetricSpace(n_, std::move(flat));
}

QuasimetricSpace shortest_path_space(const WeightedDigraph& g) {
    const int n = g.point_count();
    // Missing entries stay unset rather than using a sentinel "infinity";
    // exact arithmetic has no safe huge constant.
    std::vector<std::optional<Rational>> d(static_cast<size_t>(n) * n);
    auto at = [&](int i, int j) -> std::optional<Rational>& {
        return d[static_cast<size_t>(i) * n + j];
    };
    for (int i = 0; i < n; ++i) at(i, i) = Rational(0);
    for (const Arc& a : g.arcs()) at(a.tail, a.head) = a.weight;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!at(i, k)) continue;
            for (int j = 0; j < n; ++j) {
                if (!at(k, j)) continue;
                Rational through = *at(i, k) + *at(k, j);
                auto& cell = at(i, j);
                if (!cell || through < *cell) cell = std::move(through);
            }
        }
    std::vector<Rational> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!at(i, j)) throw NotStronglyConnected(i, j);
            flat[static_cast<size_t>(i) * n + j] = std::move(*at(i, j));
        }
    return QuasimetricSpace(n, std::move(flat));
}

WeightedDigraph complete_digraph(const QuasimetricSpace& s) {
    WeightedDigraph g(s.point_count());
    for (int i = 0; i < s.point_count(); ++i)
        for (int j = 0; j < s.point_count(); ++j)
            if (i != j) g.add_arc(i, j, s.dist(i, j));
    return g;
}

} // namespace qlines
