#pragma once

#include <vector>

#include "qlines/digraph.hpp"
#include "qlines/rational.hpp"

namespace qlines {

// A finite quasimetric space: exact distance matrix with zero diagonal,
// positive off-diagonal entries and the triangle inequality. Symmetry is not
// required. Instances are immutable once built and validated.
class QuasimetricSpace {
public:
    // Validates every axiom; throws AxiomViolation naming the first failure.
    static QuasimetricSpace from_matrix(std::vector<std::vector<Rational>> matrix);

    int point_count() const { return n_; }
    const Rational& dist(int from, int to) const { return d_[static_cast<size_t>(from) * n_ + to]; }

    std::vector<std::vector<Rational>> matrix() const;

    // Pointwise scaling by a positive rational; preserves all axioms.
    QuasimetricSpace scaled(const Rational& factor) const;

    friend bool operator==(const QuasimetricSpace& a, const QuasimetricSpace& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }

private:
    QuasimetricSpace(int n, std::vector<Rational> flat) : n_(n), d_(std::move(flat)) {}
    friend QuasimetricSpace shortest_path_space(const WeightedDigraph& g);

    int n_;
    std::vector<Rational> d_; // row-major n*n
};

// All-pairs shortest paths by Floyd-Warshall over exact rationals.
// Throws NotStronglyConnected(u, v) if some pair has no directed path.
QuasimetricSpace shortest_path_space(const WeightedDigraph& g);

// The complete digraph whose arc weights are the distances of s. Feeding it
// back through shortest_path_space reproduces s exactly.
WeightedDigraph complete_digraph(const QuasimetricSpace& s);

} // namespace qlines
