#pragma once

#include <string>
#include <vector>

#include "qlines/rational.hpp"

namespace qlines {

struct Arc {
    int tail = 0;
    int head = 0;
    Rational weight;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.tail == b.tail && a.head == b.head && a.weight == b.weight;
    }
};

// Finite weighted digraph with exact positive arc weights, no self-loops and
// at most one arc per ordered pair. Arcs are kept sorted by (tail, head) so
// serialized forms are reproducible.
class WeightedDigraph {
public:
    explicit WeightedDigraph(int n);

    int point_count() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    void add_arc(int tail, int head, Rational weight);
    bool has_arc(int tail, int head) const;
    const Rational* arc_weight(int tail, int head) const;

    // Optional display names, one per point; empty means "use indices".
    // Labels never affect semantics, only DOT output.
    void set_labels(std::vector<std::string> labels);
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::string> labels_;
};

// True iff every ordered pair of points is joined by a directed path.
bool is_strongly_connected(const WeightedDigraph& g);

// Graphviz rendering with arc weights as edge labels.
std::string to_dot(const WeightedDigraph& g);

} // namespace qlines
