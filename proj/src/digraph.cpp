#include "qlines/digraph.hpp"

#include <algorithm>
#include <sstream>

#include "qlines/errors.hpp"

namespace qlines {

WeightedDigraph::WeightedDigraph(int n) : n_(n) {
    if (n < 1) throw InvalidArgumentError("digraph needs at least one point");
}

void WeightedDigraph::add_arc(int tail, int head, Rational weight) {
    if (tail < 0 || tail >= n_ || head < 0 || head >= n_)
        throw InvalidArgumentError("arc endpoint out of range");
    if (tail == head) throw InvalidArgumentError("self-loops are not allowed");
    if (weight <= 0) throw InvalidArgumentError("arc weights must be positive");
    Arc arc{tail, head, std::move(weight)};
    auto pos = std::lower_bound(arcs_.begin(), arcs_.end(), arc, [](const Arc& a, const Arc& b) {
        return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
    });
    if (pos != arcs_.end() && pos->tail == tail && pos->head == head)
        throw InvalidArgumentError("duplicate arc (" + std::to_string(tail) + "," +
                                   std::to_string(head) + ")");
    arcs_.insert(pos, std::move(arc));
}

bool WeightedDigraph::has_arc(int tail, int head) const {
    return arc_weight(tail, head) != nullptr;
}

const Rational* WeightedDigraph::arc_weight(int tail, int head) const {
    Arc key{tail, head, Rational(0)};
    auto pos = std::lower_bound(arcs_.begin(), arcs_.end(), key, [](const Arc& a, const Arc& b) {
        return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
    });
    if (pos == arcs_.end() || pos->tail != tail || pos->head != head) return nullptr;
    return &pos->weight;
}

void WeightedDigraph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != static_cast<size_t>(n_))
        throw InvalidArgumentError("label table size differs from point count");
    labels_ = std::move(labels);
}

bool is_strongly_connected(const WeightedDigraph& g) {
    const int n = g.point_count();
    if (n == 1) return true;
    std::vector<std::vector<int>> out(n), in(n);
    for (const Arc& a : g.arcs()) {
        out[a.tail].push_back(a.head);
        in[a.head].push_back(a.tail);
    }
    auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n;
    };
    return reaches_all(out) && reaches_all(in);
}

std::string to_dot(const WeightedDigraph& g) {
    std::ostringstream os;
    os << "digraph quasimetric {\n";
    for (int v = 0; v < g.point_count(); ++v) {
        os << "  " << v;
        if (!g.labels().empty()) os << " [label=\"" << g.labels()[v] << "\"]";
        os << ";\n";
    }
    for (const Arc& a : g.arcs())
        os << "  " << a.tail << " -> " << a.head << " [label=\"" << format_rational(a.weight)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace qlines
