#include "qlines/constructions.hpp"

#include <algorithm>
#include <string>

#include "qlines/errors.hpp"

namespace qlines {

PartitionTriple::PartitionTriple(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
    if (p < 1 || q < 1 || r < 1)
        throw InvalidArgumentError("partition parts must be positive integers");
}

long long weight_constant_C(const PartitionTriple& t) {
    return std::max({t.p + t.q, t.p + t.r, t.q + t.r}) - 1;
}

long long weight_constant_D1(const PartitionTriple& t) {
    // 2c > p+q+r-3 keeps the hub from shortcutting the long geodesics, and
    // c >= max part keeps the cyclic arcs from shortcutting the hub paths.
    long long base = (t.sum() - 3) / 2 + 1;
    return std::max<long long>({base, t.p, t.q, t.r});
}

long long weight_constant_D2(const PartitionTriple& t) {
    return t.sum() - 1;
}

namespace {

void add_bidirected_path(WeightedDigraph& g, int first, int count) {
    for (int i = 0; i + 1 < count; ++i) {
        g.add_arc(first + i, first + i + 1, Rational(1));
        g.add_arc(first + i + 1, first + i, Rational(1));
    }
}

std::vector<std::string> block_labels(const PartitionTriple& t, bool with_hub) {
    std::vector<std::string> labels;
    for (int i = 1; i <= t.p; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= t.q; ++i) labels.push_back("y" + std::to_string(i));
    for (int i = 1; i <= t.r; ++i) labels.push_back("z" + std::to_string(i));
    if (with_hub) labels.push_back("u");
    return labels;
}

} // namespace

WeightedDigraph construct_C(const PartitionTriple& t) {
    const int n = t.sum();
    const int x1 = 0, xp = t.p - 1;
    const int y1 = t.p, yq = t.p + t.q - 1;
    const int z1 = t.p + t.q, zr = n - 1;
    WeightedDigraph g(n);
    add_bidirected_path(g, x1, t.p);
    add_bidirected_path(g, y1, t.q);
    add_bidirected_path(g, z1, t.r);
    const Rational c(weight_constant_C(t));
    g.add_arc(x1, z1, c);
    g.add_arc(z1, yq, c);
    g.add_arc(yq, x1, c);
    g.add_arc(xp, y1, c);
    g.add_arc(y1, zr, c);
    g.add_arc(zr, xp, c);
    g.set_labels(block_labels(t, false));
    return g;
}

WeightedDigraph construct_D1(const PartitionTriple& t) {
    const int n = t.sum() + 1;
    const int x1 = 0, xp = t.p - 1;
    const int y1 = t.p, yq = t.p + t.q - 1;
    const int z1 = t.p + t.q, zr = t.sum() - 1;
    const int u = n - 1;
    WeightedDigraph g(n);
    add_bidirected_path(g, x1, t.p);
    add_bidirected_path(g, y1, t.q);
    add_bidirected_path(g, z1, t.r);
    const Rational c(weight_constant_D1(t));
    const Rational two_c = c * 2;
    g.add_arc(x1, u, two_c);
    g.add_arc(u, xp, two_c);
    g.add_arc(y1, u, two_c);
    g.add_arc(u, yq, two_c);
    g.add_arc(z1, u, two_c);
    g.add_arc(u, zr, two_c);
    g.add_arc(xp, y1, c);
    g.add_arc(yq, z1, c);
    g.add_arc(zr, x1, c);
    g.set_labels(block_labels(t, true));
    return g;
}

WeightedDigraph construct_D2(const PartitionTriple& t) {
    const int n = t.sum() + 1;
    const int x1 = 0, xp = t.p - 1;
    const int y1 = t.p, yq = t.p + t.q - 1;
    const int z1 = t.p + t.q, zr = t.sum() - 1;
    const int u = n - 1;
    WeightedDigraph g(n);
    add_bidirected_path(g, x1, t.p);
    add_bidirected_path(g, y1, t.q);
    add_bidirected_path(g, z1, t.r);
    const Rational c(weight_constant_D2(t));
    g.add_arc(x1, u, c);
    g.add_arc(u, xp, c);
    g.add_arc(y1, u, c);
    g.add_arc(u, yq, Rational(t.p + t.r));
    g.add_arc(z1, u, c);
    g.add_arc(u, zr, c);
    g.add_arc(xp, y1, Rational(t.p));
    g.add_arc(yq, z1, Rational(t.q + t.r));
    g.add_arc(zr, y1, Rational(t.r));
    g.add_arc(yq, x1, Rational(t.q + t.p));
    g.set_labels(block_labels(t, true));
    return g;
}

namespace {

struct Block {
    int first; // index of v_1
    int count;

    int at(int i) const { return first + i - 1; } // 1-based v_i
};

// Families over the displayed index orders. asc means the middle/leading
// pair ascends in the block order, desc descends.
void add_monotone_within(std::vector<Triple>& out, const Block& v) {
    for (int i = 1; i <= v.count; ++i)
        for (int j = i + 1; j <= v.count; ++j)
            for (int k = j + 1; k <= v.count; ++k) {
                out.push_back({v.at(i), v.at(j), v.at(k)});
                out.push_back({v.at(k), v.at(j), v.at(i)});
            }
}

void add_pair_then_point(std::vector<Triple>& out, const Block& v, bool asc, const Block& w) {
    for (int i = 1; i <= v.count; ++i)
        for (int j = i + 1; j <= v.count; ++j)
            for (int k = 1; k <= w.count; ++k) {
                if (asc)
                    out.push_back({v.at(i), v.at(j), w.at(k)});
                else
                    out.push_back({v.at(j), v.at(i), w.at(k)});
            }
}

void add_point_then_pair(std::vector<Triple>& out, const Block& w, const Block& v, bool asc) {
    for (int k = 1; k <= w.count; ++k)
        for (int i = 1; i <= v.count; ++i)
            for (int j = i + 1; j <= v.count; ++j) {
                if (asc)
                    out.push_back({w.at(k), v.at(i), v.at(j)});
                else
                    out.push_back({w.at(k), v.at(j), v.at(i)});
            }
}

void add_cross_product(std::vector<Triple>& out, const Block& a, const Block& b, const Block& c) {
    for (int i = 1; i <= a.count; ++i)
        for (int j = 1; j <= b.count; ++j)
            for (int k = 1; k <= c.count; ++k) out.push_back({a.at(i), b.at(j), c.at(k)});
}

void add_hub_families(std::vector<Triple>& out, const Block& v, int u) {
    // u v_j v_i and v_j v_i u for j > i
    for (int i = 1; i <= v.count; ++i)
        for (int j = i + 1; j <= v.count; ++j) {
            out.push_back({u, v.at(j), v.at(i)});
            out.push_back({v.at(j), v.at(i), u});
        }
}

} // namespace

Betweenness expected_betweenness_C(const PartitionTriple& t) {
    const Block X{0, t.p}, Y{t.p, t.q}, Z{t.p + t.q, t.r};
    std::vector<Triple> triples;
    add_monotone_within(triples, X);
    add_monotone_within(triples, Y);
    add_monotone_within(triples, Z);
    add_pair_then_point(triples, X, true, Y);  // X^2_< Y
    add_point_then_pair(triples, Y, X, true);  // Y X^2_<
    add_pair_then_point(triples, Y, true, X);  // Y^2_< X
    add_point_then_pair(triples, X, Y, true);  // X Y^2_<
    add_pair_then_point(triples, X, false, Z); // X^2_> Z
    add_point_then_pair(triples, Z, X, false); // Z X^2_>
    add_pair_then_point(triples, Z, true, X);  // Z^2_< X
    add_point_then_pair(triples, X, Z, true);  // X Z^2_<
    add_pair_then_point(triples, Y, false, Z); // Y^2_> Z
    add_point_then_pair(triples, Z, Y, false); // Z Y^2_>
    add_pair_then_point(triples, Z, false, Y); // Z^2_> Y
    add_point_then_pair(triples, Y, Z, false); // Y Z^2_>
    return Betweenness(t.sum(), std::move(triples));
}

Betweenness expected_betweenness_D(int variant, const PartitionTriple& t) {
    if (variant != 1 && variant != 2)
        throw InvalidArgumentError("four-line variant must be 1 or 2");
    const Block X{0, t.p}, Y{t.p, t.q}, Z{t.p + t.q, t.r};
    const int u = t.sum();
    std::vector<Triple> triples;
    add_monotone_within(triples, X);
    add_monotone_within(triples, Y);
    add_monotone_within(triples, Z);
    add_cross_product(triples, X, Y, Z);
    if (variant == 1) {
        add_cross_product(triples, Y, Z, X);
        add_cross_product(triples, Z, X, Y);
    } else {
        add_cross_product(triples, Z, Y, X);
    }
    // shared ascending order families: V^2_< W and W V^2_< for V != W
    const Block blocks[3] = {X, Y, Z};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            add_pair_then_point(triples, blocks[a], true, blocks[b]);
            add_point_then_pair(triples, blocks[b], blocks[a], true);
        }
    add_hub_families(triples, X, u);
    add_hub_families(triples, Y, u);
    add_hub_families(triples, Z, u);
    return Betweenness(t.sum() + 1, std::move(triples));
}

} // namespace qlines
