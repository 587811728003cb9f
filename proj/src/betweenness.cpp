#include "qlines/betweenness.hpp"

#include <algorithm>
#include <map>

#include "qlines/errors.hpp"

namespace qlines {

Betweenness::Betweenness(int n, std::vector<Triple> triples) : n_(n) {
    if (n < 1) throw InvalidArgumentError("betweenness needs at least one point");
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    mask_.assign(static_cast<size_t>(n) * n * n, 0);
    for (const Triple& t : triples) {
        auto [x, y, z] = t;
        if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n)
            throw InvalidArgumentError("triple coordinate out of range");
        if (x == y || y == z || x == z)
            throw InvalidArgumentError("triple coordinates must be pairwise distinct");
        mask_[(static_cast<size_t>(x) * n + y) * n + z] = 1;
    }
    triples_ = std::move(triples);
}

Betweenness betweenness_of(const QuasimetricSpace& s) {
    const int n = s.point_count();
    std::vector<Triple> triples;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                if (s.dist(x, y) + s.dist(y, z) == s.dist(x, z)) triples.push_back({x, y, z});
            }
        }
    return Betweenness(n, std::move(triples));
}

std::vector<int> segment(const QuasimetricSpace& s, int x, int y) {
    if (x == y) throw SamePointError(x);
    std::vector<int> out;
    for (int z = 0; z < s.point_count(); ++z)
        if (s.dist(x, z) + s.dist(z, y) == s.dist(x, y)) out.push_back(z);
    return out;
}

Line line_of(const Betweenness& b, int x, int y) {
    if (x == y) throw SamePointError(x);
    Line line;
    line.defining_pair = {x, y};
    for (int z = 0; z < b.point_count(); ++z) {
        if (z == x || z == y) {
            line.members.push_back(z);
            continue;
        }
        if (b.contains(z, x, y) || b.contains(x, z, y) || b.contains(x, y, z))
            line.members.push_back(z);
    }
    return line;
}

LineSet lines_of(const Betweenness& b) {
    const int n = b.point_count();
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> by_members;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) by_members[line_of(b, x, y).members].push_back({x, y});
    LineSet ls;
    for (auto& [members, pairs] : by_members) {
        LineClass lc;
        lc.members = members;
        lc.universal = static_cast<int>(members.size()) == n;
        lc.defining_pairs = std::move(pairs);
        ls.lines.push_back(std::move(lc));
    }
    return ls;
}

bool LineSet::any_universal() const {
    for (const auto& l : lines)
        if (l.universal) return true;
    return false;
}

std::vector<size_t> LineSet::sizes() const {
    std::vector<size_t> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(l.members.size());
    std::sort(out.begin(), out.end());
    return out;
}

bool has_universal_line(const Betweenness& b) {
    const int n = b.point_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && static_cast<int>(line_of(b, x, y).members.size()) == n) return true;
    return false;
}

std::set<std::pair<int, int>> symmetric_pairs(const Betweenness& b) {
    std::set<std::pair<int, int>> out;
    const int n = b.point_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (line_of(b, x, y).members == line_of(b, y, x).members) out.insert({x, y});
    return out;
}

bool is_geodesic(const Betweenness& b, const std::vector<int>& seq) {
    std::vector<char> seen(b.point_count(), 0);
    for (int p : seq) {
        if (p < 0 || p >= b.point_count()) throw InvalidArgumentError("point out of range");
        if (seen[p]) throw DuplicatePointError(p);
        seen[p] = 1;
    }
    const size_t m = seq.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k)
                if (!b.contains(seq[i], seq[j], seq[k])) return false;
    return true;
}

namespace {

// Whether inserting w at position pos (0 = prefix, len = append) keeps seq a
// geodesic; only the triples involving w need checking.
bool insertion_ok(const Betweenness& b, const std::vector<int>& seq, size_t pos, int w) {
    const size_t m = seq.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            // positions of seq[i], seq[j], w in the extended sequence
            if (pos <= i) {
                if (!b.contains(w, seq[i], seq[j])) return false;
            } else if (pos <= j) {
                if (!b.contains(seq[i], w, seq[j])) return false;
            } else {
                if (!b.contains(seq[i], seq[j], w)) return false;
            }
        }
    return true;
}

bool is_maximal(const Betweenness& b, const std::vector<int>& seq) {
    std::vector<char> used(b.point_count(), 0);
    for (int p : seq) used[p] = 1;
    for (int w = 0; w < b.point_count(); ++w) {
        if (used[w]) continue;
        for (size_t pos = 0; pos <= seq.size(); ++pos)
            if (insertion_ok(b, seq, pos, w)) return false;
    }
    return true;
}

void extend(const Betweenness& b, std::vector<int>& seq, std::vector<char>& used,
            std::vector<GeodesicSeq>& out) {
    if (seq.size() >= 2 && is_maximal(b, seq)) out.push_back(GeodesicSeq{seq});
    for (int w = 0; w < b.point_count(); ++w) {
        if (used[w]) continue;
        if (!insertion_ok(b, seq, seq.size(), w)) continue;
        seq.push_back(w);
        used[w] = 1;
        extend(b, seq, used, out);
        used[w] = 0;
        seq.pop_back();
    }
}

} // namespace

std::vector<GeodesicSeq> maximal_geodesics(const Betweenness& b, int max_points) {
    if (b.point_count() > max_points) throw TooLargeError(b.point_count(), max_points);
    // Every suffix-truncation of a geodesic is a geodesic, so growing by
    // appends alone reaches each one exactly once.
    std::vector<GeodesicSeq> out;
    std::vector<int> seq;
    std::vector<char> used(b.point_count(), 0);
    for (int v = 0; v < b.point_count(); ++v) {
        seq.push_back(v);
        used[v] = 1;
        extend(b, seq, used, out);
        used[v] = 0;
        seq.pop_back();
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Property1Violation> property1_violations(const Betweenness& b) {
    std::vector<Property1Violation> out;
    for (const Triple& t : b.triples()) {
        auto [x, y, z] = t;
        if (b.contains(y, x, z)) out.push_back({t, {y, x, z}});
        if (b.contains(x, z, y)) out.push_back({t, {x, z, y}});
    }
    return out;
}

std::vector<Property2Violation> property2_violations(const Betweenness& b) {
    std::vector<Property2Violation> out;
    const int n = b.point_count();
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (w == x || w == y || w == z || x == y || x == z || y == z) continue;
                    const bool left = b.contains(w, x, y) && b.contains(w, y, z);
                    const bool right = b.contains(w, x, z) && b.contains(x, y, z);
                    if (left && !right) out.push_back({{w, x, y, z}, true});
                    if (right && !left) out.push_back({{w, x, y, z}, false});
                }
    return out;
}

std::vector<FourPointViolation> validate_four_point_implications(const Betweenness& b) {
    // Antecedent/consequent patterns of the three implications, as index
    // sequences into (w,x,y,z) = (0,1,2,3).
    static constexpr std::array<std::array<Triple, 8>, 3> rules = {{
        // wxy,ywz,zyx,xzw => wzy,yxz,zwx,xyw
        {{{0, 1, 2}, {2, 0, 3}, {3, 2, 1}, {1, 3, 0}, {0, 3, 2}, {2, 1, 3}, {3, 0, 1}, {1, 2, 0}}},
        // wxy,yzx,xwz,zyw => wzy,ywx,xyz,zxw
        {{{0, 1, 2}, {2, 3, 1}, {1, 0, 3}, {3, 2, 0}, {0, 3, 2}, {2, 0, 1}, {1, 2, 3}, {3, 1, 0}}},
        // wxy,yzw,xwz,zyx => wzy,yxw,xyz,zwx
        {{{0, 1, 2}, {2, 3, 0}, {1, 0, 3}, {3, 2, 1}, {0, 3, 2}, {2, 1, 0}, {1, 2, 3}, {3, 0, 1}}},
    }};
    std::vector<FourPointViolation> out;
    const int n = b.point_count();
    std::array<int, 4> pts{};
    for (pts[0] = 0; pts[0] < n; ++pts[0])
        for (pts[1] = 0; pts[1] < n; ++pts[1])
            for (pts[2] = 0; pts[2] < n; ++pts[2])
                for (pts[3] = 0; pts[3] < n; ++pts[3]) {
                    if (pts[0] == pts[1] || pts[0] == pts[2] || pts[0] == pts[3] ||
                        pts[1] == pts[2] || pts[1] == pts[3] || pts[2] == pts[3])
                        continue;
                    for (int rule = 0; rule < 3; ++rule) {
                        const auto& pat = rules[rule];
                        auto instance = [&](const Triple& ix) -> Triple {
                            return {pts[ix[0]], pts[ix[1]], pts[ix[2]]};
                        };
                        bool antecedent = true;
                        for (int a = 0; a < 4 && antecedent; ++a)
                            antecedent = b.contains(instance(pat[a]));
                        if (!antecedent) continue;
                        for (int c = 4; c < 8; ++c) {
                            Triple t = instance(pat[c]);
                            if (!b.contains(t)) out.push_back({rule + 1, pts, t});
                        }
                    }
                }
    return out;
}

std::vector<Triple> restriction(const Betweenness& b, const std::vector<int>& subset) {
    std::vector<Triple> out;
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = 0; j < subset.size(); ++j)
            for (size_t k = 0; k < subset.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                if (b.contains(subset[i], subset[j], subset[k]))
                    out.push_back({subset[i], subset[j], subset[k]});
            }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qlines
