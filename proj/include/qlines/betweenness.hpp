#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qlines/space.hpp"

namespace qlines {

using Triple = std::array<int, 3>;

// The betweenness relation: a set of ordered triples of pairwise distinct
// points. Abstract relations (not backed by any space) are first-class;
// the structural requirements (range, distinctness) are enforced here while
// the relational properties (1) and (2) are checked by on-demand validators.
class Betweenness {
public:
    Betweenness(int n, std::vector<Triple> triples);

    int point_count() const { return n_; }
    const std::vector<Triple>& triples() const { return triples_; } // sorted lex
    size_t size() const { return triples_.size(); }

    bool contains(int x, int y, int z) const {
        return mask_[(static_cast<size_t>(x) * n_ + y) * n_ + z] != 0;
    }
    bool contains(const Triple& t) const { return contains(t[0], t[1], t[2]); }

    friend bool operator==(const Betweenness& a, const Betweenness& b) {
        return a.n_ == b.n_ && a.triples_ == b.triples_;
    }
    friend bool operator<(const Betweenness& a, const Betweenness& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.triples_ < b.triples_;
    }

private:
    int n_;
    std::vector<Triple> triples_;
    std::vector<uint8_t> mask_;
};

struct Line {
    std::pair<int, int> defining_pair; // ordered (x, y)
    std::vector<int> members;          // sorted, contains x and y
};

struct LineClass {
    std::vector<int> members; // sorted
    bool universal = false;
    std::vector<std::pair<int, int>> defining_pairs; // sorted, every pair mapping here
};

// Distinct lines of a betweenness, deduplicated by member set and sorted by
// member list, so reports are deterministic.
struct LineSet {
    std::vector<LineClass> lines;

    size_t count() const { return lines.size(); }
    bool any_universal() const;
    std::vector<size_t> sizes() const; // sorted ascending
};

struct GeodesicSeq {
    std::vector<int> points;

    friend bool operator==(const GeodesicSeq& a, const GeodesicSeq& b) {
        return a.points == b.points;
    }
    friend bool operator<(const GeodesicSeq& a, const GeodesicSeq& b) {
        return a.points < b.points;
    }
};

// (x,y,z) is a triple iff the points are pairwise distinct and
// dist(x,y) + dist(y,z) = dist(x,z) exactly.
Betweenness betweenness_of(const QuasimetricSpace& s);

// {z : dist(x,y) = dist(x,z) + dist(z,y)}; always contains x and y.
std::vector<int> segment(const QuasimetricSpace& s, int x, int y);

// Line of the ordered pair (x,y) computed from the relation alone:
// {x,y} together with every z for which (z,x,y), (x,z,y) or (x,y,z) holds.
Line line_of(const Betweenness& b, int x, int y);

LineSet lines_of(const Betweenness& b);

bool has_universal_line(const Betweenness& b);

// Unordered pairs {x,y} whose two directed lines have equal member sets.
std::set<std::pair<int, int>> symmetric_pairs(const Betweenness& b);

// True iff every index triple i<j<k of the sequence is a relation triple.
// Throws DuplicatePointError on repeated points.
bool is_geodesic(const Betweenness& b, const std::vector<int>& seq);

// All geodesics of length >= 2 that cannot be extended by prefixing,
// appending, or inserting a point between consecutive elements.
// Enumeration is by depth-first extension; the default cap refuses point
// counts beyond 12 (throws TooLargeError) since the search space is not
// needed above that.
std::vector<GeodesicSeq> maximal_geodesics(const Betweenness& b, int max_points = 12);

// Property (1): a triple forbids the two adjacent transpositions.
struct Property1Violation {
    Triple present;
    Triple forbidden; // also present, but must not be
};
std::vector<Property1Violation> property1_violations(const Betweenness& b);

// Property (2): wxy,wyz both present iff wxz,xyz both present.
struct Property2Violation {
    std::array<int, 4> points; // (w,x,y,z)
    bool forward;              // true: left side holds, right side fails
};
std::vector<Property2Violation> property2_violations(const Betweenness& b);

// The three four-point implications: each maps four antecedent triples to
// four consequents that must also be present.
struct FourPointViolation {
    int rule;                  // 1, 2 or 3
    std::array<int, 4> points; // (w,x,y,z)
    Triple missing;
};
std::vector<FourPointViolation> validate_four_point_implications(const Betweenness& b);

// Restriction of b to a point subset (triples fully inside the subset,
// in the original labels).
std::vector<Triple> restriction(const Betweenness& b, const std::vector<int>& subset);

} // namespace qlines
