#pragma once

#include "qlines/betweenness.hpp"
#include "qlines/digraph.hpp"

namespace qlines {

// A partition of the point count into three positive parts. For the
// three-line family n = p+q+r; for the four-line families n = p+q+r+1.
struct PartitionTriple {
    int p = 1;
    int q = 1;
    int r = 1;

    PartitionTriple(int p_, int q_, int r_);

    int sum() const { return p + q + r; }
};

// Weight constants actually used by the generators. Each is the least
// integer for which the produced distances realize the closed-form relation
// (verified exhaustively by the test suite), so serialized goldens are stable.
long long weight_constant_C(const PartitionTriple& t);  // max{p+q, p+r, q+r} - 1
long long weight_constant_D1(const PartitionTriple& t); // max{floor((p+q+r-3)/2)+1, p, q, r}
long long weight_constant_D2(const PartitionTriple& t); // p+q+r-1

// Three bidirected unit paths X, Y, Z joined by two directed triangles of
// heavy arcs (x1,z1),(z1,yq),(yq,x1) and (xp,y1),(y1,zr),(zr,xp).
// Point order: x1..xp, y1..yq, z1..zr. The induced space has exactly three
// lines of sizes p+q, p+r, q+r and no universal line.
WeightedDigraph construct_C(const PartitionTriple& t);

// Four-line generator, first variant: hub point u joined to each path by
// arcs of weight 2c, plus the cyclic arcs (xp,y1),(yq,z1),(zr,x1) of weight
// c. Point order: x's, y's, z's, then u.
WeightedDigraph construct_D1(const PartitionTriple& t);

// Four-line generator, second variant: same hub shape but with the arc set
// (xp,y1),(yq,z1),(zr,y1),(yq,x1) and piecewise weights
// (xp,y1)=p, (zr,y1)=r, (yq,x1)=q+p, (yq,z1)=q+r, (u,yq)=p+r,
// remaining heavy arcs = c.
WeightedDigraph construct_D2(const PartitionTriple& t);

// Closed-form evaluation of the fifteen displayed families for the
// three-line relation; computed by pure set-building over index ranges,
// fully independent of any shortest-path computation.
Betweenness expected_betweenness_C(const PartitionTriple& t);

// Closed-form four-line relations. variant selects the extra cross families:
// 1 gives XYZ, YZX, ZXY; 2 gives XYZ, ZYX.
Betweenness expected_betweenness_D(int variant, const PartitionTriple& t);

} // namespace qlines
