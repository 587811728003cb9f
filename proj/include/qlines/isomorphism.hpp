#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qlines/betweenness.hpp"

namespace qlines {

// Canonical forms are supported up to this point count.
inline constexpr int kCanonicalFormBound = 10;

struct CanonicalForm {
    int n = 0;
    std::vector<Triple> triples; // lexicographically minimal sorted list over relabelings
    std::vector<int> witness;    // minimizing bijection, witness[old] = new

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.triples == b.triples;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.triples < b.triples;
    }
};

// A bijection phi with (x,y,z) in a iff (phi x, phi y, phi z) in b, if one
// exists. Backtracking over point assignments, pruned by position profiles
// (appearance counts per coordinate) and line-membership degree sequences.
// Every returned bijection is re-verified triple by triple before returning.
// Throws SizeMismatchError when the point counts differ.
std::optional<std::vector<int>> betweenness_isomorphic(const Betweenness& a,
                                                       const Betweenness& b);

// Deterministic minimal form; equal forms iff isomorphic.
// Throws TooLargeError beyond kCanonicalFormBound.
CanonicalForm canonical_form(const Betweenness& b);

Betweenness relabel(const Betweenness& b, const std::vector<int>& perm);

// Class counts keyed by canonical form. All inputs must share one point
// count (SizeMismatchError otherwise).
std::map<CanonicalForm, int> census(const std::vector<Betweenness>& bs);

} // namespace qlines
