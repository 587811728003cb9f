#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlines/isomorphism.hpp"
#include "qlines/realizability.hpp"

namespace qlines {

struct SearchConfig {
    int n = 4;
    std::optional<int> target_lines;  // unset: any line count
    bool forbid_universal = true;
    Mode mode = Mode::quasimetric;
    double time_budget_secs = 1800.0; // wall clock for the whole search
    bool canonical_only = true;       // enables symmetry pruning during search
    bool four_point_rules = true;     // also propagate the four-point implications
    int jobs = 1;

    void validate() const; // InvalidArgumentError on bad combinations
};

struct FoundClass {
    CanonicalForm form;
    Betweenness representative;   // the canonical labeling
    QuasimetricSpace witness;     // realizes the representative exactly
    LineSet lines;                // of the representative
};

struct SearchReport {
    std::vector<FoundClass> classes; // sorted by canonical form
    uint64_t explored = 0;           // decision nodes visited
    bool complete = false;           // search provably exhausted within budget
};

// Exhaustive DFS over ordered triples, each decided in or out, with unit
// propagation of properties (1) and (2) (and optionally the four-point
// implications, which hold in every quasimetric space), universality pruning
// on partial relations, symmetry pruning of relabel-dominated branches, and
// a final exact-LP realizability filter per isomorphism class.
SearchReport enumerate_betweennesses(const SearchConfig& cfg);

enum class Family { C, D };

std::optional<Family> parse_family(const std::string& s);

// Builds every parameterized construction on n points for the family
// (both variants for D), computes betweennesses through shortest paths, and
// returns one entry per canonical class with multiplicities recorded in
// `examples`.
struct ConstructionClass {
    CanonicalForm form;
    Betweenness representative;
    QuasimetricSpace witness;
    std::vector<std::string> examples; // e.g. "C(2,1,1)", "D2(1,1,2)"
};

struct ConstructionCensus {
    int n = 0;
    Family family = Family::C;
    std::vector<ConstructionClass> classes; // sorted by canonical form
};

ConstructionCensus classify_constructions(int n, Family family);

} // namespace qlines
