#pragma once

#include <string>

#include <json.hpp>

#include "qlines/betweenness.hpp"
#include "qlines/digraph.hpp"
#include "qlines/enumeration.hpp"
#include "qlines/realizability.hpp"

namespace qlines {

using Json = nlohmann::json;

// Digraph JSON: {"n": int, "arcs": [[tail, head, "num/den"], ...]},
// arcs sorted by (tail, head).
Json digraph_to_json(const WeightedDigraph& g);
WeightedDigraph digraph_from_json(const Json& j); // ParseError on bad shape

// Distance-matrix TSV: n rows by n columns of rational tokens.
std::string matrix_to_tsv(const QuasimetricSpace& s);
QuasimetricSpace space_from_tsv(const std::string& text); // validates axioms

Json matrix_to_json(const QuasimetricSpace& s);
QuasimetricSpace space_from_json(const Json& j);

// Betweenness JSON: {"n": int, "triples": [[x,y,z], ...]} sorted lex.
Json betweenness_to_json(const Betweenness& b);
Betweenness betweenness_from_json(const Json& j);

// Lines report: array of {members, universal, defining_pairs}.
Json lines_to_json(const LineSet& ls);

Json geodesics_to_json(const std::vector<GeodesicSeq>& gs);

Json search_report_to_json(const SearchReport& report);
Json construction_census_to_json(const ConstructionCensus& census);

Json certificate_to_json(const RealizabilityCertificate& cert);

// Parses stdin-style input that may be digraph JSON, betweenness JSON, or a
// distance-matrix TSV, by shape.
struct ParsedInput {
    std::optional<WeightedDigraph> digraph;
    std::optional<QuasimetricSpace> space;
    std::optional<Betweenness> betweenness;
};
ParsedInput parse_any_input(const std::string& text);

} // namespace qlines
