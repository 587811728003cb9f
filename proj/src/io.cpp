#include "qlines/io.hpp"

#include <sstream>

#include "qlines/errors.hpp"

namespace qlines {

namespace {

int require_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("expected integer for ") + what);
    return j.get<int>();
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected rational as integer or \"num/den\" string");
}

} // namespace

Json digraph_to_json(const WeightedDigraph& g) {
    Json arcs = Json::array();
    for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head, format_rational(a.weight)});
    return Json{{"n", g.point_count()}, {"arcs", std::move(arcs)}};
}

WeightedDigraph digraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
        throw ParseError("digraph JSON needs {\"n\", \"arcs\"}");
    WeightedDigraph g(require_int(j.at("n"), "n"));
    if (!j.at("arcs").is_array()) throw ParseError("\"arcs\" must be an array");
    try {
        for (const Json& arc : j.at("arcs")) {
            if (!arc.is_array() || arc.size() != 3)
                throw ParseError("each arc must be [tail, head, weight]");
            g.add_arc(require_int(arc[0], "arc tail"), require_int(arc[1], "arc head"),
                      rational_from_json(arc[2]));
        }
    } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what());
    }
    return g;
}

std::string matrix_to_tsv(const QuasimetricSpace& s) {
    std::ostringstream os;
    for (int i = 0; i < s.point_count(); ++i) {
        for (int j = 0; j < s.point_count(); ++j) {
            if (j) os << '\t';
            os << format_rational(s.dist(i, j));
        }
        os << '\n';
    }
    return os.str();
}

QuasimetricSpace space_from_tsv(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<Rational> row;
        std::istringstream ls(line);
        std::string token;
        while (ls >> token) row.push_back(parse_rational(token));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty distance matrix");
    return QuasimetricSpace::from_matrix(std::move(rows));
}

Json matrix_to_json(const QuasimetricSpace& s) {
    Json rows = Json::array();
    for (int i = 0; i < s.point_count(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < s.point_count(); ++j) row.push_back(format_rational(s.dist(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QuasimetricSpace space_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("distance matrix JSON must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const Json& row : j) {
        if (!row.is_array()) throw ParseError("matrix rows must be arrays");
        std::vector<Rational> out;
        for (const Json& cell : row) out.push_back(rational_from_json(cell));
        rows.push_back(std::move(out));
    }
    return QuasimetricSpace::from_matrix(std::move(rows));
}

Json betweenness_to_json(const Betweenness& b) {
    Json triples = Json::array();
    for (const Triple& t : b.triples()) triples.push_back({t[0], t[1], t[2]});
    return Json{{"n", b.point_count()}, {"triples", std::move(triples)}};
}

Betweenness betweenness_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("triples"))
        throw ParseError("betweenness JSON needs {\"n\", \"triples\"}");
    if (!j.at("triples").is_array()) throw ParseError("\"triples\" must be an array");
    std::vector<Triple> triples;
    for (const Json& t : j.at("triples")) {
        if (!t.is_array() || t.size() != 3) throw ParseError("each triple must be [x, y, z]");
        triples.push_back(
            {require_int(t[0], "triple"), require_int(t[1], "triple"), require_int(t[2], "triple")});
    }
    try {
        return Betweenness(require_int(j.at("n"), "n"), std::move(triples));
    } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what());
    }
}

Json lines_to_json(const LineSet& ls) {
    Json out = Json::array();
    for (const LineClass& lc : ls.lines) {
        Json pairs = Json::array();
        for (const auto& [a, b] : lc.defining_pairs) pairs.push_back({a, b});
        out.push_back({{"members", lc.members},
                       {"universal", lc.universal},
                       {"defining_pairs", std::move(pairs)}});
    }
    return out;
}

Json geodesics_to_json(const std::vector<GeodesicSeq>& gs) {
    Json out = Json::array();
    for (const GeodesicSeq& g : gs) out.push_back(g.points);
    return out;
}

Json search_report_to_json(const SearchReport& report) {
    Json classes = Json::array();
    for (const FoundClass& c : report.classes) {
        Json triples = Json::array();
        for (const Triple& t : c.form.triples) triples.push_back({t[0], t[1], t[2]});
        classes.push_back({{"n", c.representative.point_count()},
                           {"triples", std::move(triples)},
                           {"witness", matrix_to_json(c.witness)},
                           {"lines", lines_to_json(c.lines)}});
    }
    return Json{{"classes", std::move(classes)},
                {"class_count", report.classes.size()},
                {"explored", report.explored},
                {"complete", report.complete}};
}

Json construction_census_to_json(const ConstructionCensus& census) {
    Json classes = Json::array();
    for (const ConstructionClass& c : census.classes) {
        Json triples = Json::array();
        for (const Triple& t : c.form.triples) triples.push_back({t[0], t[1], t[2]});
        classes.push_back({{"n", census.n},
                           {"triples", std::move(triples)},
                           {"examples", c.examples},
                           {"count", c.examples.size()}});
    }
    return Json{{"n", census.n},
                {"family", census.family == Family::C ? "C" : "D"},
                {"classes", std::move(classes)},
                {"class_count", census.classes.size()}};
}

Json certificate_to_json(const RealizabilityCertificate& cert) {
    Json out{{"verdict", cert.realizable() ? "realizable" : "infeasible"}};
    if (cert.witness) out["witness"] = matrix_to_json(*cert.witness);
    return out;
}

ParsedInput parse_any_input(const std::string& text) {
    ParsedInput out;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input");
    if (text[first] == '{' || text[first] == '[') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed JSON input");
        if (j.is_array()) {
            out.space = space_from_json(j);
            return out;
        }
        if (j.contains("arcs")) {
            out.digraph = digraph_from_json(j);
            return out;
        }
        if (j.contains("triples")) {
            out.betweenness = betweenness_from_json(j);
            return out;
        }
        throw ParseError("JSON input is neither a digraph, a betweenness, nor a matrix");
    }
    out.space = space_from_tsv(text);
    return out;
}

} // namespace qlines
