#include <doctest.h>

#include "oracles.hpp"
#include "qlines/constructions.hpp"
#include "qlines/enumeration.hpp"
#include "qlines/partitions.hpp"

using namespace qlines;

namespace {

SearchConfig config(int n, int lines, Mode mode) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.target_lines = lines;
    cfg.mode = mode;
    cfg.time_budget_secs = 600;
    return cfg;
}

} // namespace

TEST_CASE("search configs are validated") {
    SearchConfig bad = config(2, 3, Mode::quasimetric);
    CHECK_THROWS_AS(bad.validate(), InvalidArgumentError);
    bad = config(4, 2, Mode::quasimetric);
    CHECK_THROWS_AS(bad.validate(), InvalidArgumentError);
    bad = config(4, 3, Mode::quasimetric);
    bad.jobs = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgumentError);
}

TEST_CASE("three points with three lines carry only the empty relation") {
    const SearchReport report = enumerate_betweennesses(config(3, 3, Mode::quasimetric));
    CHECK(report.complete);
    REQUIRE(report.classes.size() == 1);
    CHECK(report.classes[0].representative.size() == 0);
}

TEST_CASE("four points, three lines: one quasimetric class, no metric class") {
    const SearchReport quasi = enumerate_betweennesses(config(4, 3, Mode::quasimetric));
    CHECK(quasi.complete);
    REQUIRE(quasi.classes.size() == 1);
    const Betweenness expected = expected_betweenness_C(PartitionTriple(2, 1, 1));
    CHECK(betweenness_isomorphic(quasi.classes[0].representative, expected).has_value());
    CHECK(verify_witness(quasi.classes[0].representative, quasi.classes[0].witness));

    const SearchReport metric = enumerate_betweennesses(config(4, 3, Mode::metric));
    CHECK(metric.complete);
    CHECK(metric.classes.empty());
}

TEST_CASE("four points, four lines: exactly the two four-line variants") {
    const SearchReport report = enumerate_betweennesses(config(4, 4, Mode::quasimetric));
    CHECK(report.complete);
    REQUIRE(report.classes.size() == 2);
    const Betweenness d1 = expected_betweenness_D(1, PartitionTriple(1, 1, 1));
    const Betweenness d2 = expected_betweenness_D(2, PartitionTriple(1, 1, 1));
    int matched = 0;
    for (const auto& cls : report.classes) {
        if (betweenness_isomorphic(cls.representative, d1).has_value()) ++matched;
        if (betweenness_isomorphic(cls.representative, d2).has_value()) ++matched;
    }
    CHECK(matched == 2);
}

TEST_CASE("reported classes satisfy the line filters and verify") {
    const SearchReport report = enumerate_betweennesses(config(4, 4, Mode::quasimetric));
    for (const auto& cls : report.classes) {
        CHECK(cls.lines.count() == 4);
        CHECK_FALSE(cls.lines.any_universal());
        CHECK(verify_witness(cls.representative, cls.witness));
        CHECK(cls.lines.count() >= 3); // no-universal floor
    }
}

TEST_CASE("enumeration is deterministic and symmetry pruning changes nothing") {
    const SearchReport a = enumerate_betweennesses(config(4, 3, Mode::quasimetric));
    const SearchReport b = enumerate_betweennesses(config(4, 3, Mode::quasimetric));
    CHECK(a.explored == b.explored);
    REQUIRE(a.classes.size() == b.classes.size());
    for (size_t i = 0; i < a.classes.size(); ++i)
        CHECK(a.classes[i].form.triples == b.classes[i].form.triples);

    SearchConfig unpruned = config(4, 3, Mode::quasimetric);
    unpruned.canonical_only = false;
    const SearchReport c = enumerate_betweennesses(unpruned);
    CHECK(c.complete);
    REQUIRE(c.classes.size() == a.classes.size());
    for (size_t i = 0; i < a.classes.size(); ++i)
        CHECK(c.classes[i].form.triples == a.classes[i].form.triples);
    CHECK(c.explored >= a.explored);
}

TEST_CASE("parallel search finds the same classes") {
    SearchConfig cfg = config(4, 4, Mode::quasimetric);
    cfg.jobs = 2;
    const SearchReport parallel = enumerate_betweennesses(cfg);
    const SearchReport serial = enumerate_betweennesses(config(4, 4, Mode::quasimetric));
    CHECK(parallel.complete);
    REQUIRE(parallel.classes.size() == serial.classes.size());
    for (size_t i = 0; i < serial.classes.size(); ++i)
        CHECK(parallel.classes[i].form.triples == serial.classes[i].form.triples);
}

TEST_CASE("a vanishing budget reports an incomplete search") {
    SearchConfig cfg = config(5, 3, Mode::quasimetric);
    cfg.time_budget_secs = 1e-6;
    const SearchReport report = enumerate_betweennesses(cfg);
    CHECK_FALSE(report.complete);
}

TEST_CASE("construction census counts match the independent oracles") {
    CHECK(classify_constructions(4, Family::C).classes.size() == 1);
    for (int n = 4; n <= 7; ++n)
        CHECK(classify_constructions(n, Family::C).classes.size() ==
              static_cast<size_t>(p3_count(n)));
    // four-line classes: cyclic composition classes for the first variant
    // plus middle-part keyed classes for the second
    for (int n = 4; n <= 7; ++n)
        CHECK(classify_constructions(n, Family::D).classes.size() ==
              static_cast<size_t>(qlines::test::expected_d_class_count(n - 1)));
    CHECK(classify_constructions(5, Family::D).classes.size() == 3);
    CHECK(classify_constructions(6, Family::D).classes.size() == 6);
    CHECK_THROWS_AS(classify_constructions(3, Family::C), InvalidArgumentError);
}

TEST_CASE("census class witnesses verify and multiplicities add up") {
    const ConstructionCensus census = classify_constructions(5, Family::D);
    size_t total = 0;
    for (const auto& cls : census.classes) {
        CHECK(verify_witness(cls.representative, cls.witness));
        total += cls.examples.size();
    }
    CHECK(total == 2 * compositions_three(4).size());
}

TEST_CASE("enumeration at n=4 agrees with the construction censuses") {
    const SearchReport three = enumerate_betweennesses(config(4, 3, Mode::quasimetric));
    const ConstructionCensus cc = classify_constructions(4, Family::C);
    REQUIRE(three.classes.size() == cc.classes.size());
    for (size_t i = 0; i < cc.classes.size(); ++i)
        CHECK(three.classes[i].form.triples == cc.classes[i].form.triples);

    const SearchReport four = enumerate_betweennesses(config(4, 4, Mode::quasimetric));
    const ConstructionCensus dd = classify_constructions(4, Family::D);
    REQUIRE(four.classes.size() == dd.classes.size());
    for (size_t i = 0; i < dd.classes.size(); ++i)
        CHECK(four.classes[i].form.triples == dd.classes[i].form.triples);
}
