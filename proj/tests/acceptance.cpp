// Acceptance suite: one line per criterion, exit code = number of failures.
// Heavier grids and the full randomized property suites live here; the
// doctest binary covers the same ground at lighter settings.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qlines/constructions.hpp"
#include "qlines/enumeration.hpp"
#include "qlines/io.hpp"
#include "qlines/partitions.hpp"

using namespace qlines;
using namespace qlines::test;

namespace {

int failures = 0;

void criterion(int index, const std::string& name, bool pass, const std::string& detail,
               double seconds) {
    std::printf("[%s] criterion %d: %s — %s (%.1fs)\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
}

template <typename F>
void timed(int index, const std::string& name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        std::tie(pass, detail) = body();
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    criterion(index, name, pass, detail, secs);
}

double n5_budget() {
    if (const char* env = std::getenv("QLINES_ACCEPT_N5_BUDGET")) return std::atof(env);
    return 60.0;
}

std::vector<size_t> sorted_sizes(std::initializer_list<int> sizes) {
    std::vector<size_t> out;
    for (int s : sizes) out.push_back(static_cast<size_t>(s));
    std::sort(out.begin(), out.end());
    return out;
}

Betweenness computed_from(const WeightedDigraph& g) {
    return betweenness_of(shortest_path_space(g));
}

SearchReport run_enum(int n, int lines, Mode mode, double budget) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.target_lines = lines;
    cfg.mode = mode;
    cfg.time_budget_secs = budget;
    return enumerate_betweennesses(cfg);
}

std::pair<bool, std::string> criterion1() {
    int checked = 0;
    for (int n = 3; n <= 9; ++n)
        for (const PartitionTriple& t : compositions_three(n)) {
            const LineSet ls = lines_of(computed_from(construct_C(t)));
            const bool ok = ls.count() == 3 && !ls.any_universal() &&
                            ls.sizes() == sorted_sizes({t.p + t.q, t.p + t.r, t.q + t.r});
            if (!ok)
                return {false, "failed at (" + std::to_string(t.p) + "," + std::to_string(t.q) +
                                   "," + std::to_string(t.r) + ")"};
            ++checked;
        }
    return {true, std::to_string(checked) + " parameter triples, exact line sets"};
}

std::pair<bool, std::string> criterion2() {
    int checked = 0;
    for (int n = 3; n <= 8; ++n)
        for (const PartitionTriple& t : compositions_three(n)) {
            if (!(computed_from(construct_C(t)) == expected_betweenness_C(t)))
                return {false, "mismatch at (" + std::to_string(t.p) + "," + std::to_string(t.q) +
                                   "," + std::to_string(t.r) + ")"};
            ++checked;
        }
    return {true, std::to_string(checked) + " closed-form relations equal shortest-path relations"};
}

std::pair<bool, std::string> criterion3() {
    int checked = 0;
    for (int sum = 3; sum + 1 <= 9; ++sum)
        for (const PartitionTriple& t : compositions_three(sum)) {
            const std::string at = "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," +
                                   std::to_string(t.r) + ")";
            const Betweenness b1 = computed_from(construct_D1(t));
            const Betweenness b2 = computed_from(construct_D2(t));
            if (!(b1 == expected_betweenness_D(1, t))) return {false, "D1 closed form " + at};
            if (!(b2 == expected_betweenness_D(2, t))) return {false, "D2 closed form " + at};
            const auto expect =
                sorted_sizes({t.sum(), t.p + 1, t.q + 1, t.r + 1});
            for (const Betweenness* b : {&b1, &b2}) {
                const LineSet ls = lines_of(*b);
                if (ls.count() != 4 || ls.any_universal() || ls.sizes() != expect)
                    return {false, "line set " + at};
            }
            if (static_cast<long long>(b1.size()) - static_cast<long long>(b2.size()) !=
                static_cast<long long>(t.p) * t.q * t.r)
                return {false, "cardinality gap " + at};
            ++checked;
        }
    return {true, std::to_string(checked) +
                      " parameter triples, both variants, |B1|-|B2| = pqr throughout"};
}

std::pair<bool, std::string> criterion4() {
    std::ostringstream detail;
    bool pass = true;
    for (int n = 4; n <= 8; ++n) {
        const size_t got = classify_constructions(n, Family::C).classes.size();
        if (got != static_cast<size_t>(p3_count(n)))
            return {false, "C census at n=" + std::to_string(n) + ": " + std::to_string(got) +
                               " classes, expected p3=" + std::to_string(p3_count(n))};
    }
    detail << "C censuses match p3(4..8) =";
    for (int n = 4; n <= 8; ++n) detail << " " << p3_count(n);
    detail << "; D censuses:";
    for (int n = 5; n <= 8; ++n) {
        const size_t got = classify_constructions(n, Family::D).classes.size();
        detail << " n=" << n << ":" << got << (got == static_cast<size_t>(2 * p3_count(n - 1))
                                                   ? "=2*p3"
                                                   : "!=2*p3=" + std::to_string(2 * p3_count(n - 1)));
        if (got != static_cast<size_t>(2 * p3_count(n - 1))) pass = false;
        // independent combinatorial count: the first variant is invariant
        // under cyclic part rotations only, the second distinguishes its
        // middle part (e.g. D2(1,2,1) is not isomorphic to D2(2,1,1))
        if (got != static_cast<size_t>(expected_d_class_count(n - 1)))
            return {false, "D census at n=" + std::to_string(n) +
                               " disagrees with the structural class count " +
                               std::to_string(expected_d_class_count(n - 1))};
    }
    if (!pass)
        detail << "; the four-line families realize more classes than 2*p3(n-1): the stated "
                  "count holds only as a lower bound (every census verified against the "
                  "independent structural count, and the complete n=5 search below confirms "
                  "all classes)";
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion5() {
    const SearchReport quasi = run_enum(4, 3, Mode::quasimetric, 600);
    if (!quasi.complete) return {false, "quasimetric search did not complete"};
    if (quasi.classes.size() != 1)
        return {false, "quasimetric classes: " + std::to_string(quasi.classes.size())};
    if (!betweenness_isomorphic(quasi.classes[0].representative,
                                expected_betweenness_C(PartitionTriple(2, 1, 1)))
             .has_value())
        return {false, "class is not isomorphic to C(2,1,1)"};
    const SearchReport metric = run_enum(4, 3, Mode::metric, 600);
    if (!metric.complete) return {false, "metric search did not complete"};
    if (!metric.classes.empty())
        return {false, "metric classes: " + std::to_string(metric.classes.size())};
    return {true, "complete searches; 1 quasimetric class = C(2,1,1), 0 metric classes (explored " +
                      std::to_string(quasi.explored) + " nodes)"};
}

std::pair<bool, std::string> criterion6() {
    const SearchReport four = run_enum(4, 4, Mode::quasimetric, 600);
    if (!four.complete) return {false, "n=4 search did not complete"};
    if (four.classes.size() != 2)
        return {false, "n=4 four-line classes: " + std::to_string(four.classes.size())};
    const Betweenness d1 = expected_betweenness_D(1, PartitionTriple(1, 1, 1));
    const Betweenness d2 = expected_betweenness_D(2, PartitionTriple(1, 1, 1));
    bool saw1 = false, saw2 = false;
    for (const auto& cls : four.classes) {
        if (betweenness_isomorphic(cls.representative, d1)) saw1 = true;
        if (betweenness_isomorphic(cls.representative, d2)) saw2 = true;
    }
    if (!saw1 || !saw2) return {false, "n=4 classes are not {D1(1,1,1), D2(1,1,1)}"};

    // n=5: budgeted runs; every discovered class must be a construction class
    std::ostringstream detail;
    detail << "n=4 complete: {D1,D2}(1,1,1)";
    for (int lines = 3; lines <= 4; ++lines) {
        const SearchReport r = run_enum(5, lines, Mode::quasimetric, n5_budget());
        const ConstructionCensus cc =
            classify_constructions(5, lines == 3 ? Family::C : Family::D);
        for (const auto& cls : r.classes) {
            bool matched = false;
            for (const auto& known : cc.classes)
                if (cls.form.triples == known.form.triples) matched = true;
            if (!matched)
                return {false, "n=5 target " + std::to_string(lines) +
                                   ": found a class outside the construction census"};
        }
        // when the search finishes it must have found every census class
        if (r.complete && r.classes.size() != cc.classes.size())
            return {false, "n=5 target " + std::to_string(lines) + ": complete search found " +
                               std::to_string(r.classes.size()) + " classes, census has " +
                               std::to_string(cc.classes.size())};
        detail << "; n=5/" << lines << " lines: " << r.classes.size() << "/" << cc.classes.size()
               << " classes" << (r.complete ? " (complete)" : " (budgeted)");
    }
    return {true, detail.str()};
}

std::pair<bool, std::string> criterion7() {
    int infeasible_checked = 0, realizable_checked = 0;
    // metric infeasibility on the ranges the paper claims: C for n >= 4,
    // D for n >= 5, plus D1(1,1,1) which is infeasible as well
    for (int n = 4; n <= 6; ++n)
        for (const PartitionTriple& t : compositions_three(n))
            if (realize(expected_betweenness_C(t), Mode::metric).realizable())
                return {false, "C metric-realizable at sum " + std::to_string(n)};
            else
                ++infeasible_checked;
    for (int sum = 3; sum + 1 <= 6; ++sum)
        for (const PartitionTriple& t : compositions_three(sum))
            for (int variant = 1; variant <= 2; ++variant) {
                if (variant == 2 && sum == 3) continue; // D2(1,1,1): see below
                if (realize(expected_betweenness_D(variant, t), Mode::metric).realizable())
                    return {false, "D" + std::to_string(variant) + " metric-realizable at sum " +
                                       std::to_string(sum)};
                ++infeasible_checked;
            }
    // quasimetric realizability with verifying witnesses on the full grid
    auto check_quasi = [&](const Betweenness& b) {
        const auto cert = realize(b, Mode::quasimetric);
        if (!cert.realizable() || !verify_witness(b, *cert.witness)) return false;
        ++realizable_checked;
        return true;
    };
    for (int n = 3; n <= 6; ++n)
        for (const PartitionTriple& t : compositions_three(n))
            if (!check_quasi(expected_betweenness_C(t)))
                return {false, "C quasimetric realization failed at sum " + std::to_string(n)};
    for (int sum = 3; sum + 1 <= 6; ++sum)
        for (const PartitionTriple& t : compositions_three(sum))
            for (int variant = 1; variant <= 2; ++variant)
                if (!check_quasi(expected_betweenness_D(variant, t)))
                    return {false, "D quasimetric realization failed at sum " +
                                       std::to_string(sum)};
    // boundary cases outside the paper's claim, reported for transparency:
    // the empty relation C(1,1,1) and D2(1,1,1) are metric-realizable
    const bool c111_metric =
        realize(expected_betweenness_C(PartitionTriple(1, 1, 1)), Mode::metric).realizable();
    const bool d2_metric =
        realize(expected_betweenness_D(2, PartitionTriple(1, 1, 1)), Mode::metric).realizable();
    return {true, std::to_string(infeasible_checked) + " metric-infeasible, " +
                      std::to_string(realizable_checked) +
                      " quasimetric-realizable with verified witnesses; boundary: C(1,1,1) metric=" +
                      (c111_metric ? "realizable" : "infeasible") + ", D2(1,1,1) metric=" +
                      (d2_metric ? "realizable" : "infeasible") + " (n<5 cases, outside the claim)"};
}

std::pair<bool, std::string> criterion8() {
    std::mt19937_64 rng(0x51DEC0DE);
    std::ostringstream detail;

    // validators and the four-point implications over random spaces
    for (int i = 0; i < 1000; ++i) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const QuasimetricSpace s = (i % 2) ? random_quasimetric(n, rng) : random_metric(n, rng);
        const Betweenness b = betweenness_of(s);
        if (!property1_violations(b).empty()) return {false, "property (1) violated"};
        if (!property2_violations(b).empty()) return {false, "property (2) violated"};
        if (!validate_four_point_implications(b).empty())
            return {false, "four-point implication violated"};
        const LineSet ls = lines_of(b);
        if (!ls.any_universal() && ls.count() < 3)
            return {false, "fewer than 3 lines without a universal line"};
        // distance-based and relation-based lines must agree
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                std::vector<int> rho_line;
                for (int z = 0; z < n; ++z) {
                    const auto in = [&](int a, int mid, int bb) {
                        return s.dist(a, mid) + s.dist(mid, bb) == s.dist(a, bb);
                    };
                    if (z == x || z == y || in(z, x, y) || in(x, z, y) || in(x, y, z))
                        rho_line.push_back(z);
                }
                if (line_of(b, x, y).members != rho_line)
                    return {false, "line definitions disagree"};
            }
    }
    detail << "validators+lines on 1000 spaces";

    // exhaustive small validator cases: the construction grids up to n=6
    for (int n = 3; n <= 6; ++n)
        for (const PartitionTriple& t : compositions_three(n)) {
            if (!property2_violations(expected_betweenness_C(t)).empty())
                return {false, "property (2) fails on a C relation"};
            if (!validate_four_point_implications(expected_betweenness_C(t)).empty())
                return {false, "four-point fails on a C relation"};
        }

    // isomorphism decisions against the all-permutations oracle
    for (int i = 0; i < 1000; ++i) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Betweenness a = betweenness_of(random_quasimetric(n, rng));
        Betweenness b = a;
        if (i % 2) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            b = relabel(a, perm);
        } else {
            b = betweenness_of(random_quasimetric(n, rng));
        }
        const auto fast = betweenness_isomorphic(a, b);
        const auto slow = brute_force_isomorphism(a, b);
        if (fast.has_value() != slow.has_value()) return {false, "isomorphism verdict mismatch"};
        if (fast) {
            for (const Triple& t : a.triples())
                if (!b.contains((*fast)[t[0]], (*fast)[t[1]], (*fast)[t[2]]))
                    return {false, "returned bijection does not verify"};
        }
    }
    detail << "; iso vs oracle on 1000 pairs";

    // realizability against the exhaustive integer-matrix oracle
    for (int n = 3; n <= 4; ++n) {
        const auto masks = realizable_betweennesses_by_matrix_search(n, 6, false);
        std::set<std::vector<Triple>> classes;
        for (uint64_t mask : masks)
            classes.insert(canonical_form(betweenness_from_bitmask(n, mask)).triples);
        for (const auto& triples : classes) {
            const Betweenness b(n, triples);
            const auto cert = realize(b, Mode::quasimetric);
            if (!cert.realizable())
                return {false, "oracle-realizable relation reported infeasible at n=" +
                                   std::to_string(n)};
            if (!verify_witness(b, *cert.witness)) return {false, "witness failed verification"};
            // metric realizability must imply quasimetric realizability
            if (realize(b, Mode::metric).realizable() && !cert.realizable())
                return {false, "metric-realizable but quasimetric-infeasible"};
        }
        detail << "; n=" << n << " oracle: " << masks.size() << " relations in " << classes.size()
               << " classes all realize";
    }

    // Chen-Chvatal for metric spaces at n <= 5: no metric class with fewer
    // lines than points (n=4 complete; n=5 within budget)
    if (!run_enum(4, 3, Mode::metric, 600).classes.empty())
        return {false, "metric class with 3 lines on 4 points"};
    for (int lines = 3; lines <= 4; ++lines)
        if (!run_enum(5, lines, Mode::metric, n5_budget() / 2).classes.empty())
            return {false, "metric class with " + std::to_string(lines) + " lines on 5 points"};
    detail << "; no metric counterexamples at n<=5";

    return {true, detail.str()};
}

} // namespace

int main() {
    std::printf("acceptance suite: quasimetric line structures\n");
    timed(1, "three-line existence over p+q+r <= 9", criterion1);
    timed(2, "closed-form equivalence over p+q+r <= 8", criterion2);
    timed(3, "four-line existence over p+q+r+1 <= 9", criterion3);
    timed(4, "classification counts for C (n=4..8) and D (n=5..8)", criterion4);
    timed(5, "uniqueness at n=4 with three lines", criterion5);
    timed(6, "four lines at n=4 complete, n=5 within budget", criterion6);
    timed(7, "non-metricity and quasimetric realizability up to n=6", criterion7);
    timed(8, "property suites (validators, oracles, 1000 randomized cases each)", criterion8);
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
