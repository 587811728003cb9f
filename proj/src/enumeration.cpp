#include "qlines/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "qlines/errors.hpp"
#include "qlines/partitions.hpp"

namespace qlines {

void SearchConfig::validate() const {
    if (n < 3) throw InvalidArgumentError("enumeration needs at least 3 points");
    if (target_lines && forbid_universal && *target_lines < 3)
        throw InvalidArgumentError(
            "spaces on >= 3 points with no universal line have at least 3 lines");
    if (target_lines && *target_lines < 1) throw InvalidArgumentError("target_lines must be >= 1");
    if (time_budget_secs <= 0) throw InvalidArgumentError("time budget must be positive");
    if (jobs < 1) throw InvalidArgumentError("jobs must be >= 1");
}

std::optional<Family> parse_family(const std::string& s) {
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    return std::nullopt;
}

namespace {

constexpr int8_t kUndecided = -1;
constexpr int8_t kOut = 0;
constexpr int8_t kIn = 1;

inline int pos_lit(int var) { return 2 * var; }     // satisfied when var is in
inline int neg_lit(int var) { return 2 * var + 1; } // satisfied when var is out

struct Clause {
    std::vector<int> lits;
    int sat = 0;
    int fals = 0;
};

// Shared, immutable description of the constraint system and symmetry maps.
struct Problem {
    SearchConfig cfg;
    int n = 0;
    int num_vars = 0;
    std::vector<Triple> var_triple;
    std::vector<int> triple_var; // n^3, -1 on degenerate cells
    std::vector<std::vector<int>> base_clauses;
    std::vector<std::vector<int>> perm_var_map; // image var of each var under each relabeling

    int var_of(int x, int y, int z) const {
        return triple_var[(static_cast<size_t>(x) * n + y) * n + z];
    }
};

Problem build_problem(const SearchConfig& cfg) {
    Problem p;
    p.cfg = cfg;
    p.n = cfg.n;
    const int n = cfg.n;
    p.triple_var.assign(static_cast<size_t>(n) * n * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                p.triple_var[(static_cast<size_t>(x) * n + y) * n + z] = p.num_vars++;
                p.var_triple.push_back({x, y, z});
            }

    std::set<std::vector<int>> dedup;
    auto add_clause = [&](std::vector<int> lits) {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        if (dedup.insert(lits).second) p.base_clauses.push_back(std::move(lits));
    };

    // property (1): a triple excludes its two adjacent transpositions
    for (int v = 0; v < p.num_vars; ++v) {
        const auto [x, y, z] = p.var_triple[v];
        add_clause({neg_lit(v), neg_lit(p.var_of(y, x, z))});
        add_clause({neg_lit(v), neg_lit(p.var_of(x, z, y))});
    }
    // property (2): (wxy and wyz) iff (wxz and xyz)
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (w == x || w == y || w == z || x == y || x == z || y == z) continue;
                    const int A = p.var_of(w, x, y), B = p.var_of(w, y, z);
                    const int C = p.var_of(w, x, z), D = p.var_of(x, y, z);
                    add_clause({neg_lit(A), neg_lit(B), pos_lit(C)});
                    add_clause({neg_lit(A), neg_lit(B), pos_lit(D)});
                    add_clause({neg_lit(C), neg_lit(D), pos_lit(A)});
                    add_clause({neg_lit(C), neg_lit(D), pos_lit(B)});
                }
    // four-point implications; they hold in every quasimetric space, so
    // pruning by them never loses a realizable relation
    if (cfg.four_point_rules) {
        static constexpr std::array<std::array<Triple, 8>, 3> rules = {{
            {{{0, 1, 2}, {2, 0, 3}, {3, 2, 1}, {1, 3, 0},
              {0, 3, 2}, {2, 1, 3}, {3, 0, 1}, {1, 2, 0}}},
            {{{0, 1, 2}, {2, 3, 1}, {1, 0, 3}, {3, 2, 0},
              {0, 3, 2}, {2, 0, 1}, {1, 2, 3}, {3, 1, 0}}},
            {{{0, 1, 2}, {2, 3, 0}, {1, 0, 3}, {3, 2, 1},
              {0, 3, 2}, {2, 1, 0}, {1, 2, 3}, {3, 0, 1}}},
        }};
        std::array<int, 4> pts{};
        for (pts[0] = 0; pts[0] < n; ++pts[0])
            for (pts[1] = 0; pts[1] < n; ++pts[1])
                for (pts[2] = 0; pts[2] < n; ++pts[2])
                    for (pts[3] = 0; pts[3] < n; ++pts[3]) {
                        if (pts[0] == pts[1] || pts[0] == pts[2] || pts[0] == pts[3] ||
                            pts[1] == pts[2] || pts[1] == pts[3] || pts[2] == pts[3])
                            continue;
                        for (const auto& rule : rules) {
                            auto inst = [&](const Triple& ix) {
                                return p.var_of(pts[ix[0]], pts[ix[1]], pts[ix[2]]);
                            };
                            for (int c = 4; c < 8; ++c)
                                add_clause({neg_lit(inst(rule[0])), neg_lit(inst(rule[1])),
                                            neg_lit(inst(rule[2])), neg_lit(inst(rule[3])),
                                            pos_lit(inst(rule[c]))});
                        }
                    }
    }

    if (cfg.canonical_only) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<int> vmap(p.num_vars);
            for (int v = 0; v < p.num_vars; ++v) {
                const auto [x, y, z] = p.var_triple[v];
                vmap[v] = p.var_of(perm[x], perm[y], perm[z]);
            }
            p.perm_var_map.push_back(std::move(vmap));
        }
    }
    return p;
}

struct LeafSink {
    std::mutex mu;
    std::map<std::vector<Triple>, bool> seen; // canonical triples -> realizable
    std::vector<FoundClass> classes;
};

// One DFS worker over the shared problem. All state is per-instance, so
// engines can be copied to split the search.
struct Engine {
    const Problem* prob;
    std::vector<Clause> clauses;
    std::vector<std::vector<int>> occur; // literal -> clause ids
    std::vector<int8_t> assign;
    std::vector<int> trail;
    std::vector<std::pair<int, int>> member_trail; // (pair slot, point bit)
    std::vector<uint32_t> pair_mask;
    std::vector<int> pair_count;
    uint64_t explored = 0;
    bool aborted = false;
    std::chrono::steady_clock::time_point deadline;
    LeafSink* sink = nullptr;

    explicit Engine(const Problem& p) : prob(&p) {
        const int n = p.n;
        clauses.reserve(p.base_clauses.size());
        occur.assign(2 * static_cast<size_t>(p.num_vars), {});
        for (const auto& lits : p.base_clauses) {
            const int id = static_cast<int>(clauses.size());
            clauses.push_back({lits, 0, 0});
            for (int lit : lits) occur[lit].push_back(id);
        }
        assign.assign(p.num_vars, kUndecided);
        pair_mask.assign(static_cast<size_t>(n) * n, 0);
        pair_count.assign(static_cast<size_t>(n) * n, 0);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                pair_mask[x * n + y] = (1u << x) | (1u << y);
                pair_count[x * n + y] = 2;
            }
    }

    bool add_member(int a, int b, int point) {
        const int slot = a * prob->n + b;
        const uint32_t bit = 1u << point;
        if (pair_mask[slot] & bit) return true;
        pair_mask[slot] |= bit;
        pair_count[slot]++;
        member_trail.push_back({slot, point});
        return !(prob->cfg.forbid_universal && pair_count[slot] == prob->n);
    }

    // Assigns and propagates; false on conflict. Counter updates for each
    // assigned variable complete before any conflict is reported, so the
    // caller's rollback over the trail marks is always exact.
    bool assign_and_propagate(int var, int8_t val) {
        std::vector<std::pair<int, int8_t>> queue{{var, val}};
        while (!queue.empty()) {
            auto [v, value] = queue.back();
            queue.pop_back();
            if (assign[v] != kUndecided) {
                if (assign[v] != value) return false;
                continue;
            }
            assign[v] = value;
            trail.push_back(v);
            bool ok = true;
            if (value == kIn) {
                const auto [x, y, z] = prob->var_triple[v];
                // (x,y,z) puts x on line(y,z), y on line(x,z), z on line(x,y)
                ok &= add_member(y, z, x);
                ok &= add_member(x, z, y);
                ok &= add_member(x, y, z);
            }
            const int true_lit = value == kIn ? pos_lit(v) : neg_lit(v);
            const int false_lit = value == kIn ? neg_lit(v) : pos_lit(v);
            for (int cid : occur[true_lit]) clauses[cid].sat++;
            for (int cid : occur[false_lit]) {
                Clause& c = clauses[cid];
                c.fals++;
                if (c.sat > 0 || !ok) continue;
                const int undec = static_cast<int>(c.lits.size()) - c.fals;
                if (undec == 0) ok = false;
                if (undec == 1) {
                    for (int lit : c.lits) {
                        const int lv = lit / 2;
                        if (assign[lv] != kUndecided) continue;
                        queue.push_back({lv, (lit & 1) == 0 ? kIn : kOut});
                        break;
                    }
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    void rollback(size_t trail_mark, size_t member_mark) {
        while (trail.size() > trail_mark) {
            const int v = trail.back();
            trail.pop_back();
            const int8_t value = assign[v];
            const int true_lit = value == kIn ? pos_lit(v) : neg_lit(v);
            const int false_lit = value == kIn ? neg_lit(v) : pos_lit(v);
            for (int cid : occur[true_lit]) clauses[cid].sat--;
            for (int cid : occur[false_lit]) clauses[cid].fals--;
            assign[v] = kUndecided;
        }
        while (member_trail.size() > member_mark) {
            auto [slot, point] = member_trail.back();
            member_trail.pop_back();
            pair_mask[slot] &= ~(1u << point);
            pair_count[slot]--;
        }
    }

    int lowest_undecided() const {
        for (int v = 0; v < prob->num_vars; ++v)
            if (assign[v] == kUndecided) return v;
        return -1;
    }

    // Prune when some relabeling maps the decided prefix to a strictly
    // lex-smaller decided prefix: every completion of this node is then the
    // image of a lex-smaller relation, which the search reaches elsewhere.
    bool dominated(int prefix_len) const {
        for (const auto& vmap : prob->perm_var_map) {
            for (int j = 0; j < prefix_len; ++j) {
                const int8_t mine = assign[j];
                const int8_t image = assign[vmap[j]];
                if (image == kUndecided || (image == kIn && mine == kOut)) break;
                if (image == kOut && mine == kIn) return true;
            }
        }
        return false;
    }

    void process_leaf() {
        std::vector<Triple> triples;
        for (int v = 0; v < prob->num_vars; ++v)
            if (assign[v] == kIn) triples.push_back(prob->var_triple[v]);
        Betweenness b(prob->n, std::move(triples));
#ifdef QLINES_ENUM_DEBUG
        if (!property1_violations(b).empty() || !property2_violations(b).empty()) {
            std::fprintf(stderr, "BAD LEAF:");
            for (const Triple& t : b.triples())
                std::fprintf(stderr, " (%d,%d,%d)", t[0], t[1], t[2]);
            std::fprintf(stderr, "\n");
            std::abort();
        }
#endif
        const LineSet ls = lines_of(b);
        if (prob->cfg.forbid_universal && ls.any_universal()) return;
        if (prob->cfg.target_lines && ls.count() != static_cast<size_t>(*prob->cfg.target_lines))
            return;
        const CanonicalForm form = canonical_form(b);
        std::unique_lock lock(sink->mu);
        auto [it, inserted] = sink->seen.try_emplace(form.triples, false);
        if (!inserted) return;
        // LP verdicts are cached per class; the map entry above keeps other
        // workers from redoing this class while we hold the lock.
        Betweenness representative(prob->n, form.triples);
        const RealizabilityCertificate cert = realize(representative, prob->cfg.mode);
        it->second = cert.realizable();
        if (cert.realizable())
            sink->classes.push_back(
                {form, representative, *cert.witness, lines_of(representative)});
    }

    void dfs() {
        if (aborted) return;
        if ((++explored & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline) {
            aborted = true;
            return;
        }
        const int v = lowest_undecided();
        if (v < 0) {
            process_leaf();
            return;
        }
        if (!prob->perm_var_map.empty() && dominated(v)) return;
        for (int8_t val : {kOut, kIn}) {
            const size_t tmark = trail.size();
            const size_t mmark = member_trail.size();
            if (assign_and_propagate(v, val)) dfs();
            rollback(tmark, mmark);
            if (aborted) return;
        }
    }
};

// Decision prefixes splitting the tree into independent subsearches.
void expand_frontier(Engine& engine, int depth_left, std::vector<int8_t>& path,
                     std::vector<std::vector<int8_t>>& out) {
    const int v = engine.lowest_undecided();
    if (depth_left == 0 || v < 0) {
        out.push_back(path);
        return;
    }
    for (int8_t val : {kOut, kIn}) {
        const size_t tmark = engine.trail.size();
        const size_t mmark = engine.member_trail.size();
        if (engine.assign_and_propagate(v, val)) {
            path.push_back(val);
            expand_frontier(engine, depth_left - 1, path, out);
            path.pop_back();
        }
        engine.rollback(tmark, mmark);
    }
}

} // namespace

SearchReport enumerate_betweennesses(const SearchConfig& cfg) {
    cfg.validate();
    const Problem prob = build_problem(cfg);
    LeafSink sink;
    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(cfg.time_budget_secs));

    uint64_t explored = 0;
    bool aborted = false;

    if (cfg.jobs <= 1) {
        Engine engine(prob);
        engine.deadline = deadline;
        engine.sink = &sink;
        engine.dfs();
        explored = engine.explored;
        aborted = engine.aborted;
    } else {
        Engine master(prob);
        master.deadline = deadline;
        master.sink = &sink;
        int split_depth = 1;
        std::vector<std::vector<int8_t>> paths;
        while (true) {
            paths.clear();
            std::vector<int8_t> path;
            expand_frontier(master, split_depth, path, paths);
            if (static_cast<int>(paths.size()) >= 4 * cfg.jobs || split_depth >= 14) break;
            ++split_depth;
        }
        std::atomic<size_t> next{0};
        std::atomic<uint64_t> total_explored{0};
        std::atomic<bool> any_aborted{false};
        auto worker = [&]() {
            Engine engine(prob);
            engine.deadline = deadline;
            engine.sink = &sink;
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= paths.size()) break;
                bool ok = true;
                const size_t tmark = engine.trail.size();
                const size_t mmark = engine.member_trail.size();
                for (int8_t val : paths[i]) {
                    const int v = engine.lowest_undecided();
                    if (v < 0 || !engine.assign_and_propagate(v, val)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) engine.dfs();
                engine.rollback(tmark, mmark);
                if (engine.aborted) {
                    any_aborted = true;
                    break;
                }
            }
            total_explored += engine.explored;
        };
        std::vector<std::thread> threads;
        for (int t = 0; t < cfg.jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
        explored = total_explored.load();
        aborted = any_aborted.load();
    }

    SearchReport report;
    report.explored = explored;
    report.complete = !aborted;
    report.classes = std::move(sink.classes);
    std::sort(report.classes.begin(), report.classes.end(),
              [](const FoundClass& a, const FoundClass& b) { return a.form < b.form; });
    return report;
}

namespace {

QuasimetricSpace permute_space(const QuasimetricSpace& s, const std::vector<int>& perm) {
    const int n = s.point_count();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[perm[i]][perm[j]] = s.dist(i, j);
    return QuasimetricSpace::from_matrix(std::move(m));
}

} // namespace

ConstructionCensus classify_constructions(int n, Family family) {
    if (n < 4) throw InvalidArgumentError("construction census needs n >= 4");
    ConstructionCensus census;
    census.n = n;
    census.family = family;
    std::map<std::vector<Triple>, size_t> index_of;
    auto feed = [&](const WeightedDigraph& g, const std::string& name) {
        const QuasimetricSpace space = shortest_path_space(g);
        const Betweenness b = betweenness_of(space);
        const CanonicalForm form = canonical_form(b);
        auto it = index_of.find(form.triples);
        if (it == index_of.end()) {
            ConstructionClass cls{form, Betweenness(n, form.triples),
                                  permute_space(space, form.witness), {name}};
            index_of.emplace(form.triples, census.classes.size());
            census.classes.push_back(std::move(cls));
        } else {
            census.classes[it->second].examples.push_back(name);
        }
    };
    auto label = [](const char* fam, const PartitionTriple& t) {
        return std::string(fam) + "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," +
               std::to_string(t.r) + ")";
    };
    if (family == Family::C) {
        for (const PartitionTriple& t : compositions_three(n))
            feed(construct_C(t), label("C", t));
    } else {
        for (const PartitionTriple& t : compositions_three(n - 1)) {
            feed(construct_D1(t), label("D1", t));
            feed(construct_D2(t), label("D2", t));
        }
    }
    std::sort(census.classes.begin(), census.classes.end(),
              [](const ConstructionClass& a, const ConstructionClass& b) {
                  return a.form < b.form;
              });
    return census;
}

} // namespace qlines
