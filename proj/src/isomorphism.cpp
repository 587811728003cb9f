#include "qlines/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "qlines/errors.hpp"

namespace qlines {

namespace {

// Per-point invariants used both for backtracking tie-breaks and for
// pruning: appearance counts by coordinate position, then the sorted sizes
// of the lines this point belongs to.
struct PointProfile {
    std::array<int, 3> positions{0, 0, 0};
    std::vector<int> line_degrees;

    friend bool operator==(const PointProfile& a, const PointProfile& b) {
        return a.positions == b.positions && a.line_degrees == b.line_degrees;
    }
    friend bool operator<(const PointProfile& a, const PointProfile& b) {
        if (a.positions != b.positions) return a.positions < b.positions;
        return a.line_degrees < b.line_degrees;
    }
};

std::vector<PointProfile> profiles_of(const Betweenness& b) {
    const int n = b.point_count();
    std::vector<PointProfile> prof(n);
    for (const Triple& t : b.triples())
        for (int pos = 0; pos < 3; ++pos) prof[t[pos]].positions[pos]++;
    const LineSet ls = lines_of(b);
    for (const LineClass& lc : ls.lines)
        for (int m : lc.members) prof[m].line_degrees.push_back(static_cast<int>(lc.members.size()));
    for (auto& p : prof) std::sort(p.line_degrees.begin(), p.line_degrees.end());
    return prof;
}

bool mapping_respects(const Betweenness& a, const Betweenness& b, const std::vector<int>& phi,
                      const std::vector<char>& assigned) {
    // Check every triple of a (and preimage of b) whose points are all
    // assigned; partial consistency check during backtracking.
    for (const Triple& t : a.triples()) {
        if (!assigned[t[0]] || !assigned[t[1]] || !assigned[t[2]]) continue;
        if (!b.contains(phi[t[0]], phi[t[1]], phi[t[2]])) return false;
    }
    return true;
}

bool full_verify(const Betweenness& a, const Betweenness& b, const std::vector<int>& phi) {
    if (a.size() != b.size()) return false;
    for (const Triple& t : a.triples())
        if (!b.contains(phi[t[0]], phi[t[1]], phi[t[2]])) return false;
    return true;
}

bool search(const Betweenness& a, const Betweenness& b, const std::vector<PointProfile>& pa,
            const std::vector<PointProfile>& pb, const std::vector<int>& order, size_t depth,
            std::vector<int>& phi, std::vector<char>& assigned_a, std::vector<char>& used_b) {
    const int n = a.point_count();
    if (depth == static_cast<size_t>(n)) return full_verify(a, b, phi);
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
        if (used_b[w] || !(pa[v] == pb[w])) continue;
        phi[v] = w;
        assigned_a[v] = 1;
        used_b[w] = 1;
        if (mapping_respects(a, b, phi, assigned_a) &&
            search(a, b, pa, pb, order, depth + 1, phi, assigned_a, used_b))
            return true;
        assigned_a[v] = 0;
        used_b[w] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> betweenness_isomorphic(const Betweenness& a,
                                                       const Betweenness& b) {
    if (a.point_count() != b.point_count())
        throw SizeMismatchError(a.point_count(), b.point_count());
    if (a.size() != b.size()) return std::nullopt;
    const int n = a.point_count();
    {
        std::vector<int> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        if (full_verify(a, b, identity)) return identity;
    }
    const auto pa = profiles_of(a);
    const auto pb = profiles_of(b);
    {
        auto sa = pa;
        auto sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (!(sa == sb)) return std::nullopt;
    }
    // Deterministic assignment order: rarest profile first, index breaking ties.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> freq(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (pa[v] == pa[w]) freq[v]++;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        if (freq[u] != freq[v]) return freq[u] < freq[v];
        if (!(pa[u] == pa[v])) return pa[u] < pa[v];
        return u < v;
    });
    std::vector<int> phi(n, -1);
    std::vector<char> assigned_a(n, 0), used_b(n, 0);
    if (search(a, b, pa, pb, order, 0, phi, assigned_a, used_b)) return phi;
    return std::nullopt;
}

namespace {

// For equal-cardinality triple sets, sorted(A) < sorted(B) lexicographically
// iff the smallest element of the symmetric difference lies in A.
struct CanonicalSearch {
    const Betweenness& b;
    int n;
    std::vector<PointProfile> profiles;
    std::vector<Triple> best;       // incumbent image, sorted
    std::vector<int> best_witness;  // witness[old] = new
    std::vector<int> new_to_old;    // assignment being built
    std::vector<int> old_to_new;
    std::vector<char> old_used;

    explicit CanonicalSearch(const Betweenness& bb)
        : b(bb), n(bb.point_count()), profiles(profiles_of(bb)), new_to_old(n, -1),
          old_to_new(n, -1), old_used(n, 0) {}

    std::vector<Triple> image_under(const std::vector<int>& o2n) const {
        std::vector<Triple> img;
        img.reserve(b.size());
        for (const Triple& t : b.triples()) img.push_back({o2n[t[0]], o2n[t[1]], o2n[t[2]]});
        std::sort(img.begin(), img.end());
        return img;
    }

    // Triples of the incumbent whose coordinates all lie below m.
    std::vector<Triple> incumbent_below(int m) const {
        std::vector<Triple> out;
        for (const Triple& t : best)
            if (t[0] < m && t[1] < m && t[2] < m) out.push_back(t);
        return out;
    }

    // Triples of b fully inside the assigned prefix, relabeled, sorted.
    std::vector<Triple> assigned_below() const {
        std::vector<Triple> out;
        for (const Triple& t : b.triples()) {
            if (old_to_new[t[0]] < 0 || old_to_new[t[1]] < 0 || old_to_new[t[2]] < 0) continue;
            out.push_back({old_to_new[t[0]], old_to_new[t[1]], old_to_new[t[2]]});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // -1: every completion beats the incumbent; 0: undecided; +1: prune.
    int compare_prefix(int m) const {
        const std::vector<Triple> mine = assigned_below();
        const std::vector<Triple> inc = incumbent_below(m);
        // smallest element of the symmetric difference
        size_t i = 0, j = 0;
        std::optional<std::pair<Triple, bool>> diff; // (triple, in_mine)
        while (i < mine.size() || j < inc.size()) {
            if (i < mine.size() && j < inc.size() && mine[i] == inc[j]) {
                ++i;
                ++j;
                continue;
            }
            if (j == inc.size() || (i < mine.size() && mine[i] < inc[j]))
                diff = {{mine[i]}, true};
            else
                diff = {{inc[j]}, false};
            break;
        }
        if (!diff) return 0;
        // Triples involving a label >= m are still unknown on both sides; the
        // smallest such possible triple is (0,1,m). The prefix difference is
        // conclusive only when it precedes all of those.
        const Triple frontier{0, 1, m};
        if (!(diff->first < frontier)) return 0;
        return diff->second ? -1 : 1;
    }

    void dfs(int depth) {
        if (depth == n) {
            std::vector<Triple> img = image_under(old_to_new);
            if (best_witness.empty() || img < best) {
                best = std::move(img);
                best_witness = old_to_new;
            }
            return;
        }
        for (int old = 0; old < n; ++old) {
            if (old_used[old]) continue;
            old_to_new[old] = depth;
            new_to_old[depth] = old;
            old_used[old] = 1;
            const int verdict = best_witness.empty() ? 0 : compare_prefix(depth + 1);
            if (verdict <= 0) dfs(depth + 1);
            old_used[old] = 0;
            new_to_old[depth] = -1;
            old_to_new[old] = -1;
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Betweenness& b) {
    if (b.point_count() > kCanonicalFormBound)
        throw TooLargeError(b.point_count(), kCanonicalFormBound);
    CanonicalForm form;
    form.n = b.point_count();
    if (b.size() == 0) {
        form.triples = {};
        form.witness.resize(b.point_count());
        std::iota(form.witness.begin(), form.witness.end(), 0);
        return form;
    }
    CanonicalSearch cs(b);
    // Greedy incumbent from the profile order keeps early pruning effective.
    {
        std::vector<int> order(cs.n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int u, int v) {
            if (!(cs.profiles[u] == cs.profiles[v])) return cs.profiles[u] < cs.profiles[v];
            return u < v;
        });
        std::vector<int> o2n(cs.n);
        for (int i = 0; i < cs.n; ++i) o2n[order[i]] = i;
        cs.best = cs.image_under(o2n);
        cs.best_witness = o2n;
    }
    cs.dfs(0);
    form.triples = cs.best;
    form.witness = cs.best_witness;
    return form;
}

Betweenness relabel(const Betweenness& b, const std::vector<int>& perm) {
    if (perm.size() != static_cast<size_t>(b.point_count()))
        throw SizeMismatchError(b.point_count(), static_cast<int>(perm.size()));
    std::vector<Triple> out;
    out.reserve(b.size());
    for (const Triple& t : b.triples()) out.push_back({perm[t[0]], perm[t[1]], perm[t[2]]});
    return Betweenness(b.point_count(), std::move(out));
}

std::map<CanonicalForm, int> census(const std::vector<Betweenness>& bs) {
    std::map<CanonicalForm, int> out;
    for (const Betweenness& b : bs) {
        if (!bs.empty() && b.point_count() != bs.front().point_count())
            throw SizeMismatchError(bs.front().point_count(), b.point_count());
        out[canonical_form(b)]++;
    }
    return out;
}

} // namespace qlines
