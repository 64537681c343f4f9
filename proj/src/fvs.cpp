#include "acyclic/fvs.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace acyclic {

bool Labeling::is_valid() const {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int r : rank) {
        if (r < 1 || r > n || seen[r]) return false;
        seen[r] = 1;
    }
    return true;
}

Labeling Labeling::reversed() const {
    Labeling r;
    r.rank.resize(rank.size());
    const int n = size();
    for (int v = 0; v < n; ++v) r.rank[v] = n + 1 - rank[v];
    return r;
}

Labeling identity_labeling(int n) {
    Labeling l;
    l.rank.resize(n);
    std::iota(l.rank.begin(), l.rank.end(), 1);
    return l;
}

Labeling random_labeling(int n, Rng& rng) {
    Labeling l = identity_labeling(n);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(l.rank[i], l.rank[j]);
    }
    return l;
}

namespace {

void check_labeling(const Digraph& g, const Labeling& l) {
    if (l.size() != g.vertex_count() || !l.is_valid())
        throw std::invalid_argument("labeling is not a bijection onto 1..n");
}

}  // namespace

FvsResult fvs_from_labeling(const Digraph& g, const Labeling& l) {
    check_labeling(g, l);
    FvsResult res;
    res.labeling = l;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int r = l.rank[v];
        bool right_in = false, right_out = false;
        for (int w : g.in_neighbors(v))
            if (l.rank[w] > r) { right_in = true; break; }
        if (!right_in) continue;
        for (int w : g.out_neighbors(v))
            if (l.rank[w] > r) { right_out = true; break; }
        if (right_out) res.fvs.push_back(v);
    }
    return res;
}

std::vector<int> acyclic_set_from_labeling(const Digraph& g, const Labeling& l) {
    check_labeling(g, l);
    std::vector<int> set;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int r = l.rank[v];
        bool all_out_after = true, all_in_after = true;
        for (int w : g.out_neighbors(v))
            if (l.rank[w] < r) { all_out_after = false; break; }
        if (!all_out_after) {
            for (int w : g.in_neighbors(v))
                if (l.rank[w] < r) { all_in_after = false; break; }
        }
        if (all_out_after || all_in_after) set.push_back(v);
    }
    return set;
}

bool is_fvs(const Digraph& g, std::span<const int> s) {
    std::vector<char> removed(g.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("is_fvs: vertex out of range");
        removed[v] = 1;
    }
    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) rest.push_back(v);
    return g.is_acyclic_induced(rest);
}

Labeling optimal_labeling(const Digraph& g, std::span<const int> minimal_fvs) {
    const int n = g.vertex_count();
    if (!is_fvs(g, minimal_fvs))
        throw std::invalid_argument("optimal_labeling: given set is not an FVS");

    std::vector<int> s(minimal_fvs.begin(), minimal_fvs.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    Labeling l;
    l.rank.assign(n, 0);
    int next = 1;
    for (int v : s) l.rank[v] = next++;

    // Topological order of the remainder, smallest id first among ready
    // vertices.
    std::vector<char> in_s(n, 0);
    for (int v : s) in_s[v] = 1;
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) {
        if (in_s[v]) continue;
        for (int w : g.out_neighbors(v))
            if (!in_s[w]) ++indeg[w];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (!in_s[v] && indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        l.rank[v] = next++;
        for (int w : g.out_neighbors(v))
            if (!in_s[w] && --indeg[w] == 0) ready.push(w);
    }
    if (next != n + 1)
        throw std::logic_error("optimal_labeling: remainder not acyclic");  // unreachable after is_fvs

    if (fvs_from_labeling(g, l).fvs != s)
        throw std::invalid_argument(
            "optimal_labeling: algorithm output differs from the given set "
            "(set is not inclusion-minimal)");
    return l;
}

}  // namespace acyclic
