#include "acyclic/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "acyclic/fvs.hpp"
#include "acyclic/rng.hpp"

namespace acyclic {

namespace {

// Acyclicity of the subgraph induced by `mask` over component-local
// bitmask adjacency: peel vertices whose in-arcs from the mask are gone.
bool mask_acyclic(std::uint32_t mask, const std::vector<std::uint32_t>& in_mask) {
    std::uint32_t cur = mask;
    bool changed = true;
    while (cur && changed) {
        changed = false;
        std::uint32_t rest = cur;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((in_mask[v] & cur) == 0) {
                cur &= ~(1u << v);
                changed = true;
            }
        }
    }
    return cur == 0;
}

// Largest acyclic subset of one component, scanning sizes downward;
// subsets of equal size via Gosper's hack.
std::uint32_t component_max_acyclic(const std::vector<std::uint32_t>& in_mask) {
    const int k = static_cast<int>(in_mask.size());
    const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
    for (int size = k; size >= 1; --size) {
        std::uint32_t sub = (1u << size) - 1;
        while (sub <= full) {
            if (mask_acyclic(sub, in_mask)) return sub;
            const std::uint32_t c = sub & -sub;
            const std::uint32_t r = sub + c;
            if (r > full || r == 0) break;
            sub = (((r ^ sub) >> 2) / c) | r;
        }
    }
    return 0;  // k == 0 only
}

}  // namespace

BruteForceResult brute_max_acyclic(const Digraph& g) {
    const int n = g.vertex_count();
    if (n > 15)
        throw std::invalid_argument("brute_max_acyclic: n <= 15, got " + std::to_string(n));

    const auto comp = g.weak_components();
    std::vector<std::vector<int>> members(comp.count);
    for (int v = 0; v < n; ++v) members[comp.label[v]].push_back(v);

    BruteForceResult res;
    for (const auto& verts : members) {
        const int k = static_cast<int>(verts.size());
        std::vector<int> local(n, -1);
        for (int i = 0; i < k; ++i) local[verts[i]] = i;
        std::vector<std::uint32_t> in_mask(k, 0);
        for (int i = 0; i < k; ++i)
            for (int w : g.in_neighbors(verts[i]))
                in_mask[i] |= 1u << local[w];
        const std::uint32_t best = component_max_acyclic(in_mask);
        for (int i = 0; i < k; ++i)
            if (best & (1u << i)) res.witness.push_back(verts[i]);
    }
    std::sort(res.witness.begin(), res.witness.end());
    res.size = static_cast<int>(res.witness.size());
    return res;
}

BruteForceResult brute_min_fvs(const Digraph& g) {
    const auto alpha = brute_max_acyclic(g);
    BruteForceResult res;
    std::vector<char> keep(g.vertex_count(), 0);
    for (int v : alpha.witness) keep[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!keep[v]) res.witness.push_back(v);
    res.size = static_cast<int>(res.witness.size());
    return res;
}

namespace {

// Iterative Heap's method over the rank array; `visit` sees each of the
// n! labelings exactly once.
template <typename F>
void for_each_labeling(int n, F&& visit) {
    std::vector<int> rank(n);
    std::iota(rank.begin(), rank.end(), 1);
    visit(rank);
    std::vector<int> ctr(n, 0);
    int i = 0;
    while (i < n) {
        if (ctr[i] < i) {
            std::swap(rank[i % 2 == 0 ? 0 : ctr[i]], rank[i]);
            visit(rank);
            ++ctr[i];
            i = 0;
        } else {
            ctr[i++] = 0;
        }
    }
}

int fvs_size_under_ranks(const Digraph& g, const std::vector<int>& rank) {
    int size = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int r = rank[v];
        bool right_in = false, right_out = false;
        for (int w : g.in_neighbors(v))
            if (rank[w] > r) { right_in = true; break; }
        if (!right_in) continue;
        for (int w : g.out_neighbors(v))
            if (rank[w] > r) { right_out = true; break; }
        size += right_out;
    }
    return size;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

ExactLabelingStats enumerate_labeling_stats(const Digraph& g) {
    const int n = g.vertex_count();
    if (n > 8)
        throw std::invalid_argument("enumerate_labeling_stats: n <= 8, got " +
                                    std::to_string(n));
    std::vector<long long> counts(n + 1, 0);
    for_each_labeling(n, [&](const std::vector<int>& rank) {
        ++counts[fvs_size_under_ranks(g, rank)];
    });

    ExactLabelingStats st;
    const long long total = factorial(n);
    long long sum = 0, sum_sq = 0;
    for (int k = 0; k <= n; ++k) {
        if (counts[k] == 0) continue;
        st.distribution[k] = counts[k];
        sum += static_cast<long long>(k) * counts[k];
        sum_sq += static_cast<long long>(k) * k * counts[k];
    }
    st.expected = static_cast<double>(sum) / static_cast<double>(total);
    // exact integer numerator keeps the variance free of cancellation
    st.variance = static_cast<double>(total * sum_sq - sum * sum) /
                  (static_cast<double>(total) * static_cast<double>(total));
    return st;
}

std::array<double, 15> enumerate_pair_event_probs(const Digraph& g, int u, int v) {
    const int n = g.vertex_count();
    if (n > 8)
        throw std::invalid_argument("enumerate_pair_event_probs: n <= 8");
    if (u == v) throw std::invalid_argument("enumerate_pair_event_probs: u != v");

    std::array<long long, 15> counts{};
    auto all_before = [&](const std::vector<int>& rank, const std::vector<int>& nbrs,
                          int x) {
        for (int w : nbrs)
            if (rank[w] > rank[x]) return false;
        return true;
    };
    for_each_labeling(n, [&](const std::vector<int>& rank) {
        const bool in_u = all_before(rank, g.in_neighbors(u), u);
        const bool out_u = all_before(rank, g.out_neighbors(u), u);
        const bool in_v = all_before(rank, g.in_neighbors(v), v);
        const bool out_v = all_before(rank, g.out_neighbors(v), v);
        counts[0] += in_u;
        counts[1] += out_u;
        counts[2] += in_v;
        counts[3] += out_v;
        counts[4] += in_u && out_u;
        counts[5] += in_v && out_v;
        counts[6] += in_u && in_v;
        counts[7] += in_u && out_v;
        counts[8] += out_u && in_v;
        counts[9] += out_u && out_v;
        counts[10] += in_u && out_u && in_v;
        counts[11] += in_u && out_u && out_v;
        counts[12] += in_u && in_v && out_v;
        counts[13] += out_u && in_v && out_v;
        counts[14] += in_u && out_u && in_v && out_v;
    });
    std::array<double, 15> probs;
    const double total = static_cast<double>(factorial(n));
    for (std::size_t i = 0; i < probs.size(); ++i)
        probs[i] = static_cast<double>(counts[i]) / total;
    return probs;
}

MonteCarloStats monte_carlo_fvs_size(const Digraph& g, long long trials,
                                     std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("monte_carlo_fvs_size: trials >= 1");
    MonteCarloStats st;
    st.trials = trials;
    st.seed = seed;
    Rng rng(seed);
    // Welford
    double mean = 0.0, m2 = 0.0;
    for (long long i = 0; i < trials; ++i) {
        const auto l = random_labeling(g.vertex_count(), rng);
        const double x = static_cast<double>(fvs_from_labeling(g, l).fvs.size());
        const double d = x - mean;
        mean += d / static_cast<double>(i + 1);
        m2 += d * (x - mean);
    }
    st.mean = mean;
    st.variance_defined = trials > 1;
    st.sample_variance = st.variance_defined ? m2 / static_cast<double>(trials - 1) : 0.0;
    return st;
}

Digraph digraph_from_arc_mask(int n, std::uint64_t mask) {
    if (n > 8) throw std::invalid_argument("digraph_from_arc_mask: n(n-1) must fit in 64 bits");
    std::vector<Arc> arcs;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (mask & (1ull << bit)) arcs.emplace_back(u, v);
            ++bit;
        }
    }
    return Digraph::build(n, arcs);
}

}  // namespace acyclic
