#ifndef ACYCLIC_ORACLES_HPP
#define ACYCLIC_ORACLES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "acyclic/digraph.hpp"

namespace acyclic {

struct BruteForceResult {
    int size = 0;
    std::vector<int> witness;  // sorted
};

/// Exact maximum induced acyclic set by subset enumeration, per weak
/// component, scanning subset sizes downward. Requires n <= 15.
BruteForceResult brute_max_acyclic(const Digraph& g);

/// Exact minimum feedback vertex set: complement of brute_max_acyclic.
BruteForceResult brute_min_fvs(const Digraph& g);

struct ExactLabelingStats {
    double expected = 0.0;
    double variance = 0.0;
    std::map<int, long long> distribution;  // feedback set size -> count over n! labelings
};

/// Runs the labeling feedback-set rule under every one of the n!
/// labelings. Requires n <= 8.
ExactLabelingStats enumerate_labeling_stats(const Digraph& g);

/// Exact probabilities of the 15 exclusion-event intersections for the
/// ordered pair (u,v), counted over all n! labelings. Entry order matches
/// PieTerms::Index. Requires n <= 8 and u != v.
std::array<double, 15> enumerate_pair_event_probs(const Digraph& g, int u, int v);

struct MonteCarloStats {
    double mean = 0.0;
    double sample_variance = 0.0;  // Bessel-corrected; 0 when undefined
    long long trials = 0;
    std::uint64_t seed = 0;
    bool variance_defined = false;  // false iff trials < 2
};

/// Mean and sample variance of the feedback set size over i.i.d. uniform
/// labelings; fully reproducible from (seed, trials).
MonteCarloStats monte_carlo_fvs_size(const Digraph& g, long long trials,
                                     std::uint64_t seed);

/// Digraph on n vertices from an arc-presence bitmask over the n(n-1)
/// ordered pairs (u,v), u != v, in lexicographic order. Enumerating
/// mask = 0 .. 2^(n(n-1))-1 visits every simple loopless digraph once.
Digraph digraph_from_arc_mask(int n, std::uint64_t mask);

}  // namespace acyclic

#endif
