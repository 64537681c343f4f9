#ifndef ACYCLIC_FVS_HPP
#define ACYCLIC_FVS_HPP

#include <span>
#include <vector>

#include "acyclic/digraph.hpp"
#include "acyclic/rng.hpp"

namespace acyclic {

/// A bijection from vertices to ranks 1..n.
struct Labeling {
    std::vector<int> rank;  // rank[v] in 1..n

    int size() const { return static_cast<int>(rank.size()); }
    bool is_valid() const;

    /// rank -> n+1-rank. Walking the reversed labeling right-to-left is
    /// walking the original left-to-right.
    Labeling reversed() const;
};

Labeling identity_labeling(int n);

/// Uniform over all n! bijections (Fisher-Yates).
Labeling random_labeling(int n, Rng& rng);

struct FvsResult {
    std::vector<int> fvs;  // sorted
    Labeling labeling;
};

/// Selects every vertex that has both an in-neighbor and an out-neighbor
/// of strictly larger rank. The result is always a feedback vertex set,
/// and |fvs| <= n - (number of weak components).
FvsResult fvs_from_labeling(const Digraph& g, const Labeling& l);

/// The dual sampler: every vertex whose out-neighbors all rank later, or
/// whose in-neighbors all rank later. The result induces an acyclic
/// subgraph, and equals V minus fvs_from_labeling(g, l.reversed()).
std::vector<int> acyclic_set_from_labeling(const Digraph& g, const Labeling& l);

bool is_fvs(const Digraph& g, std::span<const int> s);

/// Labeling that makes fvs_from_labeling return exactly `minimal_fvs`:
/// ranks 1..|S| on S (ascending vertex id), the rest by a topological
/// sort of the remainder (ties by ascending id). Throws if `minimal_fvs`
/// is not an FVS, or is not inclusion-minimal (detected post-hoc when
/// the algorithm output differs).
Labeling optimal_labeling(const Digraph& g, std::span<const int> minimal_fvs);

}  // namespace acyclic

#endif
