#ifndef ACYCLIC_MODELS_HPP
#define ACYCLIC_MODELS_HPP

#include <cstdint>

#include "acyclic/digraph.hpp"

namespace acyclic {

struct ErdosRenyiParams {
    int n = 0;
    double arc_prob = 0.0;  // per ordered pair, both directions allowed
};

struct TwoTypeParams {
    int n = 0;
    double low_fraction = 0.0;    // |V_low| = floor(low_fraction * n)
    double prob_high_high = 0.0;  // arc probability when both endpoints are high
    double prob_mixed = 0.0;      // one high, one low
    double prob_low_low = 0.0;    // both low
};

struct BipartiteParams {
    int n = 0;
    double side_fraction = 0.0;  // |A| = ceil(side_fraction * n)
    double arc_prob = 0.0;       // per direction across the partition
};

/// Low-degree class is the vertex prefix 0 .. floor(low_fraction*n)-1.
int two_type_low_count(const TwoTypeParams& p);

/// First side A is the vertex prefix 0 .. ceil(side_fraction*n)-1.
int bipartite_first_side_count(const BipartiteParams& p);

// All three generators draw one uniform per candidate ordered pair in
// lexicographic order, so (params, seed) fully determines the graph.
Digraph generate_erdos_renyi(const ErdosRenyiParams& p, std::uint64_t seed);
Digraph generate_two_type(const TwoTypeParams& p, std::uint64_t seed);
Digraph generate_bipartite(const BipartiteParams& p, std::uint64_t seed);

}  // namespace acyclic

#endif
