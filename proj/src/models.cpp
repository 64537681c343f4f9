#include "acyclic/models.hpp"

#include <cmath>
#include <stdexcept>

#include "acyclic/rng.hpp"

namespace acyclic {

namespace {

void check_prob(double p, const char* name) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument(std::string(name) + " must be in [0,1]");
}

void check_n(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

// floor/ceil of fraction*n with a guard against representation error
// (e.g. 0.7*10 = 6.999...; 0.05*100 = 5.000...01).
int floor_fraction(double fraction, int n) {
    return static_cast<int>(std::floor(fraction * n + 1e-9));
}
int ceil_fraction(double fraction, int n) {
    return static_cast<int>(std::ceil(fraction * n - 1e-9));
}

}  // namespace

int two_type_low_count(const TwoTypeParams& p) {
    return floor_fraction(p.low_fraction, p.n);
}

int bipartite_first_side_count(const BipartiteParams& p) {
    return ceil_fraction(p.side_fraction, p.n);
}

Digraph generate_erdos_renyi(const ErdosRenyiParams& p, std::uint64_t seed) {
    check_n(p.n);
    check_prob(p.arc_prob, "arc_prob");
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < p.n; ++u)
        for (int v = 0; v < p.n; ++v)
            if (u != v && rng.uniform01() < p.arc_prob) arcs.emplace_back(u, v);
    return Digraph::build(p.n, arcs);
}

Digraph generate_two_type(const TwoTypeParams& p, std::uint64_t seed) {
    check_n(p.n);
    check_prob(p.low_fraction, "low_fraction");
    check_prob(p.prob_high_high, "prob_high_high");
    check_prob(p.prob_mixed, "prob_mixed");
    check_prob(p.prob_low_low, "prob_low_low");
    const int low = two_type_low_count(p);
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < p.n; ++u) {
        for (int v = 0; v < p.n; ++v) {
            if (u == v) continue;
            const int lows = (u < low) + (v < low);
            const double q = lows == 0 ? p.prob_high_high
                           : lows == 1 ? p.prob_mixed
                                       : p.prob_low_low;
            if (rng.uniform01() < q) arcs.emplace_back(u, v);
        }
    }
    return Digraph::build(p.n, arcs);
}

Digraph generate_bipartite(const BipartiteParams& p, std::uint64_t seed) {
    check_n(p.n);
    check_prob(p.side_fraction, "side_fraction");
    check_prob(p.arc_prob, "arc_prob");
    const int n1 = bipartite_first_side_count(p);
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < p.n; ++u) {
        for (int v = 0; v < p.n; ++v) {
            if (u == v || (u < n1) == (v < n1)) continue;  // cross pairs only
            if (rng.uniform01() < p.arc_prob) arcs.emplace_back(u, v);
        }
    }
    return Digraph::build(p.n, arcs);
}

}  // namespace acyclic
