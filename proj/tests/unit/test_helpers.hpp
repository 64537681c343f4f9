#ifndef ACYCLIC_TEST_HELPERS_HPP
#define ACYCLIC_TEST_HELPERS_HPP

#include <utility>
#include <vector>

#include "acyclic/digraph.hpp"
#include "acyclic/models.hpp"
#include "acyclic/rng.hpp"

namespace testutil {

inline acyclic::Digraph cycle(int n) {
    std::vector<acyclic::Arc> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
    return acyclic::Digraph::build(n, arcs);
}

inline acyclic::Digraph two_cycle() {
    return acyclic::Digraph::build(2, {{0, 1}, {1, 0}});
}

// a -> b -> c
inline acyclic::Digraph path3() {
    return acyclic::Digraph::build(3, {{0, 1}, {1, 2}});
}

inline acyclic::Digraph complete_symmetric(int n) {
    std::vector<acyclic::Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return acyclic::Digraph::build(n, arcs);
}

inline acyclic::Digraph random_graph(acyclic::Rng& rng, int n, double p) {
    return acyclic::generate_erdos_renyi({n, p}, rng.next());
}

}  // namespace testutil

#endif
