#ifndef ACYCLIC_BOUNDS_HPP
#define ACYCLIC_BOUNDS_HPP

#include <vector>

#include "acyclic/digraph.hpp"

namespace acyclic {

/// 1/(1+x) + 1/(1+y) - 1/(1+x+y-t) on x,y >= 0, 0 <= t <= min(x,y).
/// Nonincreasing in each argument. With (x,y,t) = (out,in,mutual) degrees
/// this is the per-vertex AGJS term.
double agjs_term_value(double x, double y, double t);

/// Probability that v precedes all of its out-neighbors or all of its
/// in-neighbors in a uniform random vertex permutation. Always in (0,1];
/// equals 1 iff v has no in-neighbors or no out-neighbors.
double agjs_term(const Digraph& g, int v);

std::vector<double> agjs_terms(const Digraph& g);

/// Sum of agjs_term over all vertices: a lower bound on the maximum
/// induced acyclic set size.
double agjs_bound(const Digraph& g);

/// Sum of 1/(1+out_degree); weaker than agjs_bound. Diagnostic only.
double gruber_bound(const Digraph& g);

struct NeighborhoodBound {
    double agjs = 0.0;
    double refined = 0.0;          // agjs + sum of gain
    std::vector<double> gain;      // per-vertex, >= 0
};

/// One-level residual refinement: each vertex v contributes an extra
/// term(v) * max{0, 1 - term(v) - sum of term(u) over u in N(v)}.
NeighborhoodBound neighborhood_bound(const Digraph& g);

}  // namespace acyclic

#endif
