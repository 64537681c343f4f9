#include "acyclic/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace acyclic {

double agjs_term_value(double x, double y, double t) {
    if (x < 0 || y < 0 || t < 0 || t > std::min(x, y))
        throw std::invalid_argument("agjs_term_value: need x,y >= 0 and 0 <= t <= min(x,y)");
    return 1.0 / (1.0 + x) + 1.0 / (1.0 + y) - 1.0 / (1.0 + x + y - t);
}

double agjs_term(const Digraph& g, int v) {
    const auto s = g.stats(v);
    return 1.0 / (1.0 + s.out_degree) + 1.0 / (1.0 + s.in_degree) -
           1.0 / (1.0 + s.total_degree);
}

std::vector<double> agjs_terms(const Digraph& g) {
    std::vector<double> t(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) t[v] = agjs_term(g, v);
    return t;
}

double agjs_bound(const Digraph& g) {
    double sum = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += agjs_term(g, v);
    return sum;
}

double gruber_bound(const Digraph& g) {
    double sum = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v)
        sum += 1.0 / (1.0 + g.stats(v).out_degree);
    return sum;
}

NeighborhoodBound neighborhood_bound(const Digraph& g) {
    const int n = g.vertex_count();
    NeighborhoodBound b;
    b.gain.assign(n, 0.0);
    const auto term = agjs_terms(g);
    for (int v = 0; v < n; ++v) b.agjs += term[v];
    for (int v = 0; v < n; ++v) {
        double slack = 1.0 - term[v];
        for (int u : g.neighbors(v)) slack -= term[u];
        b.gain[v] = term[v] * std::max(0.0, slack);
    }
    double total = 0.0;
    for (int v = 0; v < n; ++v) total += b.gain[v];
    b.refined = b.agjs + total;
    return b;
}

}  // namespace acyclic
