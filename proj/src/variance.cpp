#include "acyclic/variance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "acyclic/bounds.hpp"

namespace acyclic {

double PieTerms::psi() const {
    const double s1 = p[kInU] + p[kOutU] + p[kInV] + p[kOutV];
    const double s2 = p[kInUOutU] + p[kInVOutV] + p[kInUInV] + p[kInUOutV] +
                      p[kOutUInV] + p[kOutUOutV];
    const double s3 = p[kInUOutUInV] + p[kInUOutUOutV] + p[kInUInVOutV] + p[kOutUInVOutV];
    return s1 - s2 + s3 - p[kAllFour];
}

PieTerms PieTerms::swapped_roles() const {
    PieTerms s;
    s.p[kInU] = p[kInV];
    s.p[kOutU] = p[kOutV];
    s.p[kInV] = p[kInU];
    s.p[kOutV] = p[kOutU];
    s.p[kInUOutU] = p[kInVOutV];
    s.p[kInVOutV] = p[kInUOutU];
    s.p[kInUInV] = p[kInUInV];
    s.p[kInUOutV] = p[kOutUInV];
    s.p[kOutUInV] = p[kInUOutV];
    s.p[kOutUOutV] = p[kOutUOutV];
    s.p[kInUOutUInV] = p[kInUInVOutV];
    s.p[kInUOutUOutV] = p[kOutUInVOutV];
    s.p[kInUInVOutV] = p[kInUOutUInV];
    s.p[kOutUInVOutV] = p[kInUOutUOutV];
    s.p[kAllFour] = p[kAllFour];
    switch (tag) {
        case PairCase::ArcUToV: s.tag = PairCase::ArcVToU; break;
        case PairCase::ArcVToU: s.tag = PairCase::ArcUToV; break;
        default: s.tag = tag; break;
    }
    return s;
}

const char* PieTerms::name(int index) {
    static const char* names[kCount] = {
        "P(InU)", "P(OutU)", "P(InV)", "P(OutV)",
        "P(InU,OutU)", "P(InV,OutV)", "P(InU,InV)", "P(InU,OutV)",
        "P(OutU,InV)", "P(OutU,OutV)",
        "P(InU,OutU,InV)", "P(InU,OutU,OutV)", "P(InU,InV,OutV)", "P(OutU,InV,OutV)",
        "P(InU,OutU,InV,OutV)"};
    return names[index];
}

double ordering_prob(int x, int y, int t) {
    if (x < 0 || y < 0 || t < 0 || t > std::min(x, y))
        throw std::invalid_argument("ordering_prob: need x,y >= 0 and 0 <= t <= min(x,y)");
    return (1.0 / (x + y - t + 2)) * (1.0 / (x + 1) + 1.0 / (y + 1));
}

namespace {

// Case with a single arc u->v: the events OutU and InV force opposite
// relative orders of u and v, so their joint (and every superset) drops
// out, and three of the remaining joints collapse onto "one fixed last
// element" products instead of the two-term ordering_prob form.
PieTerms pie_terms_arc_u_to_v(const VertexStats& u, const VertexStats& v,
                              const PairOverlap& ov) {
    PieTerms t;
    t.tag = PairCase::ArcUToV;
    auto& p = t.p;
    p[PieTerms::kInU] = 1.0 / (u.in_degree + 1);
    p[PieTerms::kOutU] = 1.0 / (u.out_degree + 1);
    p[PieTerms::kInV] = 1.0 / (v.in_degree + 1);
    p[PieTerms::kOutV] = 1.0 / (v.out_degree + 1);
    p[PieTerms::kInUOutU] = 1.0 / (u.total_degree + 1);
    p[PieTerms::kInVOutV] = 1.0 / (v.total_degree + 1);
    p[PieTerms::kInUInV] =
        1.0 / ((static_cast<double>(u.in_degree) + v.in_degree - ov.in_in + 1) *
               (u.in_degree + 1));
    p[PieTerms::kInUOutV] = ordering_prob(u.in_degree, v.out_degree, ov.in_out);
    p[PieTerms::kOutUInV] = 0.0;
    p[PieTerms::kOutUOutV] =
        1.0 / ((static_cast<double>(u.out_degree) + v.out_degree - ov.out_out + 1) *
               (v.out_degree + 1));
    p[PieTerms::kInUOutUInV] = 0.0;
    p[PieTerms::kInUOutUOutV] =
        1.0 / ((static_cast<double>(u.total_degree) + v.out_degree - ov.all_out + 1) *
               (v.out_degree + 1));
    p[PieTerms::kInUInVOutV] =
        1.0 / ((static_cast<double>(u.in_degree) + v.total_degree - ov.in_all + 1) *
               (u.in_degree + 1));
    p[PieTerms::kOutUInVOutV] = 0.0;
    p[PieTerms::kAllFour] = 0.0;
    return t;
}

PieTerms pie_terms_nonadjacent(const VertexStats& u, const VertexStats& v,
                               const PairOverlap& ov) {
    PieTerms t;
    t.tag = PairCase::Nonadjacent;
    auto& p = t.p;
    p[PieTerms::kInU] = 1.0 / (u.in_degree + 1);
    p[PieTerms::kOutU] = 1.0 / (u.out_degree + 1);
    p[PieTerms::kInV] = 1.0 / (v.in_degree + 1);
    p[PieTerms::kOutV] = 1.0 / (v.out_degree + 1);
    p[PieTerms::kInUOutU] = 1.0 / (u.total_degree + 1);
    p[PieTerms::kInVOutV] = 1.0 / (v.total_degree + 1);
    p[PieTerms::kInUInV] = ordering_prob(u.in_degree, v.in_degree, ov.in_in);
    p[PieTerms::kInUOutV] = ordering_prob(u.in_degree, v.out_degree, ov.in_out);
    p[PieTerms::kOutUInV] = ordering_prob(u.out_degree, v.in_degree, ov.out_in);
    p[PieTerms::kOutUOutV] = ordering_prob(u.out_degree, v.out_degree, ov.out_out);
    p[PieTerms::kInUOutUInV] = ordering_prob(u.total_degree, v.in_degree, ov.all_in);
    p[PieTerms::kInUOutUOutV] = ordering_prob(u.total_degree, v.out_degree, ov.all_out);
    p[PieTerms::kInUInVOutV] = ordering_prob(u.in_degree, v.total_degree, ov.in_all);
    p[PieTerms::kOutUInVOutV] = ordering_prob(u.out_degree, v.total_degree, ov.out_all);
    p[PieTerms::kAllFour] = ordering_prob(u.total_degree, v.total_degree, ov.all_all);
    return t;
}

// Two-cycle: every mixed joint needs both u before v and v before u.
PieTerms pie_terms_two_cycle(const VertexStats& u, const VertexStats& v) {
    PieTerms t;
    t.tag = PairCase::TwoCycle;
    auto& p = t.p;
    p[PieTerms::kInU] = 1.0 / (u.in_degree + 1);
    p[PieTerms::kOutU] = 1.0 / (u.out_degree + 1);
    p[PieTerms::kInV] = 1.0 / (v.in_degree + 1);
    p[PieTerms::kOutV] = 1.0 / (v.out_degree + 1);
    p[PieTerms::kInUOutU] = 1.0 / (u.total_degree + 1);
    p[PieTerms::kInVOutV] = 1.0 / (v.total_degree + 1);
    return t;
}

PieTerms pie_terms_from_parts(const VertexStats& su, const VertexStats& sv,
                              const PairOverlap& ov) {
    switch (ov.tag) {
        case PairCase::Nonadjacent:
            return pie_terms_nonadjacent(su, sv, ov);
        case PairCase::ArcUToV:
            return pie_terms_arc_u_to_v(su, sv, ov);
        case PairCase::ArcVToU:
            return pie_terms_arc_u_to_v(sv, su, ov.transposed()).swapped_roles();
        case PairCase::TwoCycle:
            return pie_terms_two_cycle(su, sv);
    }
    throw std::logic_error("unreachable");
}

double prob_both_from_terms(const PieTerms& t, int u, int v) {
    const double joint = 1.0 - t.psi();
    if (joint < -1e-12 || joint > 1.0 + 1e-12)
        throw std::logic_error("joint membership probability " + std::to_string(joint) +
                               " out of range for pair (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
    return std::clamp(joint, 0.0, 1.0);
}

}  // namespace

PieTerms pie_terms(const Digraph& g, int u, int v) {
    return pie_terms_from_parts(g.stats(u), g.stats(v), g.pair_overlap(u, v));
}

double prob_both_in_fvs(const Digraph& g, int u, int v) {
    return prob_both_from_terms(pie_terms(g, u, v), u, v);
}

double pair_covariance(const Digraph& g, int u, int v) {
    const double joint = prob_both_in_fvs(g, u, v);
    return joint - (1.0 - agjs_term(g, u)) * (1.0 - agjs_term(g, v));
}

VarianceReport fvs_size_variance(const Digraph& g, bool collect_pairs) {
    const int n = g.vertex_count();
    VarianceReport rep;
    rep.components = g.weak_components().count;

    const auto term = agjs_terms(g);
    std::vector<VertexStats> stats(n);
    for (int v = 0; v < n; ++v) {
        stats[v] = g.stats(v);
        rep.sum_agjs += term[v];
        rep.variance += term[v] * (1.0 - term[v]);
    }
    rep.expected_size = n - rep.sum_agjs;

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const auto t = pie_terms_from_parts(stats[u], stats[v], g.pair_overlap(u, v));
            const double cov = prob_both_from_terms(t, u, v) -
                               (1.0 - term[u]) * (1.0 - term[v]);
            rep.variance += 2.0 * cov;
            if (collect_pairs) rep.pair_covariances.emplace_back(u, v, cov);
        }
    }

    if (rep.variance < -1e-9)
        throw std::logic_error("negative variance " + std::to_string(rep.variance));
    return rep;
}

VarianceBound variance_bound(const Digraph& g) {
    const auto rep = fvs_size_variance(g);
    VarianceBound b;
    b.agjs = rep.sum_agjs;
    const double denom = rep.sum_agjs - rep.components;
    if (denom < -1e-9)
        throw std::logic_error("agjs sum below component count: " + std::to_string(denom));
    if (denom <= 1e-9) {
        b.degenerate = true;
        b.correction = 0.0;
    } else {
        b.correction = std::max(rep.variance, 0.0) / denom;
    }
    b.value = b.agjs + b.correction;
    return b;
}

}  // namespace acyclic
