#ifndef ACYCLIC_VARIANCE_HPP
#define ACYCLIC_VARIANCE_HPP

#include <array>
#include <tuple>
#include <vector>

#include "acyclic/digraph.hpp"

namespace acyclic {

/// Exclusion events for a vertex x under a random labeling:
///   InX  = all in-neighbors of x rank before x,
///   OutX = all out-neighbors of x rank before x.
/// x stays out of the feedback set iff InX or OutX holds. The 15
/// intersection probabilities below evaluate
///   P(u out or v out) = S1 - S2 + S3 - S4
/// by inclusion-exclusion over {InU, OutU, InV, OutV}.
struct PieTerms {
    enum Index {
        kInU = 0, kOutU, kInV, kOutV,                                // S1
        kInUOutU, kInVOutV, kInUInV, kInUOutV, kOutUInV, kOutUOutV,  // S2
        kInUOutUInV, kInUOutUOutV, kInUInVOutV, kOutUInVOutV,        // S3
        kAllFour,                                                    // S4
        kCount
    };

    std::array<double, kCount> p{};
    PairCase tag = PairCase::Nonadjacent;

    double psi() const;  // S1 - S2 + S3 - S4
    /// The same 15 probabilities relabeled for the pair (v,u).
    PieTerms swapped_roles() const;
    static const char* name(int index);
};

/// Probability that, in a uniform permutation of X ∪ Y ∪ {a,b} with
/// distinct a,b not in X ∪ Y, all of X precedes a and all of Y precedes b.
/// Arguments are x=|X|, y=|Y|, t=|X∩Y|.
double ordering_prob(int x, int y, int t);

/// All 15 catalog entries for the ordered pair (u,v), selected by the
/// pair's adjacency case. For a lone arc v->u the pair is evaluated with
/// roles swapped and relabeled back.
PieTerms pie_terms(const Digraph& g, int u, int v);

/// P(u and v both in the feedback set) = 1 - psi. Values outside
/// [-1e-12, 1+1e-12] indicate a catalog bug and throw; the tiny
/// overshoot is clamped.
double prob_both_in_fvs(const Digraph& g, int u, int v);

/// Cov(I_u, I_v) for the membership indicators.
double pair_covariance(const Digraph& g, int u, int v);

struct VarianceReport {
    double expected_size = 0.0;  // n - sum_agjs
    double variance = 0.0;
    double sum_agjs = 0.0;
    int components = 0;
    /// (u, v, covariance) per unordered pair; filled only on request.
    std::vector<std::tuple<int, int, double>> pair_covariances;
};

/// Exact Var(|S|) of the labeling feedback set:
/// sum_v term(v)(1-term(v)) plus twice the covariance over unordered
/// pairs, pairs in lexicographic order. Throws if the total dips below
/// -1e-9 (catalog bug).
VarianceReport fvs_size_variance(const Digraph& g, bool collect_pairs = false);

struct VarianceBound {
    double agjs = 0.0;
    double correction = 0.0;  // 0 when degenerate
    double value = 0.0;       // agjs + correction
    bool degenerate = false;  // denominator agjs - components is zero
};

/// Bhatia-Davis refinement: agjs + Var(|S|)/(agjs - c). The denominator
/// vanishes exactly when every weak component is complete symmetric; it
/// is treated as zero below 1e-9 and the correction dropped.
VarianceBound variance_bound(const Digraph& g);

}  // namespace acyclic

#endif
