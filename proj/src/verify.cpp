#include "acyclic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <vector>

#include "acyclic/bounds.hpp"
#include "acyclic/digraph.hpp"
#include "acyclic/fvs.hpp"
#include "acyclic/models.hpp"
#include "acyclic/oracles.hpp"
#include "acyclic/rng.hpp"
#include "acyclic/variance.hpp"

namespace acyclic {

namespace {

constexpr double kMomentTol = 1e-10;
constexpr double kSandwichSlack = 1e-9;

struct Ctx {
    const VerifyOptions& opt;
    std::ostream& log;
    VerifyReport rep;

    void fail(const Digraph& g, const std::string& what) {
        ++rep.failures;
        log << "FAIL: " << what << "\noffending graph:\n" << serialize_edge_list(g);
    }
    void check(const Digraph& g, bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok) fail(g, what);
    }
};

// Density ladder used by all sampled sections.
Digraph sample_graph(Rng& rng, int n) {
    static const double densities[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const double p = densities[rng.below(std::size(densities))];
    return generate_erdos_renyi({n, p}, rng.next());
}

void check_moments(Ctx& c, const Digraph& g) {
    const auto exact = enumerate_labeling_stats(g);
    const auto rep = fvs_size_variance(g);
    c.check(g, std::abs(exact.expected - rep.expected_size) <= kMomentTol,
            "expected feedback size mismatch");
    c.check(g, std::abs(exact.variance - rep.variance) <= kMomentTol,
            "feedback size variance mismatch");
}

void check_catalog(Ctx& c, const Digraph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (u == v) continue;
            auto terms = pie_terms(g, u, v);
            if (c.opt.inject_fault) terms.p[PieTerms::kInUInV] += 0.01;
            const auto freq = enumerate_pair_event_probs(g, u, v);
            for (int i = 0; i < PieTerms::kCount; ++i) {
                c.check(g, std::abs(terms.p[i] - freq[i]) <= kMomentTol,
                        std::string("catalog term ") + PieTerms::name(i) +
                            " mismatch for pair (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
                if (c.rep.failures > 0 && c.opt.inject_fault) return;  // one dump suffices
            }
        }
    }
}

void section_oracle_equivalence(Ctx& c) {
    // all 64 digraphs on three vertices, then random samples up to max_n
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const auto g = digraph_from_arc_mask(3, mask);
        check_moments(c, g);
        check_catalog(c, g);
        if (c.rep.failures && c.opt.inject_fault) return;
    }
    Rng rng(derive_seed(c.opt.seed, 1, 0));
    const int hi = std::min(c.opt.max_n, 8);
    for (int i = 0; i < c.opt.samples; ++i) {
        const int n = hi <= 4 ? hi : 4 + static_cast<int>(rng.below(hi - 3));
        const auto g = sample_graph(rng, n);
        check_moments(c, g);
        check_catalog(c, g);
        if (c.rep.failures && c.opt.inject_fault) return;
    }
}

void section_sandwich(Ctx& c) {
    Rng rng(derive_seed(c.opt.seed, 2, 0));
    for (int i = 0; i < c.opt.samples; ++i) {
        const int n = 4 + static_cast<int>(rng.below(9));  // 4..12
        const auto g = sample_graph(rng, n);
        const double alpha = brute_max_acyclic(g).size;
        const auto nb = neighborhood_bound(g);
        const auto vb = variance_bound(g);
        c.check(g, nb.agjs <= nb.refined + kSandwichSlack &&
                       nb.refined <= alpha + kSandwichSlack,
                "neighborhood bound outside [agjs, alpha]");
        c.check(g, vb.agjs <= vb.value + kSandwichSlack && vb.value <= alpha + kSandwichSlack,
                "variance bound outside [agjs, alpha]");
    }
}

void section_fvs_properties(Ctx& c) {
    Rng rng(derive_seed(c.opt.seed, 3, 0));
    for (int i = 0; i < c.opt.samples; ++i) {
        const int n = 2 + static_cast<int>(rng.below(19));  // 2..20
        const auto g = sample_graph(rng, n);
        const int comp = g.weak_components().count;
        for (int t = 0; t < 10; ++t) {
            const auto l = random_labeling(n, rng);
            const auto res = fvs_from_labeling(g, l);
            c.check(g, is_fvs(g, res.fvs), "labeling output is not a feedback set");
            c.check(g, static_cast<int>(res.fvs.size()) <= n - comp,
                    "feedback set larger than n - components");
        }
    }
}

void section_duality(Ctx& c) {
    Rng rng(derive_seed(c.opt.seed, 4, 0));
    const int graphs_per_n = std::max(1, c.opt.samples / 20);
    for (int n = 2; n <= 6; ++n) {
        for (int i = 0; i < graphs_per_n; ++i) {
            const auto g = sample_graph(rng, n);
            bool all_ok = true;
            std::vector<int> rank(n);
            std::iota(rank.begin(), rank.end(), 1);
            do {
                Labeling l{rank};
                const auto set = acyclic_set_from_labeling(g, l);
                c.check(g, g.is_acyclic_induced(set), "sampled set induces a cycle");
                const auto fvs = fvs_from_labeling(g, l.reversed()).fvs;
                std::vector<int> complement;
                std::vector<char> in_fvs(n, 0);
                for (int v : fvs) in_fvs[v] = 1;
                for (int v = 0; v < n; ++v)
                    if (!in_fvs[v]) complement.push_back(v);
                if (set != complement) all_ok = false;
            } while (std::next_permutation(rank.begin(), rank.end()));
            c.check(g, all_ok, "sampler differs from feedback-set complement");
        }
    }
}

void section_degeneracy(Ctx& c) {
    // exhaustive on 4 vertices, bigger complete-symmetric unions by hand
    for (std::uint64_t mask = 0; mask < (1ull << 12); ++mask) {
        const auto g = digraph_from_arc_mask(4, mask);
        c.check(g, variance_bound(g).degenerate == all_components_complete_symmetric(g),
                "degenerate flag disagrees with structure");
    }
    Rng rng(derive_seed(c.opt.seed, 5, 0));
    for (int i = 0; i < c.opt.samples; ++i) {
        const auto g = sample_graph(rng, 5 + static_cast<int>(rng.below(4)));
        c.check(g, variance_bound(g).degenerate == all_components_complete_symmetric(g),
                "degenerate flag disagrees with structure");
    }
    std::vector<Arc> arcs;
    int base = 0;
    for (int size : {3, 4, 5}) {  // K_3 + K_4 + K_5, complete symmetric
        for (int u = 0; u < size; ++u)
            for (int v = 0; v < size; ++v)
                if (u != v) arcs.emplace_back(base + u, base + v);
        base += size;
    }
    const auto blocks = Digraph::build(base, arcs);
    c.check(blocks, variance_bound(blocks).degenerate, "complete-symmetric union not degenerate");
    arcs.pop_back();  // drop one arc; the big component is no longer symmetric
    const auto dented = Digraph::build(base, arcs);
    c.check(dented, !variance_bound(dented).degenerate, "dented union still degenerate");
}

void section_optimal_labeling(Ctx& c) {
    Rng rng(derive_seed(c.opt.seed, 6, 0));
    for (int i = 0; i < c.opt.samples; ++i) {
        const int n = 2 + static_cast<int>(rng.below(9));  // 2..10
        const auto g = sample_graph(rng, n);
        const auto min_fvs = brute_min_fvs(g);
        bool ok = true;
        std::string what;
        try {
            const auto l = optimal_labeling(g, min_fvs.witness);
            ok = fvs_from_labeling(g, l).fvs == min_fvs.witness;
            what = "optimal labeling does not reproduce the minimum feedback set";
        } catch (const std::exception& e) {
            ok = false;
            what = std::string("optimal labeling rejected a minimum feedback set: ") + e.what();
        }
        c.check(g, ok, what);
    }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt, std::ostream& log) {
    Ctx c{opt, log, {}};
    struct Section {
        const char* name;
        void (*run)(Ctx&);
    };
    const Section sections[] = {
        {"oracle equivalence (moments + catalog)", section_oracle_equivalence},
        {"bound sandwich vs brute force", section_sandwich},
        {"feedback-set properties", section_fvs_properties},
        {"sampler duality", section_duality},
        {"degeneracy characterization", section_degeneracy},
        {"optimal labeling", section_optimal_labeling},
    };
    for (const auto& s : sections) {
        const long long before = c.rep.failures;
        s.run(c);
        log << (c.rep.failures == before ? "[ok]   " : "[FAIL] ") << s.name << "\n";
        if (c.rep.failures > before && opt.inject_fault) break;
    }
    log << (c.rep.ok() ? "PASS" : "FAIL") << " (" << c.rep.checks << " checks, "
        << c.rep.failures << " failures)\n";
    return c.rep;
}

}  // namespace acyclic
