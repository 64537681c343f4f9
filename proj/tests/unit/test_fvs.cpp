#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "acyclic/bounds.hpp"
#include "acyclic/fvs.hpp"
#include "acyclic/oracles.hpp"
#include "acyclic/rng.hpp"
#include "test_helpers.hpp"

using namespace acyclic;

namespace {

// all labelings of n vertices
template <typename F>
void all_labelings(int n, F&& f) {
    std::vector<int> rank(n);
    std::iota(rank.begin(), rank.end(), 1);
    do {
        f(Labeling{rank});
    } while (std::next_permutation(rank.begin(), rank.end()));
}

}  // namespace

TEST_SUITE("fvs") {

TEST_CASE("labeling validity and reversal") {
    Labeling l{{2, 1, 3}};
    CHECK(l.is_valid());
    CHECK(l.reversed().rank == std::vector<int>{2, 3, 1});
    CHECK(!Labeling{{1, 1, 3}}.is_valid());
    CHECK(!Labeling{{0, 1, 2}}.is_valid());
    CHECK(identity_labeling(4).rank == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("feedback set on a 3-cycle is the minimal-rank vertex") {
    const auto tri = testutil::cycle(3);
    all_labelings(3, [&](const Labeling& l) {
        const auto res = fvs_from_labeling(tri, l);
        REQUIRE(res.fvs.size() == 1);
        const int v = res.fvs[0];
        CHECK(l.rank[v] == 1);
    });
}

TEST_CASE("single arc never selects, 2-cycle selects the smaller rank") {
    const auto arc = Digraph::build(2, {{0, 1}});
    all_labelings(2, [&](const Labeling& l) {
        CHECK(fvs_from_labeling(arc, l).fvs.empty());
    });
    const auto two = testutil::two_cycle();
    all_labelings(2, [&](const Labeling& l) {
        const auto res = fvs_from_labeling(two, l);
        REQUIRE(res.fvs.size() == 1);
        CHECK(l.rank[res.fvs[0]] == 1);
    });
}

TEST_CASE("rejects non-bijective labelings") {
    const auto tri = testutil::cycle(3);
    CHECK_THROWS_AS(fvs_from_labeling(tri, Labeling{{1, 2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(fvs_from_labeling(tri, Labeling{{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(acyclic_set_from_labeling(tri, Labeling{{0, 1, 2}}),
                    std::invalid_argument);
}

TEST_CASE("random labeling determinism and uniformity") {
    Rng a(99), b(99);
    CHECK(random_labeling(8, a).rank == random_labeling(8, b).rank);
    Rng c(1);
    CHECK(random_labeling(1, c).rank == std::vector<int>{1});

    // n = 4: every order within 5 sigma of uniform over 1e5 draws
    const int trials = 100000;
    std::map<std::vector<int>, int> freq;
    Rng rng(2024);
    for (int i = 0; i < trials; ++i) ++freq[random_labeling(4, rng).rank];
    CHECK(freq.size() == 24);
    const double expect = trials / 24.0;
    const double sigma = std::sqrt(trials * (1.0 / 24.0) * (23.0 / 24.0));
    for (const auto& [perm, count] : freq)
        CHECK(std::abs(count - expect) <= 5.0 * sigma);
}

TEST_CASE("acyclic sampler on fixed graphs") {
    const auto tri = testutil::cycle(3);
    const auto set = acyclic_set_from_labeling(tri, identity_labeling(3));
    CHECK(set == std::vector<int>{0, 1});
    CHECK(tri.is_acyclic_induced(set));

    const auto edgeless = Digraph::build(4, {});
    CHECK(acyclic_set_from_labeling(edgeless, identity_labeling(4)).size() == 4);
}

TEST_CASE("sampler equals complement of reversed-labeling feedback set") {
    Rng rng(53);
    for (int n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 4; ++rep) {
            const auto g = testutil::random_graph(rng, n, rng.uniform01());
            all_labelings(n, [&](const Labeling& l) {
                const auto set = acyclic_set_from_labeling(g, l);
                CHECK(g.is_acyclic_induced(set));
                const auto fvs = fvs_from_labeling(g, l.reversed()).fvs;
                std::vector<char> in_fvs(n, 0);
                for (int v : fvs) in_fvs[v] = 1;
                std::vector<int> complement;
                for (int v = 0; v < n; ++v)
                    if (!in_fvs[v]) complement.push_back(v);
                CHECK(set == complement);
            });
        }
    }
}

TEST_CASE("is_fvs") {
    const auto tri = testutil::cycle(3);
    CHECK(is_fvs(tri, std::vector<int>{0}));
    CHECK(!is_fvs(tri, std::vector<int>{}));
    CHECK(is_fvs(testutil::two_cycle(), std::vector<int>{0}));
}

TEST_CASE("output is always an FVS within the size cap") {
    Rng rng(59);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(24));
        const auto g = testutil::random_graph(rng, n, rng.uniform01());
        const int comp = g.weak_components().count;
        for (int t = 0; t < 5; ++t) {
            const auto l = random_labeling(n, rng);
            const auto res = fvs_from_labeling(g, l);
            CHECK(is_fvs(g, res.fvs));
            CHECK(static_cast<int>(res.fvs.size()) <= n - comp);
        }
    }
}

TEST_CASE("mean over all labelings matches n minus the agjs sum") {
    Rng rng(61);
    for (int rep = 0; rep < 12; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(6));  // up to 7
        const auto g = testutil::random_graph(rng, n, rng.uniform01());
        const auto stats = enumerate_labeling_stats(g);
        CHECK(std::abs(stats.expected - (n - agjs_bound(g))) <= 1e-12);
    }
}

TEST_CASE("optimal labeling on fixed graphs") {
    const auto tri = testutil::cycle(3);
    const auto l = optimal_labeling(tri, std::vector<int>{0});
    CHECK(fvs_from_labeling(tri, l).fvs == std::vector<int>{0});
    CHECK(l.rank[0] == 1);

    // DAG: empty FVS, any topological order works
    const auto dag = Digraph::build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    const auto l2 = optimal_labeling(dag, std::vector<int>{});
    CHECK(fvs_from_labeling(dag, l2).fvs.empty());

    const auto two = testutil::two_cycle();
    const auto l3 = optimal_labeling(two, std::vector<int>{0});
    CHECK(fvs_from_labeling(two, l3).fvs == std::vector<int>{0});
}

TEST_CASE("optimal labeling rejects bad inputs") {
    const auto tri = testutil::cycle(3);
    // not an FVS
    CHECK_THROWS_AS(optimal_labeling(tri, std::vector<int>{}), std::invalid_argument);
    // an FVS but not minimal
    CHECK_THROWS_AS(optimal_labeling(tri, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("optimal labeling reproduces brute-force minimum feedback sets") {
    Rng rng(67);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const auto g = testutil::random_graph(rng, n, rng.uniform01());
        const auto min_fvs = brute_min_fvs(g);
        const auto l = optimal_labeling(g, min_fvs.witness);
        CHECK(fvs_from_labeling(g, l).fvs == min_fvs.witness);
        CHECK(static_cast<int>(min_fvs.witness.size()) ==
              n - brute_max_acyclic(g).size);
    }
}

}  // TEST_SUITE
