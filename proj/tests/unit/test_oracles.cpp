#include <doctest.h>

#include <cmath>
#include <vector>

#include "acyclic/bounds.hpp"
#include "acyclic/fvs.hpp"
#include "acyclic/oracles.hpp"
#include "acyclic/rng.hpp"
#include "acyclic/variance.hpp"
#include "test_helpers.hpp"

using namespace acyclic;

TEST_SUITE("oracles") {

TEST_CASE("brute force maximum acyclic set") {
    CHECK(brute_max_acyclic(testutil::cycle(3)).size == 2);
    CHECK(brute_max_acyclic(testutil::complete_symmetric(4)).size == 1);

    const auto dag = Digraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}});
    CHECK(brute_max_acyclic(dag).size == 5);

    Rng rng(83);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(10));
        const auto g = testutil::random_graph(rng, n, rng.uniform01());
        const auto res = brute_max_acyclic(g);
        CHECK(g.is_acyclic_induced(res.witness));
        CHECK(static_cast<int>(res.witness.size()) == res.size);
    }

    CHECK_THROWS_AS(brute_max_acyclic(Digraph::build(16, {})), std::invalid_argument);
}

TEST_CASE("brute force minimum feedback set") {
    CHECK(brute_min_fvs(testutil::cycle(3)).size == 1);
    const auto dag = Digraph::build(4, {{0, 1}, {1, 2}});
    CHECK(brute_min_fvs(dag).size == 0);
    // two disjoint 3-cycles: additive over components
    const auto two_tris =
        Digraph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(brute_min_fvs(two_tris).size == 2);
    CHECK(brute_max_acyclic(two_tris).size == 4);

    Rng rng(89);
    for (int rep = 0; rep < 20; ++rep) {
        const auto g = testutil::random_graph(rng, 1 + static_cast<int>(rng.below(9)),
                                              rng.uniform01());
        CHECK(is_fvs(g, brute_min_fvs(g).witness));
    }
}

TEST_CASE("labeling enumeration on fixed graphs") {
    const auto path = enumerate_labeling_stats(testutil::path3());
    REQUIRE(path.distribution.size() == 2);
    CHECK(path.distribution.at(0) == 4);
    CHECK(path.distribution.at(1) == 2);
    CHECK(path.expected == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(path.variance == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

    const auto tri = enumerate_labeling_stats(testutil::cycle(3));
    CHECK(tri.distribution.at(1) == 6);
    CHECK(tri.variance == doctest::Approx(0.0));

    const auto edgeless = enumerate_labeling_stats(Digraph::build(3, {}));
    CHECK(edgeless.distribution.at(0) == 6);

    CHECK_THROWS_AS(enumerate_labeling_stats(Digraph::build(9, {})),
                    std::invalid_argument);
}

TEST_CASE("labeling enumeration counts sum to n factorial") {
    Rng rng(97);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const auto g = testutil::random_graph(rng, n, rng.uniform01());
        const auto st = enumerate_labeling_stats(g);
        long long total = 0, fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        for (const auto& [k, c] : st.distribution) total += c;
        CHECK(total == fact);
        CHECK(std::abs(st.expected - (n - agjs_bound(g))) <= 1e-12);
        CHECK(std::abs(st.variance - fvs_size_variance(g).variance) <= 1e-10);
    }
}

TEST_CASE("pair event probabilities validate inputs") {
    const auto g = testutil::cycle(3);
    CHECK_THROWS_AS(enumerate_pair_event_probs(g, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pair_event_probs(Digraph::build(9, {}), 0, 1),
                    std::invalid_argument);
}

TEST_CASE("monte carlo sampler") {
    const auto tri = testutil::cycle(3);
    const auto one = monte_carlo_fvs_size(tri, 1, 7);
    CHECK(!one.variance_defined);
    CHECK(one.sample_variance == 0.0);
    CHECK(one.mean == doctest::Approx(1.0));  // |S| is constant on the 3-cycle

    const auto many = monte_carlo_fvs_size(tri, 500, 7);
    CHECK(many.mean == doctest::Approx(1.0));
    CHECK(many.sample_variance == doctest::Approx(0.0));

    // reproducibility
    const auto a = monte_carlo_fvs_size(testutil::complete_symmetric(5), 100, 42);
    const auto b = monte_carlo_fvs_size(testutil::complete_symmetric(5), 100, 42);
    CHECK(a.mean == b.mean);
    CHECK(a.sample_variance == b.sample_variance);
    CHECK(a.seed == 42);

    CHECK_THROWS_AS(monte_carlo_fvs_size(tri, 0, 1), std::invalid_argument);
}

TEST_CASE("monte carlo mean approaches the closed form") {
    const auto g = generate_erdos_renyi({50, 0.1}, 1234);
    const long long trials = 100000;
    const auto mc = monte_carlo_fvs_size(g, trials, 999);
    const double expect = g.vertex_count() - agjs_bound(g);
    const double sigma_mean = std::sqrt(mc.sample_variance / trials);
    CHECK(std::abs(mc.mean - expect) <= 4.0 * sigma_mean);
}

TEST_CASE("arc mask enumeration") {
    CHECK(digraph_from_arc_mask(3, 0).arc_count() == 0);
    CHECK(digraph_from_arc_mask(3, 63).arc_count() == 6);
    // all 64 graphs on 3 vertices are distinct
    std::vector<Digraph> all;
    for (std::uint64_t m = 0; m < 64; ++m) all.push_back(digraph_from_arc_mask(3, m));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
}

}  // TEST_SUITE
