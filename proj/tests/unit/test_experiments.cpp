#include <doctest.h>

#include <cmath>
#include <sstream>

#include "acyclic/bounds.hpp"
#include "acyclic/experiments.hpp"
#include "acyclic/rng.hpp"
#include "acyclic/variance.hpp"
#include "acyclic/verify.hpp"
#include "test_helpers.hpp"

using namespace acyclic;

TEST_SUITE("experiments") {

TEST_CASE("bounds report on fixed graphs") {
    const auto tri = compute_bounds_report(testutil::cycle(3));
    CHECK(tri.agjs == doctest::Approx(2.0));
    CHECK(tri.delta_neigh == doctest::Approx(0.0));
    CHECK(tri.delta_var == doctest::Approx(0.0));
    CHECK(tri.components == 1);
    CHECK(!tri.degenerate);

    const auto path = compute_bounds_report(testutil::path3());
    CHECK(path.agjs == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    CHECK(path.variance_bound == doctest::Approx(2.8).epsilon(1e-12));

    const auto two = compute_bounds_report(testutil::two_cycle());
    CHECK(two.degenerate);
    CHECK(two.variance_bound == doctest::Approx(1.0));
}

TEST_CASE("cell runner equals a direct per-graph computation") {
    CellSpec cell;
    cell.model = Model::ErdosRenyi;
    cell.n = 8;
    cell.arc_prob = 0.4;
    const std::uint64_t master = 555;
    const auto st = run_cell(cell, 3, master, /*cell_index=*/2, /*threads=*/1);

    double agjs_sum = 0.0, dvar_sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        const auto g = generate_for_cell(cell, derive_seed(master, 2, i));
        agjs_sum += agjs_bound(g);
        dvar_sum += variance_bound(g).correction;
    }
    CHECK(st.graphs == 3);
    CHECK(st.agjs_mean == doctest::Approx(agjs_sum / 3.0).epsilon(1e-12));
    CHECK(st.dvar_mean == doctest::Approx(dvar_sum / 3.0).epsilon(1e-12));
}

TEST_CASE("cell runner is thread-count independent") {
    CellSpec cell;
    cell.model = Model::TwoType;
    cell.n = 12;
    cell.low_fraction = 0.75;
    cell.prob_high_high = 0.7;
    cell.prob_mixed = 0.4;
    cell.prob_low_low = 0.05;
    const auto serial = run_cell(cell, 16, 99, 0, 1);
    const auto parallel = run_cell(cell, 16, 99, 0, 4);
    CHECK(serial.agjs_mean == parallel.agjs_mean);
    CHECK(serial.dneigh_mean == parallel.dneigh_mean);
    CHECK(serial.dvar_mean == parallel.dvar_mean);
    CHECK(serial.dvar_se == parallel.dvar_se);
}

TEST_CASE("experiment output is deterministic byte for byte") {
    ExperimentConfig cfg;
    cfg.model = Model::Bipartite;
    cfg.n_list = {10, 14};
    cfg.side_fraction_list = {0.2, 0.4};
    cfg.arc_prob_list = {0.5};
    cfg.graphs_per_cell = 4;
    cfg.master_seed = 31;
    std::ostringstream a, b;
    run_experiment(cfg, a);
    run_experiment(cfg, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("model,n,a,p,graphs,agjs_mean,agjs_se,dneigh_mean,dneigh_se,"
                       "dvar_mean,dvar_se") != std::string::npos);
    CHECK(expand_cells(cfg).size() == 4);
}

TEST_CASE("markdown format renders a table") {
    ExperimentConfig cfg;
    cfg.model = Model::ErdosRenyi;
    cfg.n_list = {6};
    cfg.arc_prob_list = {0.5};
    cfg.graphs_per_cell = 2;
    cfg.master_seed = 1;
    cfg.format = ExperimentConfig::Format::Markdown;
    std::ostringstream out;
    run_experiment(cfg, out);
    CHECK(out.str().find("| model | n | p |") != std::string::npos);
    CHECK(out.str().find("| er | 6 |") != std::string::npos);
}

TEST_CASE("config validation") {
    ExperimentConfig cfg;
    cfg.model = Model::ErdosRenyi;
    CHECK_THROWS_AS(expand_cells(cfg), std::invalid_argument);  // empty n list
    cfg.n_list = {5};
    CHECK_THROWS_AS(run_cell(expand_cells(cfg)[0], 0, 1, 0), std::invalid_argument);
}

TEST_CASE("verify passes at desk scale") {
    VerifyOptions opt;
    opt.max_n = 5;
    opt.samples = 25;
    opt.seed = 7;
    std::ostringstream log;
    const auto rep = run_verify(opt, log);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
    CHECK(log.str().find("PASS") != std::string::npos);
}

TEST_CASE("verify detects an injected catalog fault") {
    VerifyOptions opt;
    opt.max_n = 4;
    opt.samples = 5;
    opt.seed = 7;
    opt.inject_fault = true;
    std::ostringstream log;
    const auto rep = run_verify(opt, log);
    CHECK(!rep.ok());
    // the report must carry a counterexample graph
    CHECK(log.str().find("offending graph") != std::string::npos);
}

}  // TEST_SUITE
