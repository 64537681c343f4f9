#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acyclic/digraph.hpp"
#include "acyclic/experiments.hpp"
#include "acyclic/models.hpp"
#include "acyclic/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

acyclic::Model parse_model(const std::string& name) {
    if (name == "er") return acyclic::Model::ErdosRenyi;
    if (name == "two-type") return acyclic::Model::TwoType;
    if (name == "bipartite") return acyclic::Model::Bipartite;
    throw CLI::ValidationError("--model", "expected er, two-type or bipartite");
}

void print_report(const acyclic::BoundsReport& r) {
    auto line = [](const char* key, double v) {
        std::printf("%-19s %.10g\n", key, v);
    };
    std::printf("%-19s %d\n", "n", r.n);
    std::printf("%-19s %d\n", "arcs", r.arcs);
    std::printf("%-19s %d\n", "components", r.components);
    line("agjs", r.agjs);
    line("gruber", r.gruber);
    line("neighborhood_bound", r.neighborhood);
    line("delta_neigh", r.delta_neigh);
    line("fvs_variance", r.fvs_variance);
    line("variance_bound", r.variance_bound);
    line("delta_var", r.delta_var);
    std::printf("%-19s %s\n", "degenerate", r.degenerate ? "true" : "false");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lower bounds on the maximum induced acyclic vertex set of a digraph"};
    app.require_subcommand(1);

    // ---- bounds ----
    std::string bounds_file;
    auto* cmd_bounds = app.add_subcommand("bounds", "compute all bounds for an edge-list file");
    cmd_bounds->add_option("file", bounds_file, "edge-list file (\"n m\" header, then \"u v\" lines)")
        ->required();

    // ---- experiment ----
    auto* cmd_exp = app.add_subcommand("experiment", "average bound improvements over random graphs");
    std::string exp_model = "er", exp_format = "csv", exp_out;
    std::vector<int> exp_n;
    std::vector<double> exp_p{0.5}, exp_plow{0.9}, exp_q1{0.7}, exp_q2{0.5}, exp_q3{0.01},
        exp_a{0.1};
    int exp_graphs = 100, exp_threads = 0;
    std::uint64_t exp_seed = 1;
    cmd_exp->add_option("--model", exp_model, "er | two-type | bipartite")->required();
    cmd_exp->add_option("--n", exp_n, "vertex counts (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    cmd_exp->add_option("--p", exp_p, "arc probability (er, bipartite)")->delimiter(',');
    cmd_exp->add_option("--p-low", exp_plow, "low-degree fraction (two-type)")->delimiter(',');
    cmd_exp->add_option("--q1", exp_q1, "high-high arc probability")->delimiter(',');
    cmd_exp->add_option("--q2", exp_q2, "high-low arc probability")->delimiter(',');
    cmd_exp->add_option("--q3", exp_q3, "low-low arc probability")->delimiter(',');
    cmd_exp->add_option("--a", exp_a, "first-side fraction (bipartite)")->delimiter(',');
    cmd_exp->add_option("--graphs", exp_graphs, "graphs per cell")->check(CLI::PositiveNumber);
    cmd_exp->add_option("--seed", exp_seed, "master seed")->envname("ACYCLIC_BOUNDS_SEED");
    cmd_exp->add_option("--format", exp_format, "csv | md");
    cmd_exp->add_option("--out", exp_out, "output file (default stdout)");
    cmd_exp->add_option("--threads", exp_threads, "worker threads (0 = all cores)");

    // ---- gen ----
    auto* cmd_gen = app.add_subcommand("gen", "generate one random digraph as an edge list");
    std::string gen_model = "er", gen_out;
    int gen_n = 10;
    double gen_p = 0.5, gen_plow = 0.9, gen_q1 = 0.7, gen_q2 = 0.5, gen_q3 = 0.01, gen_a = 0.1;
    std::uint64_t gen_seed = 1;
    cmd_gen->add_option("--model", gen_model, "er | two-type | bipartite")->required();
    cmd_gen->add_option("--n", gen_n, "vertex count")->required();
    cmd_gen->add_option("--p", gen_p, "arc probability (er, bipartite)");
    cmd_gen->add_option("--p-low", gen_plow, "low-degree fraction (two-type)");
    cmd_gen->add_option("--q1", gen_q1, "high-high arc probability");
    cmd_gen->add_option("--q2", gen_q2, "high-low arc probability");
    cmd_gen->add_option("--q3", gen_q3, "low-low arc probability");
    cmd_gen->add_option("--a", gen_a, "first-side fraction (bipartite)");
    cmd_gen->add_option("--seed", gen_seed, "seed")->envname("ACYCLIC_BOUNDS_SEED");
    cmd_gen->add_option("--out", gen_out, "output file (default stdout)");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "cross-check closed forms against enumeration oracles");
    int ver_max_n = 7, ver_samples = 200, ver_threads = 0;
    std::uint64_t ver_seed = 1;
    bool ver_fault = false;
    cmd_verify->add_option("--max-n", ver_max_n, "largest size for permutation checks (<= 8)")
        ->check(CLI::Range(2, 8));
    cmd_verify->add_option("--samples", ver_samples, "random graphs per section")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", ver_seed, "seed")->envname("ACYCLIC_BOUNDS_SEED");
    cmd_verify->add_option("--threads", ver_threads, "worker threads (0 = all cores)");
    cmd_verify->add_flag("--inject-fault", ver_fault,
                         "perturb one catalog term to prove the harness can fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_bounds) {
            const auto g = acyclic::parse_edge_list(read_file(bounds_file));
            print_report(acyclic::compute_bounds_report(g));
            return 0;
        }
        if (*cmd_exp) {
            acyclic::ExperimentConfig cfg;
            cfg.model = parse_model(exp_model);
            cfg.n_list = exp_n;
            cfg.arc_prob_list = exp_p;
            cfg.low_fraction_list = exp_plow;
            cfg.prob_high_high_list = exp_q1;
            cfg.prob_mixed_list = exp_q2;
            cfg.prob_low_low_list = exp_q3;
            cfg.side_fraction_list = exp_a;
            cfg.graphs_per_cell = exp_graphs;
            cfg.master_seed = exp_seed;
            cfg.threads = exp_threads;
            if (exp_format == "csv")
                cfg.format = acyclic::ExperimentConfig::Format::Csv;
            else if (exp_format == "md")
                cfg.format = acyclic::ExperimentConfig::Format::Markdown;
            else
                throw CLI::ValidationError("--format", "expected csv or md");
            std::ostringstream table;
            acyclic::run_experiment(cfg, table);
            write_output(exp_out, table.str());
            return 0;
        }
        if (*cmd_gen) {
            acyclic::CellSpec cell;
            cell.model = parse_model(gen_model);
            cell.n = gen_n;
            cell.arc_prob = gen_p;
            cell.low_fraction = gen_plow;
            cell.prob_high_high = gen_q1;
            cell.prob_mixed = gen_q2;
            cell.prob_low_low = gen_q3;
            cell.side_fraction = gen_a;
            write_output(gen_out, acyclic::serialize_edge_list(
                                      acyclic::generate_for_cell(cell, gen_seed)));
            return 0;
        }
        if (*cmd_verify) {
            acyclic::VerifyOptions opt;
            opt.max_n = ver_max_n;
            opt.samples = ver_samples;
            opt.seed = ver_seed;
            opt.inject_fault = ver_fault;
            opt.threads = ver_threads;
            const auto rep = acyclic::run_verify(opt, std::cout);
            return rep.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
