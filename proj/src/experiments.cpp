#include "acyclic/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "acyclic/bounds.hpp"
#include "acyclic/models.hpp"
#include "acyclic/parallel.hpp"
#include "acyclic/rng.hpp"
#include "acyclic/variance.hpp"

namespace acyclic {

BoundsReport compute_bounds_report(const Digraph& g) {
    BoundsReport r;
    r.n = g.vertex_count();
    r.arcs = g.arc_count();
    const auto nb = neighborhood_bound(g);
    const auto vb = variance_bound(g);
    const auto var = fvs_size_variance(g);
    r.components = var.components;
    r.agjs = nb.agjs;
    r.gruber = gruber_bound(g);
    r.neighborhood = nb.refined;
    r.delta_neigh = nb.refined - nb.agjs;
    r.fvs_variance = var.variance;
    r.variance_bound = vb.value;
    r.delta_var = vb.correction;
    r.degenerate = vb.degenerate;
    return r;
}

const char* model_name(Model m) {
    switch (m) {
        case Model::ErdosRenyi: return "er";
        case Model::TwoType: return "two-type";
        case Model::Bipartite: return "bipartite";
    }
    return "?";
}

Digraph generate_for_cell(const CellSpec& cell, std::uint64_t seed) {
    switch (cell.model) {
        case Model::ErdosRenyi:
            return generate_erdos_renyi({cell.n, cell.arc_prob}, seed);
        case Model::TwoType:
            return generate_two_type({cell.n, cell.low_fraction, cell.prob_high_high,
                                      cell.prob_mixed, cell.prob_low_low},
                                     seed);
        case Model::Bipartite:
            return generate_bipartite({cell.n, cell.side_fraction, cell.arc_prob}, seed);
    }
    throw std::logic_error("unknown model");
}

namespace {

struct GraphDeltas {
    double agjs = 0.0, dneigh = 0.0, dvar = 0.0;
};

GraphDeltas graph_deltas(const Digraph& g) {
    GraphDeltas d;
    const auto nb = neighborhood_bound(g);
    const auto vb = variance_bound(g);
    d.agjs = nb.agjs;
    d.dneigh = nb.refined - nb.agjs;
    d.dvar = vb.correction;
    return d;
}

void mean_se(const std::vector<double>& xs, double& mean, double& se) {
    const auto m = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    mean = sum / m;
    if (xs.size() < 2) {
        se = 0.0;
        return;
    }
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    se = std::sqrt(ss / (m - 1.0)) / std::sqrt(m);
}

std::string fmt4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

std::string fmt_param(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::vector<std::string> param_names(Model m) {
    switch (m) {
        case Model::ErdosRenyi: return {"p"};
        case Model::TwoType: return {"p_low", "q1", "q2", "q3"};
        case Model::Bipartite: return {"a", "p"};
    }
    return {};
}

std::vector<double> param_values(const CellSpec& c) {
    switch (c.model) {
        case Model::ErdosRenyi: return {c.arc_prob};
        case Model::TwoType:
            return {c.low_fraction, c.prob_high_high, c.prob_mixed, c.prob_low_low};
        case Model::Bipartite: return {c.side_fraction, c.arc_prob};
    }
    return {};
}

}  // namespace

CellStats run_cell(const CellSpec& cell, int graphs_per_cell, std::uint64_t master_seed,
                   std::uint64_t cell_index, int threads) {
    if (graphs_per_cell < 1)
        throw std::invalid_argument("graphs_per_cell must be >= 1");
    std::vector<GraphDeltas> per_graph(graphs_per_cell);
    parallel_for(
        graphs_per_cell,
        [&](std::int64_t i) {
            const std::uint64_t seed =
                derive_seed(master_seed, cell_index, static_cast<std::uint64_t>(i));
            per_graph[i] = graph_deltas(generate_for_cell(cell, seed));
        },
        threads);

    std::vector<double> agjs(graphs_per_cell), dneigh(graphs_per_cell), dvar(graphs_per_cell);
    for (int i = 0; i < graphs_per_cell; ++i) {
        agjs[i] = per_graph[i].agjs;
        dneigh[i] = per_graph[i].dneigh;
        dvar[i] = per_graph[i].dvar;
    }
    CellStats st;
    st.graphs = graphs_per_cell;
    mean_se(agjs, st.agjs_mean, st.agjs_se);
    mean_se(dneigh, st.dneigh_mean, st.dneigh_se);
    mean_se(dvar, st.dvar_mean, st.dvar_se);
    return st;
}

std::vector<CellSpec> expand_cells(const ExperimentConfig& cfg) {
    if (cfg.n_list.empty()) throw std::invalid_argument("experiment needs at least one n");
    std::vector<CellSpec> cells;
    for (int n : cfg.n_list) {
        switch (cfg.model) {
            case Model::ErdosRenyi:
                for (double p : cfg.arc_prob_list) {
                    CellSpec c;
                    c.model = cfg.model;
                    c.n = n;
                    c.arc_prob = p;
                    cells.push_back(c);
                }
                break;
            case Model::TwoType:
                for (double pl : cfg.low_fraction_list)
                    for (double q1 : cfg.prob_high_high_list)
                        for (double q2 : cfg.prob_mixed_list)
                            for (double q3 : cfg.prob_low_low_list) {
                                CellSpec c;
                                c.model = cfg.model;
                                c.n = n;
                                c.low_fraction = pl;
                                c.prob_high_high = q1;
                                c.prob_mixed = q2;
                                c.prob_low_low = q3;
                                cells.push_back(c);
                            }
                break;
            case Model::Bipartite:
                for (double a : cfg.side_fraction_list)
                    for (double p : cfg.arc_prob_list) {
                        CellSpec c;
                        c.model = cfg.model;
                        c.n = n;
                        c.side_fraction = a;
                        c.arc_prob = p;
                        cells.push_back(c);
                    }
                break;
        }
    }
    return cells;
}

void write_csv(const ExperimentConfig& cfg, const std::vector<CellSpec>& cells,
               const std::vector<CellStats>& stats, std::ostream& out) {
    out << "# master_seed=" << cfg.master_seed << "\n";
    out << "model,n";
    for (const auto& p : param_names(cfg.model)) out << "," << p;
    out << ",graphs,agjs_mean,agjs_se,dneigh_mean,dneigh_se,dvar_mean,dvar_se\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out << model_name(cfg.model) << "," << cells[i].n;
        for (double v : param_values(cells[i])) out << "," << fmt_param(v);
        out << "," << stats[i].graphs << "," << fmt4(stats[i].agjs_mean) << ","
            << fmt4(stats[i].agjs_se) << "," << fmt4(stats[i].dneigh_mean) << ","
            << fmt4(stats[i].dneigh_se) << "," << fmt4(stats[i].dvar_mean) << ","
            << fmt4(stats[i].dvar_se) << "\n";
    }
}

void write_markdown(const ExperimentConfig& cfg, const std::vector<CellSpec>& cells,
                    const std::vector<CellStats>& stats, std::ostream& out) {
    const auto names = param_names(cfg.model);
    out << "| model | n |";
    for (const auto& p : names) out << " " << p << " |";
    out << " graphs | agjs | agjs_se | dneigh | dneigh_se | dvar | dvar_se |\n";
    out << "|---|---|";
    for (std::size_t i = 0; i < names.size(); ++i) out << "---|";
    out << "---|---|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out << "| " << model_name(cfg.model) << " | " << cells[i].n << " |";
        for (double v : param_values(cells[i])) out << " " << fmt_param(v) << " |";
        out << " " << stats[i].graphs << " | " << fmt4(stats[i].agjs_mean) << " | "
            << fmt4(stats[i].agjs_se) << " | " << fmt4(stats[i].dneigh_mean) << " | "
            << fmt4(stats[i].dneigh_se) << " | " << fmt4(stats[i].dvar_mean) << " | "
            << fmt4(stats[i].dvar_se) << " |\n";
    }
    out << "\nmaster_seed=" << cfg.master_seed << ", graphs per cell = "
        << cfg.graphs_per_cell << "\n";
}

void run_experiment(const ExperimentConfig& cfg, std::ostream& out) {
    const auto cells = expand_cells(cfg);
    std::vector<CellStats> stats(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        stats[i] = run_cell(cells[i], cfg.graphs_per_cell, cfg.master_seed, i, cfg.threads);
    if (cfg.format == ExperimentConfig::Format::Csv)
        write_csv(cfg, cells, stats, out);
    else
        write_markdown(cfg, cells, stats, out);
}

}  // namespace acyclic
