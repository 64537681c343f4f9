#ifndef ACYCLIC_EXPERIMENTS_HPP
#define ACYCLIC_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "acyclic/digraph.hpp"

namespace acyclic {

/// Everything `bounds` prints for one graph. The deltas are the
/// improvements of the two refinements over the plain AGJS sum.
struct BoundsReport {
    int n = 0;
    int arcs = 0;
    int components = 0;
    double agjs = 0.0;
    double gruber = 0.0;
    double neighborhood = 0.0;
    double delta_neigh = 0.0;
    double fvs_variance = 0.0;
    double variance_bound = 0.0;
    double delta_var = 0.0;
    bool degenerate = false;
};

BoundsReport compute_bounds_report(const Digraph& g);

enum class Model { ErdosRenyi, TwoType, Bipartite };

const char* model_name(Model m);

/// One table cell: a model, a size and a full parameter assignment.
struct CellSpec {
    Model model = Model::ErdosRenyi;
    int n = 0;
    double arc_prob = 0.0;       // er, bipartite
    double low_fraction = 0.0;   // two-type
    double prob_high_high = 0.0;
    double prob_mixed = 0.0;
    double prob_low_low = 0.0;
    double side_fraction = 0.0;  // bipartite
};

struct CellStats {
    int graphs = 0;
    double agjs_mean = 0.0, agjs_se = 0.0;
    double dneigh_mean = 0.0, dneigh_se = 0.0;
    double dvar_mean = 0.0, dvar_se = 0.0;
};

Digraph generate_for_cell(const CellSpec& cell, std::uint64_t seed);

/// Exact per-graph bounds averaged over graphs_per_cell instances; the
/// graph seeds come from derive_seed(master_seed, cell_index, i), so the
/// result is independent of thread count.
CellStats run_cell(const CellSpec& cell, int graphs_per_cell, std::uint64_t master_seed,
                   std::uint64_t cell_index, int threads = 0);

struct ExperimentConfig {
    Model model = Model::ErdosRenyi;
    std::vector<int> n_list;
    std::vector<double> arc_prob_list{0.0};
    std::vector<double> low_fraction_list{0.0};
    std::vector<double> prob_high_high_list{0.0};
    std::vector<double> prob_mixed_list{0.0};
    std::vector<double> prob_low_low_list{0.0};
    std::vector<double> side_fraction_list{0.0};
    int graphs_per_cell = 1;
    std::uint64_t master_seed = 0;
    enum class Format { Csv, Markdown } format = Format::Csv;
    int threads = 0;
};

/// Cartesian product of the relevant parameter lists, n outermost, in
/// declaration order. Cell index = position in this vector.
std::vector<CellSpec> expand_cells(const ExperimentConfig& cfg);

void write_csv(const ExperimentConfig& cfg, const std::vector<CellSpec>& cells,
               const std::vector<CellStats>& stats, std::ostream& out);
void write_markdown(const ExperimentConfig& cfg, const std::vector<CellSpec>& cells,
                    const std::vector<CellStats>& stats, std::ostream& out);

/// Runs every cell and writes the table in the configured format.
void run_experiment(const ExperimentConfig& cfg, std::ostream& out);

}  // namespace acyclic

#endif
