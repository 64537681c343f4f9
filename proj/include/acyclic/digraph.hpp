#ifndef ACYCLIC_DIGRAPH_HPP
#define ACYCLIC_DIGRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acyclic {

using Arc = std::pair<int, int>;

/// Out-degree, in-degree, |N(v)| and |N+(v) ∩ N-(v)| of one vertex.
/// total_degree counts a 2-cycle partner once, so
/// total_degree = out_degree + in_degree - mutual_degree.
struct VertexStats {
    int out_degree = 0;
    int in_degree = 0;
    int total_degree = 0;
    int mutual_degree = 0;
};

enum class PairCase { Nonadjacent, ArcUToV, ArcVToU, TwoCycle };

/// Neighborhood overlap counts for an ordered vertex pair (u,v).
/// Field names read <u-side>_<v-side>, each side one of in / out / all:
/// e.g. in_out = |N-(u) ∩ N+(v)|, all_in = |N(u) ∩ N-(v)|.
struct PairOverlap {
    int in_in = 0, in_out = 0, out_in = 0, out_out = 0;
    int all_in = 0, in_all = 0, all_out = 0, out_all = 0;
    int all_all = 0;
    PairCase tag = PairCase::Nonadjacent;

    /// The same overlaps viewed from the pair (v,u).
    PairOverlap transposed() const;
};

struct ComponentLabels {
    std::vector<int> label;  // per vertex, 0..count-1
    int count = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Simple loopless digraph on vertices 0..n-1, immutable after build().
/// Arcs are a set of ordered pairs; both (u,v) and (v,u) may be present.
/// Neighbor lists are kept sorted so every iteration order is deterministic.
class Digraph {
public:
    Digraph() = default;

    /// Rejects self-loops and out-of-range endpoints; duplicate arcs are
    /// deduplicated silently.
    static Digraph build(int n, std::span<const Arc> arc_list);
    static Digraph build(int n, std::initializer_list<Arc> arc_list) {
        return build(n, std::span<const Arc>(arc_list.begin(), arc_list.end()));
    }

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    const std::vector<int>& out_neighbors(int v) const { check_vertex(v); return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { check_vertex(v); return in_[v]; }
    /// Sorted union N(v) = N+(v) ∪ N-(v).
    const std::vector<int>& neighbors(int v) const { check_vertex(v); return nbr_[v]; }

    bool has_arc(int u, int v) const;

    VertexStats stats(int v) const;

    /// The nine overlap counts and the adjacency case for ordered (u,v).
    /// One merge pass over the two sorted neighbor lists. Requires u != v.
    PairOverlap pair_overlap(int u, int v) const;

    /// Connected components of the underlying undirected graph.
    ComponentLabels weak_components() const;

    /// True iff the subgraph induced by `subset` has no directed cycle
    /// (Kahn elimination restricted to the subset). Duplicates ignored.
    bool is_acyclic_induced(std::span<const int> subset) const;

    /// Subgraph induced by `vertices`, relabeled 0..k-1 in ascending order
    /// of the original ids.
    Digraph induced_subgraph(std::span<const int> vertices) const;

    bool operator==(const Digraph& o) const {
        return n_ == o.n_ && arcs_ == o.arcs_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<Arc> arcs_;  // sorted, unique
    std::vector<std::vector<int>> out_, in_, nbr_;
    // parallel to nbr_: bit 1 = in-neighbor, bit 2 = out-neighbor
    std::vector<std::vector<std::uint8_t>> nbr_mask_;
};

/// Text format: "n m" header, then m lines "u v"; '#' lines and blank
/// lines are ignored. Throws ParseError with a 1-based line number.
Digraph parse_edge_list(std::string_view text);

/// Canonical form: header plus arcs in sorted order, LF line ends.
/// parse(serialize(g)) == g.
std::string serialize_edge_list(const Digraph& g);

/// True iff every weak component induces a complete symmetric digraph
/// (arcs in both directions between all pairs of the component).
bool all_components_complete_symmetric(const Digraph& g);

}  // namespace acyclic

#endif
