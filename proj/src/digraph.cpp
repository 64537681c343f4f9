#include "acyclic/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace acyclic {

PairOverlap PairOverlap::transposed() const {
    PairOverlap t;
    t.in_in = in_in;
    t.out_out = out_out;
    t.in_out = out_in;
    t.out_in = in_out;
    t.all_in = in_all;
    t.in_all = all_in;
    t.all_out = out_all;
    t.out_all = all_out;
    t.all_all = all_all;
    switch (tag) {
        case PairCase::ArcUToV: t.tag = PairCase::ArcVToU; break;
        case PairCase::ArcVToU: t.tag = PairCase::ArcUToV; break;
        default: t.tag = tag; break;
    }
    return t;
}

Digraph Digraph::build(int n, std::span<const Arc> arc_list) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Digraph g;
    g.n_ = n;
    g.arcs_.reserve(arc_list.size());
    for (const auto& [u, v] : arc_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.arcs_.emplace_back(u, v);
    }
    std::sort(g.arcs_.begin(), g.arcs_.end());
    g.arcs_.erase(std::unique(g.arcs_.begin(), g.arcs_.end()), g.arcs_.end());

    g.out_.assign(n, {});
    g.in_.assign(n, {});
    for (const auto& [u, v] : g.arcs_) {
        g.out_[u].push_back(v);  // sorted already: arcs_ is sorted by (u,v)
        g.in_[v].push_back(u);
    }
    for (auto& lst : g.in_) std::sort(lst.begin(), lst.end());

    g.nbr_.assign(n, {});
    g.nbr_mask_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        const auto& os = g.out_[v];
        const auto& is = g.in_[v];
        auto& u_ = g.nbr_[v];
        auto& m_ = g.nbr_mask_[v];
        std::size_t i = 0, j = 0;
        while (i < is.size() || j < os.size()) {
            if (j == os.size() || (i < is.size() && is[i] < os[j])) {
                u_.push_back(is[i++]);
                m_.push_back(1);
            } else if (i == is.size() || os[j] < is[i]) {
                u_.push_back(os[j++]);
                m_.push_back(2);
            } else {
                u_.push_back(is[i]);
                m_.push_back(3);
                ++i, ++j;
            }
        }
    }
    return g;
}

bool Digraph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

VertexStats Digraph::stats(int v) const {
    check_vertex(v);
    VertexStats s;
    s.out_degree = static_cast<int>(out_[v].size());
    s.in_degree = static_cast<int>(in_[v].size());
    s.total_degree = static_cast<int>(nbr_[v].size());
    s.mutual_degree = s.out_degree + s.in_degree - s.total_degree;
    return s;
}

PairOverlap Digraph::pair_overlap(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("pair_overlap requires u != v");

    PairOverlap ov;
    const auto& a = nbr_[u];
    const auto& b = nbr_[v];
    const auto& ma = nbr_mask_[u];
    const auto& mb = nbr_mask_[v];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            const bool u_in = ma[i] & 1, u_out = ma[i] & 2;
            const bool v_in = mb[j] & 1, v_out = mb[j] & 2;
            ++ov.all_all;
            ov.in_all += u_in;
            ov.out_all += u_out;
            ov.all_in += v_in;
            ov.all_out += v_out;
            ov.in_in += u_in && v_in;
            ov.in_out += u_in && v_out;
            ov.out_in += u_out && v_in;
            ov.out_out += u_out && v_out;
            ++i, ++j;
        }
    }
    const bool uv = has_arc(u, v), vu = has_arc(v, u);
    ov.tag = uv ? (vu ? PairCase::TwoCycle : PairCase::ArcUToV)
                : (vu ? PairCase::ArcVToU : PairCase::Nonadjacent);
    return ov;
}

ComponentLabels Digraph::weak_components() const {
    ComponentLabels c;
    c.label.assign(n_, -1);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (c.label[s] != -1) continue;
        const int id = c.count++;
        c.label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : nbr_[v]) {
                if (c.label[w] == -1) {
                    c.label[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return c;
}

bool Digraph::is_acyclic_induced(std::span<const int> subset) const {
    std::vector<char> in_set(n_, 0);
    int size = 0;
    for (int v : subset) {
        check_vertex(v);
        if (!in_set[v]) {
            in_set[v] = 1;
            ++size;
        }
    }
    std::vector<int> indeg(n_, 0);
    for (int v = 0; v < n_; ++v) {
        if (!in_set[v]) continue;
        for (int w : out_[v])
            if (in_set[w]) ++indeg[w];
    }
    std::vector<int> queue;
    for (int v = 0; v < n_; ++v)
        if (in_set[v] && indeg[v] == 0) queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        ++removed;
        for (int w : out_[v])
            if (in_set[w] && --indeg[w] == 0) queue.push_back(w);
    }
    return removed == size;
}

Digraph Digraph::induced_subgraph(std::span<const int> vertices) const {
    std::vector<int> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> remap(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        remap[keep[i]] = static_cast<int>(i);
    }
    std::vector<Arc> arcs;
    for (int v : keep)
        for (int w : out_[v])
            if (remap[w] != -1) arcs.emplace_back(remap[v], remap[w]);
    return build(static_cast<int>(keep.size()), arcs);
}

namespace {

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    const char* p = line.data();
    const char* end = p + line.size();
    auto skip_ws = [&] { while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p; };
    skip_ws();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{}) return false;
    p = r1.ptr;
    skip_ws();
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{}) return false;
    p = r2.ptr;
    skip_ws();
    return p == end;
}

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (ch != ' ' && ch != '\t' && ch != '\r') return false;
    }
    return true;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;

    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        if (!parse_two_ints(line, n, m))
            throw ParseError(lineno, "expected header \"n m\"");
        if (n < 0 || m < 0) throw ParseError(lineno, "negative header value");
        break;
    }
    if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        if (seen == m) throw ParseError(lineno, "unexpected content after last arc");
        long long u, v;
        if (!parse_two_ints(line, u, v))
            throw ParseError(lineno, "expected arc \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " arcs, found " +
                                     std::to_string(seen));
    return Digraph::build(static_cast<int>(n), arcs);
}

std::string serialize_edge_list(const Digraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.arc_count()) + "\n";
    for (const auto& [u, v] : g.arcs())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

bool all_components_complete_symmetric(const Digraph& g) {
    const auto comp = g.weak_components();
    std::vector<std::vector<int>> members(comp.count);
    for (int v = 0; v < g.vertex_count(); ++v) members[comp.label[v]].push_back(v);
    for (const auto& c : members) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            // needs both arcs to every other member
            const auto want = static_cast<int>(c.size()) - 1;
            const auto s = g.stats(c[i]);
            if (s.mutual_degree != want || s.total_degree != want) return false;
        }
    }
    return true;
}

}  // namespace acyclic
