#include "kempe/hereditary.hpp"

#include <algorithm>
#include <numeric>

#include "kempe/error.hpp"

namespace kempe {

namespace {

class InducedEmbedding {
public:
    InducedEmbedding(const Graph& g, const Graph& h)
        : g_(g), h_(h), order_(static_cast<std::size_t>(h.order())), image_(static_cast<std::size_t>(h.order()), -1),
          used_(g.order())
    {
        // High-degree pattern vertices first; they prune hardest.
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    }

    bool run() { return extend(0); }

private:
    bool extend(std::size_t depth)
    {
        if (depth == order_.size()) {
            return true;
        }
        const Vertex p = order_[depth];
        for (Vertex w = 0; w < g_.order(); ++w) {
            if (used_.contains(w) || g_.degree(w) < h_.degree(p) || !consistent(depth, p, w)) {
                continue;
            }
            image_[p] = w;
            used_.insert(w);
            if (extend(depth + 1)) {
                return true;
            }
            used_.erase(w);
            image_[p] = -1;
        }
        return false;
    }

    bool consistent(std::size_t depth, Vertex p, Vertex w) const
    {
        for (std::size_t i = 0; i < depth; ++i) {
            const Vertex q = order_[i];
            if (h_.adjacent(p, q) != g_.adjacent(w, image_[q])) {
                return false;
            }
        }
        return true;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
    VertexSet used_;
};

int pair_index(int n, int u, int v)
{
    // Position of (u, v), u < v, in lexicographic order of pairs.
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::uint32_t encode(const Graph& g, const std::vector<Vertex>& perm)
{
    std::uint32_t code = 0;
    const int n = g.order();
    for (auto [u, v] : g.edges()) {
        const int a = std::min(perm[u], perm[v]);
        const int b = std::max(perm[u], perm[v]);
        code |= std::uint32_t{1} << pair_index(n, a, b);
    }
    return code;
}

Graph decode(int n, std::uint32_t code)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if ((code >> pair_index(n, u, v)) & 1U) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

} // namespace

bool contains_induced(const Graph& g, const Graph& h, const InducedSearchLimits& limits)
{
    if (g.order() > limits.max_host || h.order() > limits.max_pattern) {
        throw ResourceError("induced-subgraph search exceeds its size caps",
                            static_cast<std::uint64_t>(std::max(g.order(), h.order())));
    }
    if (h.order() > g.order() || h.edge_count() > g.edge_count()) {
        return false;
    }
    return InducedEmbedding(g, h).run();
}

bool is_h_free(const Graph& g, const Graph& h, const InducedSearchLimits& limits)
{
    return !contains_induced(g, h, limits);
}

bool are_isomorphic(const Graph& g, const Graph& h)
{
    return g.order() == h.order() && g.edge_count() == h.edge_count() && contains_induced(g, h);
}

Graph named_graph(const std::string& name)
{
    if (name == "2K2") {
        return disjoint_union(complete_graph(2), complete_graph(2));
    }
    if (name == "3K1") {
        return Graph(3);
    }
    if (name == "P3+P1") {
        return disjoint_union(path_graph(3), Graph(1));
    }
    if (name == "prism") {
        return complement(cycle_graph(6));
    }
    if (name.size() == 2 && name[1] >= '1' && name[1] <= '8') {
        const int n = name[1] - '0';
        switch (name[0]) {
        case 'P':
            return path_graph(n);
        case 'K':
            return complete_graph(n);
        case 'C':
            if (n >= 3) {
                return cycle_graph(n);
            }
            break;
        default:
            break;
        }
    }
    throw InputError("unknown graph name '" + name + "'");
}

std::vector<std::string> named_graph_catalog()
{
    std::vector<std::string> names;
    for (char kind : {'P', 'C', 'K'}) {
        for (int n = kind == 'C' ? 3 : 1; n <= 8; ++n) {
            names.push_back(std::string(1, kind) + std::to_string(n));
        }
    }
    for (const char* extra : {"2K2", "3K1", "P3+P1", "prism"}) {
        names.emplace_back(extra);
    }
    return names;
}

bool is_induced_subgraph_of_p4(const Graph& h)
{
    return h.order() <= 4 && contains_induced(path_graph(4), h);
}

std::uint32_t canonical_code(const Graph& g)
{
    if (g.order() > 6) {
        throw ResourceError("canonical form by permutation is limited to 6 vertices",
                            static_cast<std::uint64_t>(g.order()));
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = encode(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        best = std::min(best, encode(g, perm));
    }
    return best;
}

CensusReport small_graph_census(int n)
{
    if (n > 6) {
        throw ResourceError("census is limited to n <= 6", static_cast<std::uint64_t>(n));
    }
    if (n < 1) {
        throw InputError("census needs n >= 1");
    }
    CensusReport report;
    report.n = n;
    const int pairs = n * (n - 1) / 2;
    const std::uint32_t labelled = std::uint32_t{1} << pairs;
    const Graph triangle = complete_graph(3);
    const Graph independent_triple(3);

    // Every labelled graph is visited once; its whole orbit is marked on first sight,
    // and the orbit minimum is the canonical member.
    std::vector<bool> seen(labelled, false);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (std::uint32_t code = 0; code < labelled; ++code) {
        if (seen[code]) {
            continue;
        }
        const Graph g = decode(n, code);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            seen[encode(g, perm)] = true;
        } while (std::next_permutation(perm.begin(), perm.end()));

        ++report.total_classes;
        if (contains_induced(g, triangle)) {
            ++report.group1;
        } else if (contains_induced(g, independent_triple)) {
            ++report.group2;
        } else {
            ++report.group3;
            report.group3_members.push_back(g);
        }
    }
    return report;
}

} // namespace kempe
