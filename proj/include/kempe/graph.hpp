#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kempe {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Dense bitset over the vertex identifiers 0..universe-1 of a host graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::span<const Vertex> members);

    static VertexSet full(int universe);

    int universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept
    {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
    }
    void insert(Vertex v) noexcept { words_[static_cast<std::size_t>(v) >> 6] |= bit(v); }
    void erase(Vertex v) noexcept { words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v); }

    int size() const noexcept;
    bool empty() const noexcept;
    /// Smallest member, or -1 when empty.
    Vertex first() const noexcept;

    std::vector<Vertex> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
                fn(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
            }
        }
    }

    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& operator|=(const VertexSet& other) noexcept;
    VertexSet& operator-=(const VertexSet& other) noexcept;

    friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
    friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
    friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

    bool intersects(const VertexSet& other) const noexcept;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    static std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << (v & 63); }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    /// The graph with no vertices.
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    /// Throws InputError on loops, duplicate edges or endpoints outside 0..n-1.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].contains(v); }
    const VertexSet& neighbours(Vertex v) const noexcept { return adj_[v]; }
    int degree(Vertex v) const noexcept { return adj_[v].size(); }

    /// Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Throws InputError if v is not a vertex of this graph.
    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Caps for the exponential searches.
struct SearchLimits {
    int max_vertices = 64;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& g, const Graph& h);
/// Vertices are relabelled 0..|s|-1 in increasing order of their ids in g.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Same vertex count, edge set mapped through `perm` (new id of vertex v is perm[v]).
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// An optimal colouring together with its colour count.
struct ExactColouring {
    int chromatic_number = 0;
    std::vector<int> assignment;
};

int clique_number(const Graph& g, const SearchLimits& limits = {});
/// A maximum clique, members ascending.
std::vector<Vertex> maximum_clique(const Graph& g, const SearchLimits& limits = {});
int chromatic_number(const Graph& g, const SearchLimits& limits = {});
ExactColouring minimum_colouring(const Graph& g, const SearchLimits& limits = {});

} // namespace kempe
