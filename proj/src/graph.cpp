#include "kempe/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kempe/error.hpp"

namespace kempe {

namespace {

std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

} // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members) {
        if (v < 0 || v >= universe) {
            throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe - 1));
        }
        insert(v);
    }
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) {
        s.insert(v);
    }
    return s;
}

int VertexSet::size() const noexcept
{
    int total = 0;
    for (std::uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool VertexSet::empty() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Vertex VertexSet::first() const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
        }
    }
    return -1;
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= ~other.words_[w];
    }
    return *this;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) {
            return true;
        }
    }
    return false;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), VertexSet(n))
{
    if (n < 0) {
        throw InputError("negative vertex count");
    }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            throw InputError("self-loop at vertex " + std::to_string(u));
        }
        if (adjacent(u, v)) {
            throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
    }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
        adj_[u].for_each([&](Vertex v) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        });
    }
    return out;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_) {
        throw InputError("vertex " + std::to_string(v) + " is not in a graph of order " + std::to_string(n_));
    }
}

Graph complement(const Graph& g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) {
        edges.emplace_back(u + g.order(), v + g.order());
    }
    return Graph(g.order() + h.order(), edges);
}

Graph join(const Graph& g, const Graph& h)
{
    std::vector<Edge> edges = disjoint_union(g, h).edges();
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < h.order(); ++v) {
            edges.emplace_back(u, v + g.order());
        }
    }
    return Graph(g.order() + h.order(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order()) {
        throw InputError("vertex set belongs to a graph of a different order");
    }
    const std::vector<Vertex> members = s.members();
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        index[members[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (Vertex u : members) {
        (g.neighbours(u) & s).for_each([&](Vertex v) {
            if (u < v) {
                edges.emplace_back(index[u], index[v]);
            }
        });
    }
    return Graph(static_cast<int>(members.size()), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s)
{
    return induced_subgraph(g, VertexSet(g.order(), s));
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> components;
    VertexSet unseen = VertexSet::full(g.order());
    while (!unseen.empty()) {
        VertexSet component(g.order());
        VertexSet frontier(g.order());
        frontier.insert(unseen.first());
        while (!frontier.empty()) {
            component |= frontier;
            unseen -= frontier;
            VertexSet next(g.order());
            frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
            frontier = next & unseen;
        }
        components.push_back(std::move(component));
    }
    return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (perm.size() != static_cast<std::size_t>(g.order())) {
        throw InputError("permutation length differs from graph order");
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(perm[u], perm[v]);
    }
    return Graph(g.order(), edges);
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3) {
        throw InputError("a cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    }
    return Graph(n, edges);
}

namespace {

void check_limits(const Graph& g, const SearchLimits& limits)
{
    if (g.order() > limits.max_vertices) {
        throw ResourceError("graph of order " + std::to_string(g.order()) + " exceeds the exact-search cap of "
                                + std::to_string(limits.max_vertices),
                            static_cast<std::uint64_t>(g.order()));
    }
}

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<Vertex> run()
    {
        current_.clear();
        expand(VertexSet::full(g_.order()));
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(VertexSet candidates)
    {
        if (candidates.empty()) {
            if (current_.size() > best_.size()) {
                best_ = current_;
            }
            return;
        }
        while (!candidates.empty()) {
            if (current_.size() + static_cast<std::size_t>(candidates.size()) <= best_.size()) {
                return;
            }
            const Vertex v = candidates.first();
            current_.push_back(v);
            expand(candidates & g_.neighbours(v));
            current_.pop_back();
            candidates.erase(v);
        }
    }

    const Graph& g_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

// Backtracking k-colourability test over a fixed vertex order, with forward
// checking on the number of colours still open to each uncoloured vertex.
class ColourabilitySearch {
public:
    ColourabilitySearch(const Graph& g, std::vector<Vertex> order, int k)
        : g_(g), order_(std::move(order)), k_(k), colour_(static_cast<std::size_t>(g.order()), -1),
          blocked_(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(k), 0),
          open_(static_cast<std::size_t>(g.order()), k)
    {
    }

    bool run() { return assign(0, -1); }

    const std::vector<int>& assignment() const { return colour_; }

private:
    int& blocked(Vertex v, int c) { return blocked_[static_cast<std::size_t>(v) * k_ + c]; }

    bool place(Vertex v, int c)
    {
        colour_[v] = c;
        bool alive = true;
        g_.neighbours(v).for_each([&](Vertex u) {
            if (colour_[u] < 0 && blocked(u, c)++ == 0 && --open_[u] == 0) {
                alive = false;
            }
        });
        return alive;
    }

    void unplace(Vertex v, int c)
    {
        g_.neighbours(v).for_each([&](Vertex u) {
            if (colour_[u] < 0 && --blocked(u, c) == 0) {
                ++open_[u];
            }
        });
        colour_[v] = -1;
    }

    bool assign(std::size_t depth, int max_used)
    {
        if (depth == order_.size()) {
            return true;
        }
        const Vertex v = order_[depth];
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (blocked(v, c) != 0) {
                continue;
            }
            const bool alive = place(v, c);
            if (alive && assign(depth + 1, std::max(max_used, c))) {
                return true;
            }
            unplace(v, c);
        }
        return false;
    }

    const Graph& g_;
    std::vector<Vertex> order_;
    int k_;
    std::vector<int> colour_;
    std::vector<int> blocked_;
    std::vector<int> open_;
};

std::vector<Vertex> degree_order(const Graph& g)
{
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

std::vector<int> greedy_colouring(const Graph& g, const std::vector<Vertex>& order)
{
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v : order) {
        std::vector<bool> taken(static_cast<std::size_t>(g.order()) + 1, false);
        g.neighbours(v).for_each([&](Vertex u) {
            if (colour[u] >= 0) {
                taken[colour[u]] = true;
            }
        });
        int c = 0;
        while (taken[c]) {
            ++c;
        }
        colour[v] = c;
    }
    return colour;
}

} // namespace

std::vector<Vertex> maximum_clique(const Graph& g, const SearchLimits& limits)
{
    check_limits(g, limits);
    return CliqueSearch(g).run();
}

int clique_number(const Graph& g, const SearchLimits& limits)
{
    return static_cast<int>(maximum_clique(g, limits).size());
}

ExactColouring minimum_colouring(const Graph& g, const SearchLimits& limits)
{
    check_limits(g, limits);
    if (g.order() == 0) {
        throw InputError("chromatic number needs at least one vertex");
    }
    const std::vector<Vertex> order = degree_order(g);
    std::vector<int> best = greedy_colouring(g, order);
    const int upper = *std::max_element(best.begin(), best.end()) + 1;
    const int lower = clique_number(g, limits);
    for (int k = lower; k < upper; ++k) {
        ColourabilitySearch search(g, order, k);
        if (search.run()) {
            return {k, search.assignment()};
        }
    }
    return {upper, best};
}

int chromatic_number(const Graph& g, const SearchLimits& limits)
{
    return minimum_colouring(g, limits).chromatic_number;
}

} // namespace kempe
