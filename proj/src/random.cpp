#include "kempe/random.hpp"

#include <numeric>

namespace kempe {

int draw(Rng& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

Graph random_graph(Rng& rng, int n, int edge_percent)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (draw(rng, 100) < edge_percent) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

Graph random_cograph(Rng& rng, int n)
{
    if (n <= 1) {
        return Graph(n);
    }
    const int left = 1 + draw(rng, n - 1);
    const Graph a = random_cograph(rng, left);
    const Graph b = random_cograph(rng, n - left);
    return draw(rng, 2) == 0 ? disjoint_union(a, b) : join(a, b);
}

std::vector<Vertex> random_permutation(Rng& rng, int n)
{
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[draw(rng, i + 1)]);
    }
    return perm;
}

namespace {

bool fill(Rng& rng, const Graph& g, int k, std::vector<Colour>& colour, Vertex v)
{
    if (v == g.order()) {
        return true;
    }
    const std::vector<Vertex> order = random_permutation(rng, k);
    for (Colour c : order) {
        bool clash = false;
        g.neighbours(v).for_each([&](Vertex u) { clash = clash || colour[u] == c; });
        if (clash) {
            continue;
        }
        colour[v] = c;
        if (fill(rng, g, k, colour, v + 1)) {
            return true;
        }
        colour[v] = -1;
    }
    return false;
}

} // namespace

std::optional<Colouring> random_proper_colouring(Rng& rng, const Graph& g, int k)
{
    std::vector<Colour> colour(static_cast<std::size_t>(g.order()), -1);
    if (!fill(rng, g, k, colour, 0)) {
        return std::nullopt;
    }
    return Colouring(k, std::move(colour));
}

} // namespace kempe
