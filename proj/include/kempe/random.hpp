#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "kempe/colouring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

// Draws go through rng() % bound rather than std::uniform_int_distribution so
// a seed yields the same instances on every standard library.
using Rng = std::mt19937_64;

int draw(Rng& rng, int bound);

/// G(n, p) with p given in percent.
Graph random_graph(Rng& rng, int n, int edge_percent);

/// Built recursively by disjoint union and join, hence P4-free.
Graph random_cograph(Rng& rng, int n);

/// A uniformly shuffled relabelling of 0..n-1.
std::vector<Vertex> random_permutation(Rng& rng, int n);

/// A proper k-colouring found by randomized backtracking, or nullopt if none exists.
std::optional<Colouring> random_proper_colouring(Rng& rng, const Graph& g, int k);

} // namespace kempe
