#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

struct InducedSearchLimits {
    int max_host = 64;
    int max_pattern = 8;
};

/// True iff some injective map embeds h into g as an induced subgraph.
/// Throws ResourceError beyond the limits.
bool contains_induced(const Graph& g, const Graph& h, const InducedSearchLimits& limits = {});

bool is_h_free(const Graph& g, const Graph& h, const InducedSearchLimits& limits = {});

/// Isomorphism test for small graphs (order <= the pattern cap).
bool are_isomorphic(const Graph& g, const Graph& h);

/// P1..P8, C3..C8, K1..K8, 2K2, 3K1, P3+P1, prism. Throws InputError otherwise.
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_catalog();

bool is_induced_subgraph_of_p4(const Graph& h);

struct CensusReport {
    int n = 0;
    int total_classes = 0;
    /// Contain a triangle.
    int group1 = 0;
    /// Triangle-free, contain 3K1.
    int group2 = 0;
    /// Neither.
    int group3 = 0;
    /// One canonical representative per group-3 class.
    std::vector<Graph> group3_members;
};

/// Classifies every isomorphism class of graphs on n vertices. Throws
/// ResourceError for n > 6.
CensusReport small_graph_census(int n);

/// Minimum adjacency code over all vertex permutations; bit i of the code is the
/// i-th pair (u < v) in lexicographic order. Order <= 6.
std::uint32_t canonical_code(const Graph& g);

} // namespace kempe
