#pragma once

#include <cstdint>
#include <vector>

#include "kempe/colouring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

inline constexpr std::uint64_t default_state_cap = 10'000'000;

/// Connected component containing v of the subgraph induced by colours a and b.
/// Throws InputError when v is coloured neither a nor b, a == b, or a colour is out of range.
VertexSet kempe_chain(const Graph& g, const Colouring& c, Vertex v, Colour a, Colour b);

/// Exchanges a and b on kempe_chain(g, c, v, a, b).
Colouring kempe_swap(const Graph& g, const Colouring& c, Vertex v, Colour a, Colour b);

/// Every distinct colouring one Kempe swap away from c (c itself excluded),
/// in lexicographic order.
std::vector<Colouring> kempe_neighbours(const Graph& g, const Colouring& c);

/// Breadth-first search of the Kempe class of c1. Throws ResourceError when
/// more than `cap` colourings are visited without reaching c2.
bool are_kempe_equivalent(const Graph& g, const Colouring& c1, const Colouring& c2,
                          std::uint64_t cap = default_state_cap);

/// The full Kempe class of c, lexicographically sorted.
std::vector<Colouring> kempe_class_of(const Graph& g, const Colouring& c, std::uint64_t cap = default_state_cap);

struct KempeClass {
    std::uint64_t size = 0;
    /// Lexicographically least member.
    Colouring representative;
};

struct KempeClassReport {
    int k = 0;
    std::uint64_t total_colourings = 0;
    /// Ordered by representative.
    std::vector<KempeClass> classes;
    /// The enumeration stopped at the cap; classes cover only the colourings seen.
    bool cap_hit = false;
};

/// Partitions C_k(G) into Kempe classes by union-find over one-swap adjacency.
KempeClassReport kempe_classes(const Graph& g, int k, std::uint64_t cap = default_colouring_cap);

/// True iff C_k(G) is a single Kempe class. Throws ResourceError when the cap is
/// hit and InputError when G has no k-colouring.
bool is_kempe_connected_at(const Graph& g, int k, std::uint64_t cap = default_colouring_cap);

} // namespace kempe
