#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

using Colour = int;

/// Assignment vertex -> colour in 0..k-1. Properness is not an invariant of the
/// type; improper assignments stay representable so they can be reported.
class Colouring {
public:
    Colouring() = default;
    /// Throws InputError when k < 1 or an entry is outside 0..k-1.
    Colouring(int k, std::vector<Colour> colours);

    int k() const noexcept { return k_; }
    std::size_t size() const noexcept { return colours_.size(); }
    Colour operator[](Vertex v) const noexcept { return colours_[static_cast<std::size_t>(v)]; }
    const std::vector<Colour>& colours() const noexcept { return colours_; }

    /// Same assignment read as a colouring with more colours available.
    Colouring padded(int k) const;

    friend bool operator==(const Colouring&, const Colouring&) = default;
    friend auto operator<=>(const Colouring&, const Colouring&) = default;

private:
    int k_ = 1;
    std::vector<Colour> colours_;
};

/// Label-erased colour classes: each class ascending, classes ordered by their
/// smallest member, empty classes dropped.
class Partition {
public:
    Partition() = default;
    /// Canonicalizes `classes`; throws InputError unless they are disjoint,
    /// nonempty and cover 0..n-1.
    Partition(int n, std::vector<std::vector<Vertex>> classes);

    int order() const noexcept { return n_; }
    const std::vector<std::vector<Vertex>>& classes() const noexcept { return classes_; }
    std::size_t size() const noexcept { return classes_.size(); }

    /// Colour i on the members of the i-th class.
    Colouring to_colouring() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> classes_;
};

bool is_proper(const Graph& g, const Colouring& c);
/// Throws InputError when `c` is not a proper colouring of `g`.
void require_proper(const Graph& g, const Colouring& c);

/// Index i holds the vertices of colour i; length k, possibly with empty entries.
std::vector<VertexSet> colour_classes(const Colouring& c);
Partition partition_of(const Colouring& c);
/// Number of distinct colours actually used.
int colours_used(const Colouring& c);

inline constexpr std::uint64_t default_colouring_cap = 10'000'000;

/// Streams the proper k-colourings of a graph in lexicographic order of their
/// assignment vectors. Producing more than `cap` of them raises ResourceError.
class ColouringEnumerator {
public:
    ColouringEnumerator(const Graph& g, int k, std::uint64_t cap = default_colouring_cap);

    /// Advances to the next colouring; false once the stream is exhausted.
    bool next();
    /// Current assignment; valid after next() returned true.
    std::span<const Colour> current() const noexcept { return colour_; }
    Colouring colouring() const { return Colouring(k_, colour_); }
    std::uint64_t produced() const noexcept { return produced_; }

private:
    bool advance(std::size_t pos);

    const Graph& g_;
    int k_;
    std::uint64_t cap_;
    std::uint64_t produced_ = 0;
    std::vector<Colour> colour_;
    std::size_t depth_ = 0;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Colouring> enumerate_colourings(const Graph& g, int k, std::uint64_t cap = default_colouring_cap);
std::uint64_t count_colourings(const Graph& g, int k, std::uint64_t cap = default_colouring_cap);

/// Exact minimum colouring with k = chi(G).
Colouring minimum_colouring_of(const Graph& g, const SearchLimits& limits = {});

} // namespace kempe
