#include "kempe/colouring.hpp"

#include <algorithm>
#include <string>

#include "kempe/error.hpp"

namespace kempe {

Colouring::Colouring(int k, std::vector<Colour> colours) : k_(k), colours_(std::move(colours))
{
    if (k < 1) {
        throw InputError("a colouring needs k >= 1");
    }
    for (Colour c : colours_) {
        if (c < 0 || c >= k) {
            throw InputError("colour " + std::to_string(c) + " outside 0.." + std::to_string(k - 1));
        }
    }
}

Colouring Colouring::padded(int k) const
{
    if (k < k_) {
        throw InputError("padding cannot reduce the number of colours");
    }
    return Colouring(k, colours_);
}

Partition::Partition(int n, std::vector<std::vector<Vertex>> classes) : n_(n)
{
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int covered = 0;
    for (auto& cls : classes) {
        if (cls.empty()) {
            continue;
        }
        std::sort(cls.begin(), cls.end());
        for (Vertex v : cls) {
            if (v < 0 || v >= n) {
                throw InputError("partition member " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
            }
            if (seen[v]) {
                throw InputError("vertex " + std::to_string(v) + " appears in two classes");
            }
            seen[v] = true;
            ++covered;
        }
        classes_.push_back(std::move(cls));
    }
    if (covered != n) {
        throw InputError("partition does not cover every vertex");
    }
    std::sort(classes_.begin(), classes_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Colouring Partition::to_colouring() const
{
    std::vector<Colour> colours(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (Vertex v : classes_[i]) {
            colours[v] = static_cast<Colour>(i);
        }
    }
    return Colouring(std::max<int>(1, static_cast<int>(classes_.size())), std::move(colours));
}

namespace {

void check_length(const Graph& g, const Colouring& c)
{
    if (c.size() != static_cast<std::size_t>(g.order())) {
        throw InputError("colouring has " + std::to_string(c.size()) + " entries but the graph has "
                         + std::to_string(g.order()) + " vertices");
    }
}

} // namespace

bool is_proper(const Graph& g, const Colouring& c)
{
    check_length(g, c);
    for (auto [u, v] : g.edges()) {
        if (c[u] == c[v]) {
            return false;
        }
    }
    return true;
}

void require_proper(const Graph& g, const Colouring& c)
{
    if (!is_proper(g, c)) {
        throw InputError("colouring is not proper");
    }
}

std::vector<VertexSet> colour_classes(const Colouring& c)
{
    const int n = static_cast<int>(c.size());
    std::vector<VertexSet> classes(static_cast<std::size_t>(c.k()), VertexSet(n));
    for (Vertex v = 0; v < n; ++v) {
        classes[c[v]].insert(v);
    }
    return classes;
}

Partition partition_of(const Colouring& c)
{
    std::vector<std::vector<Vertex>> classes;
    for (const VertexSet& cls : colour_classes(c)) {
        classes.push_back(cls.members());
    }
    return Partition(static_cast<int>(c.size()), std::move(classes));
}

int colours_used(const Colouring& c)
{
    std::vector<bool> used(static_cast<std::size_t>(c.k()), false);
    for (Colour x : c.colours()) {
        used[x] = true;
    }
    return static_cast<int>(std::count(used.begin(), used.end(), true));
}

ColouringEnumerator::ColouringEnumerator(const Graph& g, int k, std::uint64_t cap)
    : g_(g), k_(k), cap_(cap), colour_(static_cast<std::size_t>(g.order()), -1)
{
    if (k < 1) {
        throw InputError("k must be at least 1");
    }
    if (cap < 1) {
        throw InputError("cap must be at least 1");
    }
}

bool ColouringEnumerator::advance(std::size_t pos)
{
    const auto v = static_cast<Vertex>(pos);
    for (Colour c = colour_[pos] + 1; c < k_; ++c) {
        bool clash = false;
        g_.neighbours(v).for_each([&](Vertex u) { clash = clash || colour_[u] == c; });
        if (!clash) {
            colour_[pos] = c;
            return true;
        }
    }
    return false;
}

bool ColouringEnumerator::next()
{
    if (done_) {
        return false;
    }
    const std::size_t n = colour_.size();
    if (n == 0) {
        done_ = started_;
        started_ = true;
        produced_ += done_ ? 0 : 1;
        return !done_;
    }
    if (!started_) {
        started_ = true;
        depth_ = 0;
    } else {
        depth_ = n - 1;
    }
    for (;;) {
        if (advance(depth_)) {
            if (depth_ + 1 == n) {
                if (++produced_ > cap_) {
                    done_ = true;
                    throw ResourceError("more than " + std::to_string(cap_) + " colourings", cap_);
                }
                return true;
            }
            colour_[++depth_] = -1;
        } else {
            colour_[depth_] = -1;
            if (depth_ == 0) {
                done_ = true;
                return false;
            }
            --depth_;
        }
    }
}

std::vector<Colouring> enumerate_colourings(const Graph& g, int k, std::uint64_t cap)
{
    std::vector<Colouring> out;
    ColouringEnumerator stream(g, k, cap);
    while (stream.next()) {
        out.push_back(stream.colouring());
    }
    return out;
}

std::uint64_t count_colourings(const Graph& g, int k, std::uint64_t cap)
{
    ColouringEnumerator stream(g, k, cap);
    while (stream.next()) {
    }
    return stream.produced();
}

Colouring minimum_colouring_of(const Graph& g, const SearchLimits& limits)
{
    ExactColouring best = minimum_colouring(g, limits);
    return Colouring(best.chromatic_number, std::move(best.assignment));
}

} // namespace kempe
