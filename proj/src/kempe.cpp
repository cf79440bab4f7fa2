#include "kempe/kempe.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>
#include <boost/pending/disjoint_sets.hpp>

#include "kempe/error.hpp"
#include "packed.hpp"

namespace kempe {

namespace {

void check_pair(const Colouring& c, Colour a, Colour b)
{
    if (a == b) {
        throw InputError("a Kempe chain needs two distinct colours");
    }
    if (a < 0 || b < 0 || a >= c.k() || b >= c.k()) {
        throw InputError("chain colours must lie in 0.." + std::to_string(c.k() - 1));
    }
}

// Grows the component of `seed` inside `within`.
VertexSet component_in(const Graph& g, const VertexSet& within, Vertex seed)
{
    VertexSet component(g.order());
    VertexSet frontier(g.order());
    frontier.insert(seed);
    while (!frontier.empty()) {
        component |= frontier;
        VertexSet next(g.order());
        frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
        frontier = (next & within) - component;
    }
    return component;
}

// Calls fn(chain) for every Kempe chain of the colour pair (a, b), chains in
// order of their smallest vertex.
template <typename Fn>
void for_each_chain(const Graph& g, const std::vector<VertexSet>& classes, Colour a, Colour b, Fn&& fn)
{
    VertexSet rest = classes[a] | classes[b];
    const VertexSet both = rest;
    while (!rest.empty()) {
        const VertexSet chain = component_in(g, both, rest.first());
        rest -= chain;
        fn(chain);
    }
}

// Word-sized variant of for_each_chain for graphs of order <= 64.
template <typename Fn>
void for_each_chain_small(const std::vector<std::uint64_t>& adj, std::uint64_t both, Fn&& fn)
{
    std::uint64_t rest = both;
    while (rest != 0) {
        std::uint64_t chain = rest & (~rest + 1);
        std::uint64_t frontier = chain;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t bits = frontier; bits != 0; bits &= bits - 1) {
                next |= adj[static_cast<std::size_t>(std::countr_zero(bits))];
            }
            frontier = next & both & ~chain;
            chain |= frontier;
        }
        rest &= ~chain;
        fn(chain);
    }
}

void swap_on(std::span<Colour> colours, const VertexSet& chain, Colour a, Colour b)
{
    chain.for_each([&](Vertex v) { colours[v] = colours[v] == a ? b : a; });
}

struct PackedHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept
    {
        return boost::hash_range(key.begin(), key.end());
    }
};

using PackedSet = std::unordered_set<std::vector<std::uint64_t>, PackedHash>;

// Breadth-first search over one Kempe class. Stops early when `target` is reached.
class ClassSearch {
public:
    ClassSearch(const Graph& g, const Colouring& start, std::uint64_t cap)
        : g_(g), k_(start.k()), cap_(cap), codec_(g.order(), start.k())
    {
        require_proper(g, start);
        queue_.push_back(start.colours());
        remember(start.colours());
    }

    bool run(const std::vector<Colour>* target)
    {
        if (target != nullptr && queue_.front() == *target) {
            return true;
        }
        while (!queue_.empty()) {
            std::vector<Colour> current = std::move(queue_.front());
            queue_.pop_front();
            const std::vector<VertexSet> classes = colour_classes(Colouring(k_, current));
            for (Colour a = 0; a < k_; ++a) {
                for (Colour b = a + 1; b < k_; ++b) {
                    bool found = false;
                    for_each_chain(g_, classes, a, b, [&](const VertexSet& chain) {
                        if (found) {
                            return;
                        }
                        std::vector<Colour> next = current;
                        swap_on(next, chain, a, b);
                        if (!remember(next)) {
                            return;
                        }
                        if (target != nullptr && next == *target) {
                            found = true;
                        }
                        queue_.push_back(std::move(next));
                    });
                    if (found) {
                        return true;
                    }
                }
            }
        }
        return false;
    }

    std::vector<Colouring> members() const
    {
        std::vector<Colouring> out;
        std::vector<Colour> colours(static_cast<std::size_t>(g_.order()));
        for (const auto& key : visited_) {
            codec_.decode(key.data(), colours);
            out.emplace_back(k_, colours);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    bool remember(const std::vector<Colour>& colours)
    {
        std::vector<std::uint64_t> key(static_cast<std::size_t>(codec_.words()));
        codec_.encode(colours, key.data());
        if (!visited_.insert(std::move(key)).second) {
            return false;
        }
        if (visited_.size() > cap_) {
            throw ResourceError("Kempe class search visited more than " + std::to_string(cap_) + " colourings",
                                cap_);
        }
        return true;
    }

    const Graph& g_;
    int k_;
    std::uint64_t cap_;
    detail::ColouringCodec codec_;
    PackedSet visited_;
    std::deque<std::vector<Colour>> queue_;
};

} // namespace

VertexSet kempe_chain(const Graph& g, const Colouring& c, Vertex v, Colour a, Colour b)
{
    require_proper(g, c);
    g.check_vertex(v);
    check_pair(c, a, b);
    if (c[v] != a && c[v] != b) {
        throw InputError("vertex " + std::to_string(v) + " is coloured neither " + std::to_string(a) + " nor "
                         + std::to_string(b));
    }
    const std::vector<VertexSet> classes = colour_classes(c);
    return component_in(g, classes[a] | classes[b], v);
}

Colouring kempe_swap(const Graph& g, const Colouring& c, Vertex v, Colour a, Colour b)
{
    const VertexSet chain = kempe_chain(g, c, v, a, b);
    std::vector<Colour> colours = c.colours();
    swap_on(colours, chain, a, b);
    return Colouring(c.k(), std::move(colours));
}

std::vector<Colouring> kempe_neighbours(const Graph& g, const Colouring& c)
{
    require_proper(g, c);
    const std::vector<VertexSet> classes = colour_classes(c);
    std::vector<Colouring> out;
    for (Colour a = 0; a < c.k(); ++a) {
        for (Colour b = a + 1; b < c.k(); ++b) {
            for_each_chain(g, classes, a, b, [&](const VertexSet& chain) {
                std::vector<Colour> colours = c.colours();
                swap_on(colours, chain, a, b);
                out.emplace_back(c.k(), std::move(colours));
            });
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool are_kempe_equivalent(const Graph& g, const Colouring& c1, const Colouring& c2, std::uint64_t cap)
{
    if (c1.k() != c2.k()) {
        throw InputError("colourings use different k");
    }
    require_proper(g, c2);
    ClassSearch search(g, c1, cap);
    return search.run(&c2.colours());
}

std::vector<Colouring> kempe_class_of(const Graph& g, const Colouring& c, std::uint64_t cap)
{
    ClassSearch search(g, c, cap);
    search.run(nullptr);
    return search.members();
}

KempeClassReport kempe_classes(const Graph& g, int k, std::uint64_t cap)
{
    KempeClassReport report;
    report.k = k;
    const detail::ColouringCodec codec(g.order(), k);
    const auto words = static_cast<std::size_t>(codec.words());
    detail::SortedColouringStore store(codec.words());

    std::vector<std::uint64_t> key(words);
    ColouringEnumerator stream(g, k, cap);
    try {
        while (stream.next()) {
            codec.encode(stream.current(), key.data());
            store.push(key.data());
        }
    } catch (const ResourceError&) {
        report.cap_hit = true;
    }
    const std::size_t total = store.size();
    report.total_colourings = total;

    boost::disjoint_sets_with_storage<> sets(total);
    std::vector<Colour> colours(static_cast<std::size_t>(g.order()));
    auto link = [&](std::size_t i) {
        codec.encode(colours, key.data());
        if (auto j = store.find(key.data())) {
            sets.union_set(i, *j);
        }
    };
    if (g.order() <= 64) {
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()), 0);
        for (auto [u, v] : g.edges()) {
            adj[u] |= std::uint64_t{1} << v;
            adj[v] |= std::uint64_t{1} << u;
        }
        std::vector<std::uint64_t> masks(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < total; ++i) {
            codec.decode(store.at(i), colours);
            std::fill(masks.begin(), masks.end(), 0);
            for (std::size_t v = 0; v < colours.size(); ++v) {
                masks[colours[v]] |= std::uint64_t{1} << v;
            }
            for (Colour a = 0; a < k; ++a) {
                for (Colour b = a + 1; b < k; ++b) {
                    const auto delta = static_cast<std::uint64_t>(a ^ b);
                    for_each_chain_small(adj, masks[a] | masks[b], [&](std::uint64_t chain) {
                        // The reverse swap links the same pair; only follow the one that
                        // raises the colour of the chain's lowest vertex, i.e. j > i.
                        if (colours[static_cast<std::size_t>(std::countr_zero(chain))] != a) {
                            return;
                        }
                        std::copy_n(store.at(i), words, key.data());
                        for (std::uint64_t bits = chain; bits != 0; bits &= bits - 1) {
                            codec.toggle(key.data(), std::countr_zero(bits), delta);
                        }
                        if (auto j = store.find(key.data())) {
                            sets.union_set(i, *j);
                        }
                    });
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < total; ++i) {
            codec.decode(store.at(i), colours);
            const std::vector<VertexSet> classes = colour_classes(Colouring(k, colours));
            for (Colour a = 0; a < k; ++a) {
                for (Colour b = a + 1; b < k; ++b) {
                    for_each_chain(g, classes, a, b, [&](const VertexSet& chain) {
                        swap_on(colours, chain, a, b);
                        link(i);
                        swap_on(colours, chain, a, b);
                    });
                }
            }
        }
    }

    // Scanning in index order visits each class first at its least member.
    std::vector<std::size_t> slot_of_root(total, total);
    for (std::size_t i = 0; i < total; ++i) {
        const std::size_t root = sets.find_set(i);
        if (slot_of_root[root] == total) {
            slot_of_root[root] = report.classes.size();
            codec.decode(store.at(i), colours);
            report.classes.push_back({0, Colouring(k, colours)});
        }
        ++report.classes[slot_of_root[root]].size;
    }
    return report;
}

bool is_kempe_connected_at(const Graph& g, int k, std::uint64_t cap)
{
    const KempeClassReport report = kempe_classes(g, k, cap);
    if (report.cap_hit) {
        throw ResourceError("colouring cap of " + std::to_string(cap) + " reached", report.total_colourings);
    }
    if (report.total_colourings == 0) {
        throw InputError("graph has no " + std::to_string(k) + "-colouring");
    }
    return report.classes.size() == 1;
}

} // namespace kempe
