#pragma once

// Slow reference implementations used to cross-check the library. They share no
// code with it beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <vector>

#include "kempe/graph.hpp"

namespace oracle {

using Assignment = std::vector<int>;

inline bool proper(const kempe::Graph& g, const Assignment& c)
{
    for (auto [u, v] : g.edges()) {
        if (c[u] == c[v]) {
            return false;
        }
    }
    return true;
}

// Every proper k-colouring, found by counting through all k^n assignments.
inline std::vector<Assignment> all_colourings(const kempe::Graph& g, int k)
{
    const int n = g.order();
    std::vector<Assignment> out;
    Assignment c(n, 0);
    while (true) {
        if (proper(g, c)) {
            out.push_back(c);
        }
        int pos = n - 1;
        while (pos >= 0 && c[pos] == k - 1) {
            c[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++c[pos];
    }
    return out;
}

inline int chromatic_number(const kempe::Graph& g)
{
    for (int k = 1;; ++k) {
        if (!all_colourings(g, k).empty()) {
            return k;
        }
    }
}

// Largest clique by checking every vertex subset.
inline int clique_number(const kempe::Graph& g)
{
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << g.order()); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) {
            continue;
        }
        bool clique = true;
        for (int u = 0; u < g.order() && clique; ++u) {
            for (int v = u + 1; v < g.order() && clique; ++v) {
                clique = !((mask >> u) & 1u) || !((mask >> v) & 1u) || g.adjacent(u, v);
            }
        }
        if (clique) {
            best = size;
        }
    }
    return best;
}

// chi == expected, shown by a clique of that size and a proper colouring using
// at most that many colours.
inline bool chromatic_number_is(const kempe::Graph& g, int expected, const Assignment& colouring)
{
    return oracle::clique_number(g) == expected && proper(g, colouring)
           && *std::max_element(colouring.begin(), colouring.end()) < expected;
}

inline std::vector<int> chain(const kempe::Graph& g, const Assignment& c, int v, int a, int b)
{
    std::vector<int> seen{v};
    std::deque<int> queue{v};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y = 0; y < g.order(); ++y) {
            if (g.adjacent(x, y) && (c[y] == a || c[y] == b)
                && std::find(seen.begin(), seen.end(), y) == seen.end()) {
                seen.push_back(y);
                queue.push_back(y);
            }
        }
    }
    return seen;
}

inline std::set<Assignment> neighbours(const kempe::Graph& g, const Assignment& c, int k)
{
    std::set<Assignment> out;
    for (int v = 0; v < g.order(); ++v) {
        for (int b = 0; b < k; ++b) {
            if (b == c[v]) {
                continue;
            }
            Assignment next = c;
            for (int x : chain(g, c, v, c[v], b)) {
                next[x] = c[x] == c[v] ? b : c[v];
            }
            out.insert(next);
        }
    }
    return out;
}

// Sizes of the Kempe classes of C_k(g), sorted descending.
inline std::vector<std::size_t> class_sizes(const kempe::Graph& g, int k)
{
    std::set<Assignment> unseen;
    for (auto& c : all_colourings(g, k)) {
        unseen.insert(c);
    }
    std::vector<std::size_t> sizes;
    while (!unseen.empty()) {
        std::deque<Assignment> queue{*unseen.begin()};
        unseen.erase(unseen.begin());
        std::size_t size = 0;
        while (!queue.empty()) {
            Assignment c = queue.front();
            queue.pop_front();
            ++size;
            for (const auto& next : neighbours(g, c, k)) {
                if (unseen.erase(next) != 0) {
                    queue.push_back(next);
                }
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

// Induced containment by trying every injective map of h into g.
inline bool contains_induced(const kempe::Graph& g, const kempe::Graph& h)
{
    const int n = g.order();
    const int p = h.order();
    if (p > n) {
        return false;
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != p) {
            continue;
        }
        std::vector<int> chosen;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1u) {
                chosen.push_back(v);
            }
        }
        do {
            bool ok = true;
            for (int i = 0; i < p && ok; ++i) {
                for (int j = i + 1; j < p && ok; ++j) {
                    ok = h.adjacent(i, j) == g.adjacent(chosen[i], chosen[j]);
                }
            }
            if (ok) {
                return true;
            }
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
    return false;
}

inline bool connected(const kempe::Graph& g, const std::vector<int>& within)
{
    if (within.empty()) {
        return true;
    }
    std::vector<int> seen{within.front()};
    for (std::size_t i = 0; i < seen.size(); ++i) {
        for (int y : within) {
            if (g.adjacent(seen[i], y) && std::find(seen.begin(), seen.end(), y) == seen.end()) {
                seen.push_back(y);
            }
        }
    }
    return seen.size() == within.size();
}

// Kempe frozen straight from the definition: all k colours used and each pair of
// colour classes induces a connected subgraph.
inline bool kempe_frozen(const kempe::Graph& g, const Assignment& c, int k)
{
    for (int a = 0; a < k; ++a) {
        if (std::find(c.begin(), c.end(), a) == c.end()) {
            return false;
        }
        for (int b = a + 1; b < k; ++b) {
            std::vector<int> within;
            for (int v = 0; v < g.order(); ++v) {
                if (c[v] == a || c[v] == b) {
                    within.push_back(v);
                }
            }
            if (!connected(g, within)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace oracle
