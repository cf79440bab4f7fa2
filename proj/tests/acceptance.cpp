// Acceptance suite: one PASS/FAIL line per criterion. Each line combines the
// library's own criterion check with independent recomputation in oracle.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kempe/families.hpp"
#include "kempe/frozen.hpp"
#include "kempe/graph.hpp"
#include "kempe/hereditary.hpp"
#include "kempe/kempe.hpp"
#include "kempe/random.hpp"
#include "kempe/verify.hpp"
#include "oracle.hpp"

using namespace kempe;

namespace {

struct Oracle {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            failures.push_back(what);
        }
    }
};

// Number of pairwise non-isomorphic graphs on n vertices split as in the census.
std::vector<int> census_by_brute_force(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<int> perm(n);
    std::set<std::uint32_t> seen;
    std::vector<int> groups(4, 0);
    const Graph k3 = complete_graph(3);
    const Graph i3(3);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::uint32_t best = mask;
        for (int i = 0; i < n; ++i) {
            perm[i] = i;
        }
        do {
            std::uint32_t code = 0;
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                if ((mask >> e) & 1u) {
                    int a = perm[pairs[e].first];
                    int b = perm[pairs[e].second];
                    if (a > b) {
                        std::swap(a, b);
                    }
                    for (std::size_t f = 0; f < pairs.size(); ++f) {
                        if (pairs[f] == std::pair{a, b}) {
                            code |= 1u << f;
                        }
                    }
                }
            }
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(best).second) {
            continue;
        }
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            if ((best >> e) & 1u) {
                edges.push_back(pairs[e]);
            }
        }
        const Graph g(n, edges);
        ++groups[0];
        if (oracle::contains_induced(g, k3)) {
            ++groups[1];
        } else if (oracle::contains_induced(g, i3)) {
            ++groups[2];
        } else {
            ++groups[3];
        }
    }
    return groups;
}

void prism_oracle(Oracle& o)
{
    const auto prism = gen_prism();
    o.expect(oracle::all_colourings(prism.graph, 3).size() == 12, "brute-force count is not 12");
    o.expect(oracle::class_sizes(prism.graph, 3) == std::vector<std::size_t>{6, 6}, "reference classes are not 6 + 6");
    std::set<oracle::Assignment> reach{prism.left.colours()};
    std::vector<oracle::Assignment> todo{prism.left.colours()};
    while (!todo.empty()) {
        const auto c = todo.back();
        todo.pop_back();
        for (const auto& d : oracle::neighbours(prism.graph, c, 3)) {
            if (reach.insert(d).second) {
                todo.push_back(d);
            }
        }
    }
    o.expect(reach.count(prism.right.colours()) == 0, "reference search links left and right");
}

void fig1_oracle(Oracle& o)
{
    const auto f = gen_fig1();
    o.expect(f.graph.order() == 14, "order is not 14");
    o.expect(!oracle::contains_induced(f.graph, complete_graph(3)), "reference finds a triangle");
    o.expect(oracle::chromatic_number(f.graph) == 3, "reference chromatic number is not 3");
    o.expect(oracle::kempe_frozen(f.graph, f.left.colours(), 3), "left colouring fails the definition");
    o.expect(oracle::class_sizes(f.graph, 3).size() >= 2, "reference finds one class");
}

void fig2_oracle(Oracle& o)
{
    const auto f = gen_fig2();
    o.expect(f.graph.order() == 15, "order is not 15");
    o.expect(!oracle::contains_induced(f.graph, cycle_graph(4)), "reference finds an induced C4");
    o.expect(oracle::chromatic_number(f.graph) == 3, "reference chromatic number is not 3");
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            std::vector<int> within;
            for (int v = 0; v < 15; ++v) {
                if (f.left[v] == a || f.left[v] == b) {
                    within.push_back(v);
                }
            }
            int edges = 0;
            int max_degree = 0;
            for (int x : within) {
                int d = 0;
                for (int y : within) {
                    d += f.graph.adjacent(x, y) ? 1 : 0;
                }
                edges += d;
                max_degree = std::max(max_degree, d);
            }
            o.expect(within.size() == 10 && edges / 2 == 9 && max_degree == 2 && oracle::connected(f.graph, within),
                     "class pair " + std::to_string(a + 1) + "," + std::to_string(b + 1) + " is not a Hamiltonian path");
        }
    }
}

void dq_oracle(Oracle& o)
{
    const std::map<int, int> chi{{2, 4}, {3, 6}, {4, 7}};
    for (auto [q, expected] : chi) {
        const auto d = gen_dq(q);
        o.expect(d.graph.order() == 4 * q + 2, "D_" + std::to_string(q) + " order");
        o.expect(oracle::kempe_frozen(d.graph, d.colouring.colours(), 2 * q + 1),
                 "psi of D_" + std::to_string(q) + " fails the definition");
        o.expect(oracle::chromatic_number_is(d.graph, expected, minimum_colouring(d.graph).assignment),
                 "reference chromatic number of D_" + std::to_string(q));
        o.expect(!oracle::contains_induced(d.graph, disjoint_union(path_graph(2), path_graph(2))),
                 "reference finds 2K2 in D_" + std::to_string(q));
    }
    o.expect(oracle::class_sizes(gen_dq(2).graph, 5).size() >= 2, "reference finds one class for D_2 at k = 5");
}

void yr_oracle(Oracle& o)
{
    for (int r = 2; r <= 3; ++r) {
        const auto y = gen_yr(r);
        o.expect(oracle::kempe_frozen(y.graph, y.colouring.colours(), 3 * r),
                 "zeta of Y_" + std::to_string(r) + " fails the definition");
        o.expect(oracle::proper(y.graph, yr_triangle_colouring(r).colours()), "triangle colouring not proper");
    }
    o.expect(oracle::chromatic_number_is(gen_yr(2).graph, 4, yr_triangle_colouring(2).colours()),
             "reference chromatic number of Y_2");
    o.expect(oracle::chromatic_number_is(gen_yr(3).graph, 6, yr_triangle_colouring(3).colours()),
             "reference chromatic number of Y_3");
    o.expect(!oracle::contains_induced(gen_yr(2).graph, disjoint_union(path_graph(2), path_graph(2))),
             "reference finds 2K2 in Y_2");
}

void hk_oracle(Oracle& o)
{
    for (int k = 4; k <= 5; ++k) {
        const auto h = gen_hk(k);
        o.expect(oracle::kempe_frozen(h.graph, h.left.colours(), k), "left colouring of H_" + std::to_string(k));
        o.expect(oracle::proper(h.graph, h.right.colours()), "right colouring of H_" + std::to_string(k));
        o.expect(partition_of(h.left) != partition_of(h.right), "partitions agree for H_" + std::to_string(k));
    }
}

void extension_oracle(Oracle& o)
{
    const auto d = gen_dq(2);
    const Colouring beta = minimum_colouring_of(d.graph).padded(4);
    bool any = false;
    for (const auto& cand : find_op2k2_candidates(d.graph, beta, d.colouring)) {
        if (!cand.no_anticomplete_edge) {
            continue;
        }
        const auto result = apply_op_2k2({d.graph, beta, d.colouring, cand.x, cand.y});
        any = true;
        o.expect(oracle::chromatic_number_is(result.graph, 5, result.beta_prime.colours()),
                 "reference chromatic number of the extension");
        o.expect(!oracle::contains_induced(result.graph, disjoint_union(path_graph(2), path_graph(2))),
                 "reference finds 2K2 in the extension");
        o.expect(oracle::kempe_frozen(result.graph, result.gamma_prime.colours(), 6),
                 "extended colouring fails the definition");
    }
    o.expect(any, "no candidate meets the side condition");
}

void cograph_oracle(Oracle& o)
{
    Rng rng(97);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_cograph(rng, 2 + draw(rng, 5));
        o.expect(!oracle::contains_induced(g, path_graph(4)), "random cograph contains P4");
        const int chi = oracle::chromatic_number(g);
        for (int k = chi; k <= chi + 2; ++k) {
            o.expect(oracle::class_sizes(g, k).size() == 1, "reference finds a cograph that is not Kempe connected");
        }
    }
}

void census_oracle(Oracle& o)
{
    o.expect(census_by_brute_force(5) == std::vector<int>{34, 20, 13, 1}, "brute-force census is not 34 = 20 + 13 + 1");
}

void property_oracle(Oracle& o)
{
    // Colouring / complement clique partition duality, straight from the definitions.
    for (const auto& [g, c] : {std::pair{gen_prism().graph, gen_prism().left}, std::pair{gen_dq(2).graph, gen_dq(2).colouring}}) {
        o.expect(oracle::kempe_frozen(g, c.colours(), c.k())
                     == is_kempe_frozen_clique_partition(complement(g), partition_of(c)),
                 "clique partition test disagrees with the definition");
    }
}

} // namespace

int main(int argc, char** argv)
{
    verify::Options options;
    options.fast = argc > 1 && std::string(argv[1]) == "--fast";
    const std::map<int, std::function<void(Oracle&)>> oracles{
        {1, prism_oracle},   {2, fig1_oracle},      {3, fig2_oracle},     {4, dq_oracle},
        {5, yr_oracle},      {6, hk_oracle},        {7, extension_oracle}, {8, cograph_oracle},
        {9, census_oracle},  {10, property_oracle},
    };
    int failed = 0;
    for (const auto& criterion : verify::criteria()) {
        const verify::CriterionResult result = criterion.run(options);
        Oracle o;
        const auto start = std::chrono::steady_clock::now();
        oracles.at(criterion.id)(o);
        const double oracle_seconds
            = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = result.passed() && o.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("criterion %2d %s  %-70s (%.2fs of %.0fs, reference %.2fs)\n", criterion.id, ok ? "PASS" : "FAIL",
                    result.title.c_str(), result.seconds, result.budget_seconds, oracle_seconds);
        for (const auto& f : result.failures) {
            std::printf("    library: %s\n", f.c_str());
        }
        if (!result.within_budget()) {
            std::printf("    library: over the time budget\n");
        }
        for (const auto& f : o.failures) {
            std::printf("    reference: %s\n", f.c_str());
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(verify::criteria().size()) - failed,
                verify::criteria().size());
    return failed == 0 ? 0 : 1;
}
