#include <doctest.h>

#include "kempe/error.hpp"
#include "kempe/families.hpp"
#include "kempe/graph.hpp"
#include "kempe/random.hpp"
#include "../oracle.hpp"

using namespace kempe;

TEST_CASE("construction rejects loops, duplicates and bad endpoints")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), InputError);
    const Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_THROWS_AS(g.check_vertex(4), InputError);
}

TEST_CASE("complement of K3 is edgeless and complement is an involution")
{
    const Graph c = complement(complete_graph(3));
    CHECK(c.order() == 3);
    CHECK(c.edge_count() == 0);
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        const Graph g = random_graph(rng, 1 + draw(rng, 9), 50);
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count()
              == static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
    }
}

TEST_CASE("join and disjoint union")
{
    const Graph j = join(complete_graph(2), complete_graph(3));
    CHECK(j == complete_graph(5));
    const Graph u = disjoint_union(path_graph(2), path_graph(3));
    CHECK(u.order() == 5);
    CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}});
    const auto comps = connected_components(u);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].members() == std::vector<Vertex>{0, 1});
    CHECK(comps[1].members() == std::vector<Vertex>{2, 3, 4});
    CHECK_FALSE(is_connected(u));
    CHECK(is_connected(j));
}

TEST_CASE("components are ordered by smallest member")
{
    const Graph g(6, {{4, 5}, {1, 3}, {0, 5}});
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].members() == std::vector<Vertex>{0, 4, 5});
    CHECK(comps[1].members() == std::vector<Vertex>{1, 3});
    CHECK(comps[2].members() == std::vector<Vertex>{2});
}

TEST_CASE("induced subgraph relabels in increasing order")
{
    const Graph c5 = cycle_graph(5);
    const std::vector<Vertex> s{0, 1, 2, 3};
    CHECK(induced_subgraph(c5, s) == path_graph(4));
    const std::vector<Vertex> t{0, 2, 4};
    CHECK(induced_subgraph(c5, t).edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("relabel keeps the edge count")
{
    const Graph p = path_graph(4);
    const std::vector<Vertex> perm{3, 2, 1, 0};
    CHECK(relabel(p, perm) == p);
    const std::vector<Vertex> perm2{1, 0, 2, 3};
    CHECK(relabel(p, perm2).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
}

TEST_CASE("chromatic and clique numbers of small graphs")
{
    CHECK(chromatic_number(Graph(1)) == 1);
    CHECK(chromatic_number(Graph(4)) == 1);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(complete_graph(6)) == 6);
    CHECK(maximum_clique(gen_prism().graph) == std::vector<Vertex>{0, 1, 2});
    CHECK_THROWS_AS(chromatic_number(Graph()), InputError);
    CHECK_THROWS_AS(chromatic_number(Graph(70)), ResourceError);
}

TEST_CASE("minimum colouring is proper and optimal against brute force")
{
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        const Graph g = random_graph(rng, 1 + draw(rng, 7), 20 + draw(rng, 70));
        const ExactColouring best = minimum_colouring(g);
        CHECK(best.chromatic_number == oracle::chromatic_number(g));
        CHECK(oracle::proper(g, best.assignment));
        CHECK(*std::max_element(best.assignment.begin(), best.assignment.end()) + 1 == best.chromatic_number);
        CHECK(clique_number(g) <= best.chromatic_number);
    }
}

TEST_CASE("chromatic number of a join is additive")
{
    Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(rng, 1 + draw(rng, 6), 50);
        const Graph h = random_graph(rng, 1 + draw(rng, 6), 50);
        CHECK(chromatic_number(join(g, h)) == chromatic_number(g) + chromatic_number(h));
        CHECK(chromatic_number(disjoint_union(g, h)) == std::max(chromatic_number(g), chromatic_number(h)));
    }
}

TEST_CASE("vertex sets")
{
    VertexSet s(130);
    CHECK(s.empty());
    CHECK(s.first() == -1);
    s.insert(129);
    s.insert(3);
    s.insert(64);
    CHECK(s.size() == 3);
    CHECK(s.first() == 3);
    CHECK(s.members() == std::vector<Vertex>{3, 64, 129});
    s.erase(3);
    CHECK(s.first() == 64);
    CHECK(VertexSet::full(130).size() == 130);
    CHECK((VertexSet::full(130) - s).size() == 128);
    CHECK(s.intersects(VertexSet::full(130)));
}
