#include <doctest.h>

#include <set>

#include "kempe/error.hpp"
#include "kempe/families.hpp"
#include "kempe/kempe.hpp"
#include "kempe/random.hpp"
#include "../oracle.hpp"

using namespace kempe;

TEST_CASE("kempe chain of a path")
{
    const Graph p4 = path_graph(4);
    const Colouring c(3, {0, 1, 0, 2});
    CHECK(kempe_chain(p4, c, 0, 0, 1).members() == std::vector<Vertex>{0, 1, 2});
    CHECK(kempe_chain(p4, c, 3, 0, 2).members() == std::vector<Vertex>{2, 3});
    CHECK(kempe_chain(p4, c, 3, 1, 2).members() == std::vector<Vertex>{3});
    CHECK_THROWS_AS(kempe_chain(p4, c, 3, 0, 1), InputError);
    CHECK_THROWS_AS(kempe_chain(p4, c, 0, 0, 0), InputError);
    CHECK_THROWS_AS(kempe_chain(p4, c, 0, 0, 3), InputError);
    CHECK_THROWS_AS(kempe_chain(p4, c, 9, 0, 1), InputError);
    CHECK_THROWS_AS(kempe_chain(p4, Colouring(3, {0, 0, 1, 2}), 0, 0, 1), InputError);
}

TEST_CASE("a swap is an involution and stays proper")
{
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_graph(rng, 2 + draw(rng, 8), 20 + draw(rng, 60));
        const int k = chromatic_number(g) + draw(rng, 2);
        const auto c = random_proper_colouring(rng, g, k);
        REQUIRE(c.has_value());
        if (k < 2) {
            continue;
        }
        const Vertex v = draw(rng, g.order());
        Colour b = draw(rng, k - 1);
        if (b >= (*c)[v]) {
            ++b;
        }
        const Colouring d = kempe_swap(g, *c, v, (*c)[v], b);
        CHECK(is_proper(g, d));
        CHECK(d[v] == b);
        CHECK(kempe_swap(g, d, v, (*c)[v], b) == *c);
        CHECK(kempe_chain(g, d, v, (*c)[v], b) == kempe_chain(g, *c, v, (*c)[v], b));
    }
}

TEST_CASE("neighbours of a complete graph colouring")
{
    for (int k = 2; k <= 5; ++k) {
        std::vector<Colour> colours(k);
        for (int i = 0; i < k; ++i) {
            colours[i] = i;
        }
        const auto nb = kempe_neighbours(complete_graph(k), Colouring(k, colours));
        CHECK(nb.size() == static_cast<std::size_t>(k * (k - 1) / 2));
    }
}

TEST_CASE("neighbours match the reference implementation")
{
    const auto prism = gen_prism();
    CHECK(kempe_neighbours(prism.graph, prism.left).size() == 3);
    Rng rng(19);
    for (int t = 0; t < 80; ++t) {
        const Graph g = random_graph(rng, 2 + draw(rng, 7), 30 + draw(rng, 50));
        const int k = chromatic_number(g) + draw(rng, 2);
        const auto c = random_proper_colouring(rng, g, k);
        REQUIRE(c.has_value());
        std::set<oracle::Assignment> got;
        for (const auto& d : kempe_neighbours(g, *c)) {
            got.insert(d.colours());
        }
        CHECK(got == oracle::neighbours(g, c->colours(), k));
    }
}

TEST_CASE("prism has two Kempe classes of six")
{
    const auto prism = gen_prism();
    const auto report = kempe_classes(prism.graph, 3);
    CHECK(report.total_colourings == 12);
    REQUIRE(report.classes.size() == 2);
    CHECK(report.classes[0].size == 6);
    CHECK(report.classes[1].size == 6);
    CHECK_FALSE(report.cap_hit);
    CHECK(oracle::class_sizes(prism.graph, 3) == std::vector<std::size_t>{6, 6});
    CHECK_FALSE(are_kempe_equivalent(prism.graph, prism.left, prism.right));
    CHECK(kempe_class_of(prism.graph, prism.left).size() == 6);
    CHECK_FALSE(is_kempe_connected_at(prism.graph, 3));
    CHECK(is_kempe_connected_at(prism.graph, 4));
}

TEST_CASE("class representatives are least members in increasing order")
{
    const Graph p4 = path_graph(4);
    const auto report = kempe_classes(p4, 2);
    REQUIRE(report.classes.size() == 1);
    CHECK(report.classes[0].size == 2);
    CHECK(report.classes[0].representative == Colouring(2, {0, 1, 0, 1}));
    const auto prism = kempe_classes(gen_prism().graph, 3);
    CHECK(prism.classes[0].representative < prism.classes[1].representative);
}

TEST_CASE("class partition matches the reference on random graphs")
{
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        const Graph g = random_graph(rng, 2 + draw(rng, 6), 30 + draw(rng, 60));
        const int k = chromatic_number(g) + draw(rng, 2);
        const auto report = kempe_classes(g, k);
        std::vector<std::size_t> sizes;
        for (const auto& cls : report.classes) {
            sizes.push_back(cls.size);
        }
        std::sort(sizes.rbegin(), sizes.rend());
        CHECK(sizes == oracle::class_sizes(g, k));
        for (const auto& cls : report.classes) {
            CHECK(kempe_class_of(g, cls.representative).size() == cls.size);
            CHECK(kempe_class_of(g, cls.representative).front() == cls.representative);
        }
    }
}

TEST_CASE("class enumeration beyond 64 vertices takes the generic path")
{
    const Graph g = path_graph(66);
    const auto report = kempe_classes(g, 2);
    CHECK(report.total_colourings == 2);
    CHECK(report.classes.size() == 1);
}

TEST_CASE("caps")
{
    const auto report = kempe_classes(Graph(12), 3, 1000);
    CHECK(report.cap_hit);
    CHECK_THROWS_AS(is_kempe_connected_at(Graph(12), 3, 1000), ResourceError);
    CHECK_THROWS_AS(kempe_class_of(Graph(12), Colouring(3, std::vector<Colour>(12, 0)), 100), ResourceError);
    CHECK_THROWS_AS(is_kempe_connected_at(complete_graph(3), 2), InputError);
    CHECK_THROWS_AS(are_kempe_equivalent(path_graph(2), Colouring(2, {0, 1}), Colouring(3, {0, 1})), InputError);
}

TEST_CASE("kempe equivalence is symmetric")
{
    const auto fig1 = gen_fig1();
    CHECK(are_kempe_equivalent(fig1.graph, fig1.left, fig1.right)
          == are_kempe_equivalent(fig1.graph, fig1.right, fig1.left));
    const Colouring c(3, {0, 1, 2});
    CHECK(are_kempe_equivalent(complete_graph(3), c, Colouring(3, {2, 0, 1})));
}
