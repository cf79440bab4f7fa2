#include <doctest.h>

#include "kempe/error.hpp"
#include "kempe/families.hpp"
#include "kempe/frozen.hpp"
#include "kempe/kempe.hpp"
#include "kempe/random.hpp"
#include "../oracle.hpp"

using namespace kempe;

TEST_CASE("frozen and Kempe frozen on small graphs")
{
    const Graph p3 = path_graph(3);
    const Colouring c(3, {0, 1, 2});
    CHECK_FALSE(is_frozen(p3, c));
    CHECK_FALSE(is_kempe_frozen(p3, c));
    CHECK(is_kempe_frozen(p3, Colouring(2, {0, 1, 0})));
    CHECK(is_frozen(p3, Colouring(2, {0, 1, 0})));
    CHECK(is_kempe_frozen(complete_graph(4), Colouring(4, {3, 1, 0, 2})));
    // A colour that is never used rules out Kempe frozen.
    CHECK_FALSE(is_kempe_frozen(complete_graph(3), Colouring(4, {0, 1, 2})));
    CHECK_THROWS_AS(is_frozen(p3, Colouring(2, {0, 0, 1})), InputError);
    CHECK_THROWS_AS(is_kempe_frozen(p3, Colouring(2, {0, 0, 1})), InputError);
}

TEST_CASE("Kempe frozen agrees with the definition")
{
    Rng rng(29);
    int frozen = 0;
    for (int t = 0; t < 400; ++t) {
        const Graph g = random_graph(rng, 2 + draw(rng, 8), 40 + draw(rng, 55));
        const int k = chromatic_number(g) + draw(rng, 2);
        const auto c = random_proper_colouring(rng, g, k);
        REQUIRE(c.has_value());
        const bool expected = oracle::kempe_frozen(g, c->colours(), k);
        CHECK(is_kempe_frozen(g, *c) == expected);
        frozen += expected ? 1 : 0;
        if (expected) {
            CHECK(is_frozen(g, *c));
        }
    }
    CHECK(frozen > 0);
}

TEST_CASE("a Kempe-frozen colouring is alone in its partition class")
{
    const auto prism = gen_prism();
    REQUIRE(is_kempe_frozen(prism.graph, prism.left));
    for (const auto& d : kempe_neighbours(prism.graph, prism.left)) {
        CHECK(partition_of(d) == partition_of(prism.left));
    }
}

TEST_CASE("clique partitions of the complement mirror colourings")
{
    const auto dq = gen_dq(2);
    CHECK(is_kempe_frozen_clique_partition(dq_complement(2), partition_of(dq.colouring)));
    const Partition singletons(3, {{0}, {1}, {2}});
    CHECK(is_kempe_frozen_clique_partition(Graph(3), singletons));
    CHECK_FALSE(is_kempe_frozen_clique_partition(complete_graph(3), singletons));
    CHECK_THROWS_AS(is_kempe_frozen_clique_partition(path_graph(3), Partition(3, {{0, 2}, {1}})), InputError);

    Rng rng(47);
    for (int t = 0; t < 300; ++t) {
        const Graph g = random_graph(rng, 2 + draw(rng, 8), 40 + draw(rng, 55));
        const int k = chromatic_number(g) + draw(rng, 2);
        const auto c = random_proper_colouring(rng, g, k);
        REQUIRE(c.has_value());
        if (colours_used(*c) == k) {
            CHECK(is_kempe_frozen(g, *c) == is_kempe_frozen_clique_partition(complement(g), partition_of(*c)));
        }
    }
}

TEST_CASE("certificates")
{
    const auto prism = gen_prism();
    const auto cert = build_not_kempe_class_certificate(prism.graph, prism.left, prism.right);
    CHECK(cert.k == 3);
    CHECK(cert.checks.all());

    const Colouring same_partition(3, {0, 2, 1, 1, 0, 2});
    REQUIRE(partition_of(same_partition) == partition_of(prism.left));
    try {
        build_not_kempe_class_certificate(prism.graph, prism.left, same_partition);
        FAIL("expected rejection");
    } catch (const CertificateRejected& e) {
        CHECK(e.condition().find("partition") != std::string::npos);
    }
    CHECK_FALSE(check_certificate(prism.graph, prism.left, prism.right.padded(4)).same_k);
    const Colouring improper(3, {0, 0, 1, 1, 2, 2});
    CHECK_FALSE(check_certificate(prism.graph, prism.left, improper).witness_proper);
    CHECK_THROWS_AS(build_not_kempe_class_certificate(prism.graph, improper, prism.left), CertificateRejected);
    const Graph p4 = path_graph(4);
    CHECK_FALSE(check_certificate(p4, Colouring(3, {0, 1, 2, 0}), Colouring(3, {0, 1, 0, 1})).frozen_is_kempe_frozen);
}
