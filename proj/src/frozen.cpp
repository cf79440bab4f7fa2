#include "kempe/frozen.hpp"

#include "kempe/error.hpp"

namespace kempe {

bool is_frozen(const Graph& g, const Colouring& c)
{
    require_proper(g, c);
    const std::vector<VertexSet> classes = colour_classes(c);
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet closed = g.neighbours(v);
        closed.insert(v);
        for (const VertexSet& cls : classes) {
            if (!closed.intersects(cls)) {
                return false;
            }
        }
    }
    return true;
}

bool is_kempe_frozen(const Graph& g, const Colouring& c)
{
    require_proper(g, c);
    const std::vector<VertexSet> classes = colour_classes(c);
    for (const VertexSet& cls : classes) {
        if (cls.empty()) {
            return false;
        }
    }
    for (std::size_t a = 0; a < classes.size(); ++a) {
        for (std::size_t b = a + 1; b < classes.size(); ++b) {
            if (!is_connected(induced_subgraph(g, classes[a] | classes[b]))) {
                return false;
            }
        }
    }
    return true;
}

bool is_kempe_frozen_clique_partition(const Graph& g, const Partition& p)
{
    if (p.order() != g.order()) {
        throw InputError("partition and graph differ in order");
    }
    const auto& cliques = p.classes();
    for (const auto& clique : cliques) {
        for (std::size_t i = 0; i < clique.size(); ++i) {
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                if (!g.adjacent(clique[i], clique[j])) {
                    throw InputError("partition class is not a clique");
                }
            }
        }
    }
    for (std::size_t a = 0; a < cliques.size(); ++a) {
        for (std::size_t b = a + 1; b < cliques.size(); ++b) {
            std::vector<Vertex> both = cliques[a];
            both.insert(both.end(), cliques[b].begin(), cliques[b].end());
            if (!is_connected(complement(induced_subgraph(g, VertexSet(g.order(), both))))) {
                return false;
            }
        }
    }
    return true;
}

CertificateChecks check_certificate(const Graph& g, const Colouring& frozen, const Colouring& witness)
{
    CertificateChecks checks;
    checks.same_k = frozen.k() == witness.k();
    checks.frozen_proper = is_proper(g, frozen);
    checks.witness_proper = is_proper(g, witness);
    checks.frozen_is_kempe_frozen = checks.frozen_proper && is_kempe_frozen(g, frozen);
    checks.partitions_differ = partition_of(frozen) != partition_of(witness);
    return checks;
}

NotKempeClassCertificate build_not_kempe_class_certificate(const Graph& g, const Colouring& frozen,
                                                           const Colouring& witness)
{
    const CertificateChecks checks = check_certificate(g, frozen, witness);
    if (!checks.same_k) {
        throw CertificateRejected("colourings use different k");
    }
    if (!checks.frozen_proper) {
        throw CertificateRejected("frozen colouring is not proper");
    }
    if (!checks.witness_proper) {
        throw CertificateRejected("witness colouring is not proper");
    }
    if (!checks.frozen_is_kempe_frozen) {
        throw CertificateRejected("frozen colouring is not Kempe frozen");
    }
    if (!checks.partitions_differ) {
        throw CertificateRejected("colourings induce the same partition");
    }
    return {frozen.k(), frozen, witness, checks};
}

} // namespace kempe
