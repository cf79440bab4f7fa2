#pragma once

#include "kempe/colouring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// Every closed neighbourhood sees all k colours. Requires a proper colouring.
bool is_frozen(const Graph& g, const Colouring& c);

/// All k colours used and every two colour classes induce a connected subgraph.
/// Requires a proper colouring.
bool is_kempe_frozen(const Graph& g, const Colouring& c);

/// Every class of `p` must be a clique of `g`. True iff for each pair of cliques
/// the complement of the subgraph they induce is connected.
bool is_kempe_frozen_clique_partition(const Graph& g, const Partition& p);

/// Outcome of each condition a not-a-Kempe-class certificate must meet.
struct CertificateChecks {
    bool same_k = false;
    bool frozen_proper = false;
    bool witness_proper = false;
    bool frozen_is_kempe_frozen = false;
    bool partitions_differ = false;

    bool all() const noexcept
    {
        return same_k && frozen_proper && witness_proper && frozen_is_kempe_frozen && partitions_differ;
    }
};

/// A Kempe-frozen colouring plus a colouring with a different partition. No
/// sequence of Kempe swaps changes the partition of a Kempe-frozen colouring, so
/// the two lie in different Kempe classes and C_k(G) is not a Kempe class.
struct NotKempeClassCertificate {
    int k = 0;
    Colouring frozen_colouring;
    Colouring witness_colouring;
    CertificateChecks checks;
};

CertificateChecks check_certificate(const Graph& g, const Colouring& frozen, const Colouring& witness);

/// Validates every condition; throws CertificateRejected naming the first failure.
NotKempeClassCertificate build_not_kempe_class_certificate(const Graph& g, const Colouring& frozen,
                                                           const Colouring& witness);

} // namespace kempe
