#pragma once

#include <string>
#include <utility>
#include <vector>

#include "webworlds/colouring.hpp"
#include "webworlds/core.hpp"
#include "webworlds/poly.hpp"

namespace webworlds {

/* Smallest down-closed edge subset of d containing e: on every peg the
 * heights it uses must fill 1..t. Canonically sorted. */
std::vector<Edge> down_closure(const WebDiagram& d, const Edge& e);

/* Unique factorization of d into indecomposable components, each
 * rank-compressed onto heights 1..k but keeping its original pegs.
 * Repeatedly peels an inclusion-minimal down-closure, ties broken by the
 * smallest leading edge; stacking the results in order rebuilds d. */
std::vector<WebDiagram> decompose(const WebDiagram& d);

bool is_indecomposable(const WebDiagram& d); // d nonempty

/* Finite poset on elements 0..size-1 stored as its full order relation. */
class Poset {
public:
    explicit Poset(std::vector<std::vector<bool>> leq);
    static Poset from_strict_pairs(
        long size, const std::vector<std::pair<long, long>>& strict);

    long size() const { return static_cast<long>(leq_.size()); }
    bool leq(long i, long j) const {
        return leq_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<std::vector<bool>>& relation() const { return leq_; }

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::vector<std::vector<bool>> leq_;
};

/* Order of the components of d: earlier component below later one whenever
 * their peg sets meet, closed transitively. */
Poset decomposition_poset(const WebDiagram& d);

struct CompGraph {
    std::vector<std::vector<bool>> adj;
    friend bool operator==(const CompGraph&, const CompGraph&) = default;
};

// vertices adjacent iff comparable
CompGraph comparability_graph(const Poset& p);

// relabelling-invariant fingerprint (exhaustive over vertex orders, <= 9
// vertices)
std::string comp_graph_canonical_key(const CompGraph& g);

inline constexpr unsigned long long kOrderMapGuard = 100'000'000ULL;

// weakly order-preserving maps into 1..l
Int omega(const Poset& p, long l, unsigned long long guard = kOrderMapGuard);

// weakly order-preserving surjections onto 1..l
Int theta(const Poset& p, long l, unsigned long long guard = kOrderMapGuard);

/* sum_l theta(P(d), l) x^l; valid only when the components of d are
 * pairwise distinct, rejected otherwise. */
Poly diagonal_poly_via_poset(const WebDiagram& d,
                             unsigned long long guard = kOrderMapGuard);

} // namespace webworlds
