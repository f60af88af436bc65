#pragma once

#include <vector>

#include "webworlds/matrices.hpp"
#include "webworlds/polyalg.hpp"

namespace webworlds {

/* Distinct diagonal entries of a colouring matrix with their
 * multiplicities, the seed for the vanishing-sum generator. */
struct DiagonalSpec {
    std::vector<Poly> entries; // pairwise distinct, zero constant term
    std::vector<long> mult;    // positive, same length
};

void check_diagonal_spec(const DiagonalSpec& spec);

// group equal diagonal entries of m (first-appearance order)
DiagonalSpec diagonal_spec_of(const ColouringMatrix& m);

struct IdentityTerm {
    std::vector<long> parts; // composition a_1..a_s of m
    Int weight;              // prod h_i^{a_i} * multinomial(m; a)
    Rat transformed;         // mixing transform of the diamond of powers
    Rat contribution;        // weight * transformed
};

/* Terms of sum over compositions a of m of
 *   prod h_i^{a_i} * C(m; a) * mixing(H_1^{<>a_1} <> ... <> H_s^{<>a_s}),
 * which vanishes for every m >= 2; m = 1 is rejected (the sum need not
 * vanish there). */
std::vector<IdentityTerm> identity_terms(const DiagonalSpec& spec, long m);

Rat identity_sum(const DiagonalSpec& spec, long m);

// sum_{k=1..m} (-1)^(k+1) (k-1)! S2(m,k), zero for every m >= 2
Rat fubini_log_identity(long m);

} // namespace webworlds
