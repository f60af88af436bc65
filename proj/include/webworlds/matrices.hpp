#pragma once

#include <vector>

#include "webworlds/colouring.hpp"
#include "webworlds/core.hpp"
#include "webworlds/polyalg.hpp"

namespace webworlds {

using PolyMatrix = std::vector<std::vector<Poly>>;

/* Square matrix over a world, rows/columns in the world's canonical
 * diagram order; entry (i,j) counts the surjective colourings of diagram i
 * reconstructing diagram j, graded by colour count. */
struct ColouringMatrix {
    WebWorld world;
    PolyMatrix entries;
};

struct MixingMatrix {
    WebWorld world;
    std::vector<std::vector<Rat>> entries;
};

ColouringMatrix colouring_matrix(const WebWorld& w,
                                 unsigned long long guard = kColouringGuard);

// entrywise mixing transform of the colouring matrix
MixingMatrix mixing_matrix_of(const ColouringMatrix& m);
MixingMatrix mixing_matrix(const WebWorld& w,
                           unsigned long long guard = kColouringGuard);

// plain matrix product M*M
PolyMatrix matrix_square(const ColouringMatrix& m);

// M*M through the coefficientwise substitution x^i -> L_i(x)
PolyMatrix matrix_square_via_L(const ColouringMatrix& m);

struct IdempotencyReport {
    bool ok;
    long row, col;  // first offending entry when not ok
    Rat entry, squared;
};

// exact check R*R == R over a common denominator
IdempotencyReport verify_idempotent(const MixingMatrix& r);

/* Entry of the matrix of a peg-disjoint union world from the matching
 * component entries: their diamond product. */
Poly combine_disjoint_entries(const std::vector<Poly>& entries);

Poly trace(const ColouringMatrix& m);

} // namespace webworlds
