#pragma once

#include <map>
#include <vector>

#include "webworlds/core.hpp"

namespace webworlds {

/* A surjective assignment of colours 1..num_colours to the edges of a
 * diagram, indexed in canonical edge order. */
struct Colouring {
    std::vector<int> colours;
    int num_colours;
};

// edges per colour, each class nonempty, canonical edge order inside
std::vector<std::vector<Edge>> colour_classes(const WebDiagram& d,
                                              const Colouring& alpha);

/* Rank-compress the attachment heights of an edge subset so each used peg
 * again fills 1..k; the subset of a valid diagram always compresses to a
 * valid diagram. */
WebDiagram relabel(const std::vector<Edge>& subset, int n_pegs);

// stack the compressed colour classes in colour order
WebDiagram reconstruct(const WebDiagram& d, const Colouring& alpha);

inline constexpr unsigned long long kColouringGuard = 100'000'000ULL;

/* Reconstructions of d over all surjective l-colourings, with counts.
 * Refuses when l^(edge count) exceeds the guard. */
std::map<WebDiagram, Int>
reconstruction_distribution(const WebDiagram& d, long l,
                            unsigned long long guard = kColouringGuard);

// number of surjective l-colourings of d1 whose reconstruction is d2
Int count_colourings(const WebDiagram& d1, const WebDiagram& d2, long l,
                     unsigned long long guard = kColouringGuard);

} // namespace webworlds
