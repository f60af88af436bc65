#include "webworlds/colouring.hpp"

#include <algorithm>

namespace webworlds {

namespace {

void check_colouring(const WebDiagram& d, const Colouring& alpha) {
    if (alpha.num_colours < 1)
        throw InvalidInput("colouring needs at least one colour");
    if (static_cast<long>(alpha.colours.size()) != d.edge_count())
        throw InvalidInput("colouring length differs from edge count");
    std::vector<bool> used(static_cast<std::size_t>(alpha.num_colours), false);
    for (int c : alpha.colours) {
        if (c < 1 || c > alpha.num_colours)
            throw InvalidInput("colour out of range");
        used[static_cast<std::size_t>(c) - 1] = true;
    }
    for (bool u : used)
        if (!u)
            throw InvalidInput("colouring is not surjective");
}

} // namespace

std::vector<std::vector<Edge>> colour_classes(const WebDiagram& d,
                                              const Colouring& alpha) {
    check_colouring(d, alpha);
    std::vector<std::vector<Edge>> classes(
        static_cast<std::size_t>(alpha.num_colours));
    for (std::size_t k = 0; k < d.edges().size(); ++k)
        classes[static_cast<std::size_t>(alpha.colours[k]) - 1].push_back(
            d.edges()[k]);
    return classes;
}

WebDiagram relabel(const std::vector<Edge>& subset, int n_pegs) {
    // per peg: sorted heights in use, then replace by rank
    std::vector<std::vector<int>> used(static_cast<std::size_t>(n_pegs));
    for (const Edge& e : subset) {
        used[static_cast<std::size_t>(e.a) - 1].push_back(e.c);
        used[static_cast<std::size_t>(e.b) - 1].push_back(e.d);
    }
    for (auto& h : used)
        std::sort(h.begin(), h.end());
    auto rank = [&](int peg, int height) {
        const auto& h = used[static_cast<std::size_t>(peg) - 1];
        return static_cast<int>(std::lower_bound(h.begin(), h.end(), height) -
                                h.begin()) +
               1;
    };
    std::vector<Edge> out;
    out.reserve(subset.size());
    for (const Edge& e : subset)
        out.push_back({e.a, e.b, rank(e.a, e.c), rank(e.b, e.d)});
    return WebDiagram(std::move(out), n_pegs);
}

WebDiagram reconstruct(const WebDiagram& d, const Colouring& alpha) {
    WebDiagram acc = WebDiagram::empty(d.n_pegs());
    for (const auto& cls : colour_classes(d, alpha))
        acc = diagram_sum(acc, relabel(cls, d.n_pegs()));
    return acc;
}

std::map<WebDiagram, Int> reconstruction_distribution(const WebDiagram& d,
                                                      long l,
                                                      unsigned long long guard) {
    if (l < 1)
        throw InvalidInput("colour count must be positive");
    long m = d.edge_count();
    std::map<WebDiagram, Int> dist;
    if (l > m)
        return dist; // no surjections
    Int candidates = 1;
    for (long k = 0; k < m; ++k)
        candidates *= l;
    if (candidates > Int(guard))
        throw GuardExceeded("colouring enumeration would try " +
                            candidates.str() + " maps (limit " +
                            std::to_string(guard) + ")");
    Colouring alpha{std::vector<int>(static_cast<std::size_t>(m), 1),
                    static_cast<int>(l)};
    while (true) {
        unsigned long long seen = 0;
        for (int c : alpha.colours)
            seen |= 1ULL << (c - 1);
        if (seen == (l >= 64 ? ~0ULL : (1ULL << l) - 1))
            ++dist[reconstruct(d, alpha)];
        // odometer over colour vectors
        long k = 0;
        for (; k < m; ++k) {
            if (alpha.colours[static_cast<std::size_t>(k)] < l) {
                ++alpha.colours[static_cast<std::size_t>(k)];
                break;
            }
            alpha.colours[static_cast<std::size_t>(k)] = 1;
        }
        if (k == m)
            break;
    }
    return dist;
}

Int count_colourings(const WebDiagram& d1, const WebDiagram& d2, long l,
                     unsigned long long guard) {
    auto dist = reconstruction_distribution(d1, l, guard);
    auto it = dist.find(d2);
    return it == dist.end() ? Int(0) : it->second;
}

} // namespace webworlds
