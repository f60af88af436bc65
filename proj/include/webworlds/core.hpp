#pragma once

#include <compare>
#include <string>
#include <vector>

#include "webworlds/numbers.hpp"

namespace webworlds {

/* One edge of a web diagram: pegs a < b, attached at height c on peg a and
 * height d on peg b. Default comparison gives the canonical (a,b,c,d)
 * lexicographic edge order. */
struct Edge {
    int a, b, c, d;
    auto operator<=>(const Edge&) const = default;
};

/* A web diagram on pegs 1..n_pegs. Always valid and canonically sorted:
 * for every peg the attachment heights are exactly 1..k for some k, each
 * height used once. The constructor rejects anything else. */
class WebDiagram {
public:
    WebDiagram(std::vector<Edge> edges, int n_pegs);
    static WebDiagram empty(int n_pegs) { return WebDiagram({}, n_pegs); }

    int n_pegs() const { return n_pegs_; }
    const std::vector<Edge>& edges() const { return edges_; }
    long edge_count() const { return static_cast<long>(edges_.size()); }

    auto operator<=>(const WebDiagram&) const = default;

private:
    int n_pegs_;
    std::vector<Edge> edges_;
};

WebDiagram validate_diagram(std::vector<Edge> raw_edges, int n_pegs);

// number of attachments per peg, indexed 0..n_pegs-1
std::vector<int> pegs_vector(const WebDiagram& d);

// ascending list of pegs holding at least one attachment
std::vector<int> peg_set(const WebDiagram& d);

// "{(1,2,1,1),(1,2,2,2)}"
std::string diagram_string(const WebDiagram& d);

/* Stacking sum: d2 is placed on top of d1, its heights lifted by the peg
 * counts of d1. Associative; the empty diagram is the unit. */
WebDiagram diagram_sum(const WebDiagram& d1, const WebDiagram& d2);

// reverse every peg top-to-bottom; an involution
WebDiagram flip(const WebDiagram& d);

// same edges on a wider ambient peg range
WebDiagram embed(const WebDiagram& d, int n_pegs);

// translate every peg by offset into a new ambient range
WebDiagram shift_pegs(const WebDiagram& d, int offset, int n_pegs);

struct GraphEdge {
    int i, j;  // pegs i < j
    long mult; // positive label
    auto operator<=>(const GraphEdge&) const = default;
};

// loop-free graph on pegs 1..n_pegs with positive integer edge labels
class WebGraph {
public:
    WebGraph(std::vector<GraphEdge> edges, int n_pegs);

    int n_pegs() const { return n_pegs_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    long total_label() const;

    auto operator<=>(const WebGraph&) const = default;

private:
    int n_pegs_;
    std::vector<GraphEdge> edges_;
};

// forget heights, keep multiplicities
WebGraph web_graph_of(const WebDiagram& d);

// graphs side by side: pegs of g2 are shifted past those of g1
WebGraph disjoint_union(const WebGraph& g1, const WebGraph& g2);

/* All diagrams sharing one web graph, canonically sorted. */
class WebWorld {
public:
    const WebGraph& graph() const { return graph_; }
    const std::vector<WebDiagram>& diagrams() const { return diagrams_; }
    long size() const { return static_cast<long>(diagrams_.size()); }

    bool contains(const WebDiagram& d) const;
    long index_of(const WebDiagram& d) const; // throws if absent

private:
    WebWorld(WebGraph g, std::vector<WebDiagram> ds)
        : graph_(std::move(g)), diagrams_(std::move(ds)) {}
    friend WebWorld enumerate_world(const WebGraph&, unsigned long long);

    WebGraph graph_;
    std::vector<WebDiagram> diagrams_;
};

inline constexpr unsigned long long kWorldGuard = 10'000'000ULL;

/* Enumerates the world of g. Refuses when the raw assignment count
 * (product of peg-count factorials) exceeds the guard. */
WebWorld enumerate_world(const WebGraph& g,
                         unsigned long long guard = kWorldGuard);

} // namespace webworlds
