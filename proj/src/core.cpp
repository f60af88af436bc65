#include "webworlds/core.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "webworlds/polyalg.hpp"

namespace webworlds {

WebDiagram::WebDiagram(std::vector<Edge> edges, int n_pegs)
    : n_pegs_(n_pegs), edges_(std::move(edges)) {
    if (n_pegs_ < 0)
        throw InvalidInput("negative peg count");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t k = 0; k + 1 < edges_.size(); ++k)
        if (edges_[k] == edges_[k + 1])
            throw InvalidInput("duplicate edge " + diagram_string(*this));
    std::vector<std::vector<int>> heights(static_cast<std::size_t>(n_pegs_));
    for (const Edge& e : edges_) {
        if (e.a < 1 || e.a >= e.b || e.b > n_pegs_)
            throw InvalidInput("edge pegs out of range");
        if (e.c < 1 || e.d < 1)
            throw InvalidInput("edge heights must be positive");
        heights[static_cast<std::size_t>(e.a) - 1].push_back(e.c);
        heights[static_cast<std::size_t>(e.b) - 1].push_back(e.d);
    }
    for (auto& h : heights) {
        std::sort(h.begin(), h.end());
        for (std::size_t k = 0; k < h.size(); ++k)
            if (h[k] != static_cast<int>(k) + 1)
                throw InvalidInput(
                    "peg heights must be distinct and fill 1..k");
    }
}

WebDiagram validate_diagram(std::vector<Edge> raw_edges, int n_pegs) {
    return WebDiagram(std::move(raw_edges), n_pegs);
}

std::vector<int> pegs_vector(const WebDiagram& d) {
    std::vector<int> p(static_cast<std::size_t>(d.n_pegs()), 0);
    for (const Edge& e : d.edges()) {
        ++p[static_cast<std::size_t>(e.a) - 1];
        ++p[static_cast<std::size_t>(e.b) - 1];
    }
    return p;
}

std::vector<int> peg_set(const WebDiagram& d) {
    std::vector<int> p = pegs_vector(d);
    std::vector<int> out;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] > 0)
            out.push_back(static_cast<int>(k) + 1);
    return out;
}

std::string diagram_string(const WebDiagram& d) {
    std::string out = "{";
    bool first = true;
    for (const Edge& e : d.edges()) {
        if (!first)
            out += ",";
        first = false;
        out += "(" + std::to_string(e.a) + "," + std::to_string(e.b) + "," +
               std::to_string(e.c) + "," + std::to_string(e.d) + ")";
    }
    return out + "}";
}

WebDiagram diagram_sum(const WebDiagram& d1, const WebDiagram& d2) {
    if (d1.n_pegs() != d2.n_pegs())
        throw InvalidInput("summands live on different peg ranges");
    std::vector<int> p = pegs_vector(d1);
    std::vector<Edge> edges = d1.edges();
    for (Edge e : d2.edges()) {
        e.c += p[static_cast<std::size_t>(e.a) - 1];
        e.d += p[static_cast<std::size_t>(e.b) - 1];
        edges.push_back(e);
    }
    return WebDiagram(std::move(edges), d1.n_pegs());
}

WebDiagram flip(const WebDiagram& d) {
    std::vector<int> p = pegs_vector(d);
    std::vector<Edge> edges;
    edges.reserve(d.edges().size());
    for (Edge e : d.edges()) {
        e.c = p[static_cast<std::size_t>(e.a) - 1] + 1 - e.c;
        e.d = p[static_cast<std::size_t>(e.b) - 1] + 1 - e.d;
        edges.push_back(e);
    }
    return WebDiagram(std::move(edges), d.n_pegs());
}

WebDiagram embed(const WebDiagram& d, int n_pegs) {
    if (n_pegs < d.n_pegs())
        throw InvalidInput("cannot embed into fewer pegs");
    return WebDiagram(d.edges(), n_pegs);
}

WebDiagram shift_pegs(const WebDiagram& d, int offset, int n_pegs) {
    std::vector<Edge> edges;
    edges.reserve(d.edges().size());
    for (Edge e : d.edges()) {
        e.a += offset;
        e.b += offset;
        edges.push_back(e);
    }
    return WebDiagram(std::move(edges), n_pegs);
}

WebGraph::WebGraph(std::vector<GraphEdge> edges, int n_pegs)
    : n_pegs_(n_pegs), edges_(std::move(edges)) {
    if (n_pegs_ < 0)
        throw InvalidInput("negative peg count");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const GraphEdge& e = edges_[k];
        if (e.i < 1 || e.i >= e.j || e.j > n_pegs_)
            throw InvalidInput("graph edge pegs out of range");
        if (e.mult < 1)
            throw InvalidInput("graph edge labels must be positive");
        if (k > 0 && edges_[k - 1].i == e.i && edges_[k - 1].j == e.j)
            throw InvalidInput("repeated peg pair in graph");
    }
}

long WebGraph::total_label() const {
    long t = 0;
    for (const GraphEdge& e : edges_)
        t += e.mult;
    return t;
}

WebGraph web_graph_of(const WebDiagram& d) {
    std::map<std::pair<int, int>, long> mult;
    for (const Edge& e : d.edges())
        ++mult[{e.a, e.b}];
    std::vector<GraphEdge> edges;
    edges.reserve(mult.size());
    for (const auto& [pegs, m] : mult)
        edges.push_back({pegs.first, pegs.second, m});
    return WebGraph(std::move(edges), d.n_pegs());
}

WebGraph disjoint_union(const WebGraph& g1, const WebGraph& g2) {
    std::vector<GraphEdge> edges = g1.edges();
    for (GraphEdge e : g2.edges()) {
        e.i += g1.n_pegs();
        e.j += g1.n_pegs();
        edges.push_back(e);
    }
    return WebGraph(std::move(edges), g1.n_pegs() + g2.n_pegs());
}

bool WebWorld::contains(const WebDiagram& d) const {
    return std::binary_search(diagrams_.begin(), diagrams_.end(), d);
}

long WebWorld::index_of(const WebDiagram& d) const {
    auto it = std::lower_bound(diagrams_.begin(), diagrams_.end(), d);
    if (it == diagrams_.end() || !(*it == d))
        throw Error("diagram not in world: " + diagram_string(d));
    return it - diagrams_.begin();
}

namespace {

struct EdgeInstance {
    int i, j;
    int class_id;
};

/* Distinct height assignments for the slots of one peg. Lower-side slots
 * of a parallel class must take increasing heights; that picks exactly one
 * representative per diagram, so the cartesian product below hits every
 * world member once. */
std::vector<std::vector<int>>
peg_assignments(int peg, const std::vector<int>& slot_insts,
                const std::vector<EdgeInstance>& inst) {
    std::size_t k = slot_insts.size();
    std::vector<int> heights(k);
    for (std::size_t s = 0; s < k; ++s)
        heights[s] = static_cast<int>(s) + 1;
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (std::size_t s = 0; s + 1 < k && ok; ++s) {
            const EdgeInstance& e1 = inst[static_cast<std::size_t>(slot_insts[s])];
            const EdgeInstance& e2 =
                inst[static_cast<std::size_t>(slot_insts[s + 1])];
            if (e1.class_id == e2.class_id && e1.i == peg &&
                heights[s] > heights[s + 1])
                ok = false;
        }
        if (ok)
            out.push_back(heights);
    } while (std::next_permutation(heights.begin(), heights.end()));
    return out;
}

} // namespace

WebWorld enumerate_world(const WebGraph& g, unsigned long long guard) {
    int n = g.n_pegs();
    std::vector<long> deg(static_cast<std::size_t>(n), 0);
    for (const GraphEdge& e : g.edges()) {
        deg[static_cast<std::size_t>(e.i) - 1] += e.mult;
        deg[static_cast<std::size_t>(e.j) - 1] += e.mult;
    }
    Int raw = 1;
    for (long d : deg)
        raw *= factorial(d);
    if (raw > Int(guard))
        throw GuardExceeded("world enumeration would try " + raw.str() +
                            " assignments (limit " + std::to_string(guard) +
                            ")");

    std::vector<EdgeInstance> inst;
    int class_id = 0;
    for (const GraphEdge& e : g.edges()) {
        for (long t = 0; t < e.mult; ++t)
            inst.push_back({e.i, e.j, class_id});
        ++class_id;
    }
    std::vector<std::vector<int>> slots(static_cast<std::size_t>(n));
    std::vector<int> pos_lower(inst.size()), pos_upper(inst.size());
    for (std::size_t t = 0; t < inst.size(); ++t) {
        auto& lo = slots[static_cast<std::size_t>(inst[t].i) - 1];
        pos_lower[t] = static_cast<int>(lo.size());
        lo.push_back(static_cast<int>(t));
        auto& hi = slots[static_cast<std::size_t>(inst[t].j) - 1];
        pos_upper[t] = static_cast<int>(hi.size());
        hi.push_back(static_cast<int>(t));
    }

    std::vector<std::vector<std::vector<int>>> assignments;
    assignments.reserve(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p)
        assignments.push_back(
            peg_assignments(p, slots[static_cast<std::size_t>(p) - 1], inst));

    std::set<WebDiagram> found;
    std::vector<const std::vector<int>*> chosen(static_cast<std::size_t>(n));
    auto emit = [&]() {
        std::vector<Edge> edges;
        edges.reserve(inst.size());
        for (std::size_t t = 0; t < inst.size(); ++t) {
            const EdgeInstance& e = inst[t];
            int c = (*chosen[static_cast<std::size_t>(e.i) - 1])
                [static_cast<std::size_t>(pos_lower[t])];
            int d = (*chosen[static_cast<std::size_t>(e.j) - 1])
                [static_cast<std::size_t>(pos_upper[t])];
            edges.push_back({e.i, e.j, c, d});
        }
        found.insert(WebDiagram(std::move(edges), n));
    };
    auto rec = [&](auto&& self, int p) -> void {
        if (p == n) {
            emit();
            return;
        }
        for (const auto& a : assignments[static_cast<std::size_t>(p)]) {
            chosen[static_cast<std::size_t>(p)] = &a;
            self(self, p + 1);
        }
    };
    rec(rec, 0);

    return WebWorld(g, std::vector<WebDiagram>(found.begin(), found.end()));
}

} // namespace webworlds
