#include "webworlds/io.hpp"

#include <fstream>
#include <sstream>

#include "webworlds/errors.hpp"

namespace webworlds {

namespace {

int int_field(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw InvalidInput(std::string(what) + " must be an integer");
    return j.get<int>();
}

long long_field(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw InvalidInput(std::string(what) + " must be an integer");
    return j.get<long>();
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

Json diagram_json(const WebDiagram& d) {
    Json edges = Json::array();
    for (const Edge& e : d.edges())
        edges.push_back({e.a, e.b, e.c, e.d});
    return Json{{"n_pegs", d.n_pegs()}, {"edges", edges}};
}

WebDiagram diagram_from_json(const Json& j) {
    int n = int_field(member(j, "n_pegs"), "n_pegs");
    const Json& arr = member(j, "edges");
    if (!arr.is_array())
        throw InvalidInput("edges must be an array");
    std::vector<Edge> edges;
    for (const Json& item : arr) {
        if (!item.is_array() || item.size() != 4)
            throw InvalidInput("diagram edge must be [a,b,c,d]");
        edges.push_back({int_field(item[0], "edge endpoint"),
                         int_field(item[1], "edge endpoint"),
                         int_field(item[2], "edge height"),
                         int_field(item[3], "edge height")});
    }
    return WebDiagram(std::move(edges), n);
}

Json graph_json(const WebGraph& g) {
    Json edges = Json::array();
    for (const GraphEdge& e : g.edges())
        edges.push_back({e.i, e.j, e.mult});
    return Json{{"n_pegs", g.n_pegs()}, {"edges", edges}};
}

WebGraph graph_from_json(const Json& j) {
    int n = int_field(member(j, "n_pegs"), "n_pegs");
    const Json& arr = member(j, "edges");
    if (!arr.is_array())
        throw InvalidInput("edges must be an array");
    std::vector<GraphEdge> edges;
    for (const Json& item : arr) {
        if (!item.is_array() || item.size() != 3)
            throw InvalidInput("graph edge must be [i,j,mult]");
        edges.push_back({int_field(item[0], "graph endpoint"),
                         int_field(item[1], "graph endpoint"),
                         long_field(item[2], "edge label")});
    }
    return WebGraph(std::move(edges), n);
}

Json poly_json(const Poly& p) {
    Json arr = Json::array();
    for (const Int& c : p.coeffs())
        arr.push_back(int_string(c));
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array())
        throw InvalidInput("polynomial must be an array of strings");
    std::vector<Int> coeffs;
    for (const Json& item : j) {
        if (!item.is_string())
            throw InvalidInput("polynomial coefficient must be a string");
        coeffs.push_back(parse_int(item.get<std::string>()));
    }
    return Poly(std::move(coeffs));
}

Json world_json(const WebWorld& w) {
    Json diagrams = Json::array();
    for (const WebDiagram& d : w.diagrams())
        diagrams.push_back(diagram_json(d));
    return Json{{"graph", graph_json(w.graph())},
                {"size", int_string(Int(w.size()))},
                {"diagrams", diagrams}};
}

Json colouring_matrix_json(const ColouringMatrix& m) {
    Json order = Json::array();
    for (const WebDiagram& d : m.world.diagrams())
        order.push_back(diagram_json(d));
    Json entries = Json::array();
    for (const auto& row : m.entries) {
        Json jrow = Json::array();
        for (const Poly& p : row)
            jrow.push_back(poly_json(p));
        entries.push_back(jrow);
    }
    return Json{{"order", order}, {"entries", entries}};
}

Json mixing_matrix_json(const MixingMatrix& m) {
    Json order = Json::array();
    for (const WebDiagram& d : m.world.diagrams())
        order.push_back(diagram_json(d));
    Json entries = Json::array();
    for (const auto& row : m.entries) {
        Json jrow = Json::array();
        for (const Rat& r : row)
            jrow.push_back(rat_string(r));
        entries.push_back(jrow);
    }
    return Json{{"order", order}, {"entries", entries}};
}

std::string json_dump(const Json& j) { return j.dump(); }

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

namespace {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

} // namespace

WebDiagram load_diagram_file(const std::string& path) {
    return diagram_from_json(load_json_file(path));
}

WebGraph load_graph_file(const std::string& path) {
    return graph_from_json(load_json_file(path));
}

} // namespace webworlds
