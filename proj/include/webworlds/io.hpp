#pragma once

#include <string>

#include "json.hpp"
#include "webworlds/core.hpp"
#include "webworlds/matrices.hpp"

namespace webworlds {

using Json = nlohmann::json;

/* JSON shapes.  Coefficients and counts are decimal strings so values
 * survive arbitrary precision; rationals are "num/den".
 *   diagram: {"n_pegs": N, "edges": [[a,b,c,d], ...]}
 *   graph:   {"n_pegs": N, "edges": [[i,j,mult], ...]}
 *   poly:    ["c0", "c1", ...] (constant term first, no trailing zeros)
 *   world:   {"graph": g, "size": "K", "diagrams": [d, ...]}
 *   matrix:  {"order": [d, ...], "entries": [[row], ...]}            */

Json diagram_json(const WebDiagram& d);
WebDiagram diagram_from_json(const Json& j);

Json graph_json(const WebGraph& g);
WebGraph graph_from_json(const Json& j);

Json poly_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json world_json(const WebWorld& w);

Json colouring_matrix_json(const ColouringMatrix& m);
Json mixing_matrix_json(const MixingMatrix& m);

// compact single-line dump with keys in fixed (sorted) order
std::string json_dump(const Json& j);

Json parse_json_text(const std::string& text);

WebDiagram load_diagram_file(const std::string& path);
WebGraph load_graph_file(const std::string& path);

} // namespace webworlds
