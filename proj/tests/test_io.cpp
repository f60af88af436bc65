#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "webworlds/errors.hpp"
#include "webworlds/io.hpp"
#include "webworlds/matrices.hpp"

using namespace webworlds;

namespace {

const WebDiagram kCrossed({{1, 2, 1, 2}, {1, 2, 2, 1}}, 2);

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text)
        : path("io_test_tmp_" + std::to_string(reinterpret_cast<uintptr_t>(this)) + ".json") {
        std::ofstream out(path);
        out << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("diagram round trip") {
    Json j = diagram_json(kCrossed);
    CHECK(j["n_pegs"] == 2);
    CHECK(j["edges"].size() == 2);
    CHECK(diagram_from_json(j) == kCrossed);
    CHECK(diagram_from_json(parse_json_text(json_dump(j))) == kCrossed);

    CHECK_THROWS_AS(diagram_from_json(parse_json_text("{\"edges\":[]}")), InvalidInput);
    CHECK_THROWS_AS(diagram_from_json(parse_json_text("{\"n_pegs\":2,\"edges\":[[1,2,1]]}")),
                    InvalidInput);
    CHECK_THROWS_AS(diagram_from_json(parse_json_text("{\"n_pegs\":2,\"edges\":[[2,1,1,1]]}")),
                    InvalidInput);
    CHECK_THROWS_AS(parse_json_text("{"), InvalidInput);
}

TEST_CASE("graph round trip") {
    WebGraph g({{1, 2, 2}, {2, 3, 1}}, 3);
    CHECK(graph_from_json(graph_json(g)) == g);
    CHECK_THROWS_AS(graph_from_json(parse_json_text("{\"n_pegs\":2,\"edges\":[[1,2]]}")),
                    InvalidInput);
    CHECK_THROWS_AS(graph_from_json(parse_json_text("{\"n_pegs\":2,\"edges\":[[1,2,0]]}")),
                    InvalidInput);
    CHECK_THROWS_AS(graph_from_json(parse_json_text("[1,2]")), InvalidInput);
}

TEST_CASE("polynomials as coefficient strings") {
    Poly p = poly_from_coeff_list("0,1,2");
    Json j = poly_json(p);
    REQUIRE(j.is_array());
    CHECK(j[0] == "0");
    CHECK(j[2] == "2");
    CHECK(poly_from_json(j) == p);
    CHECK(poly_from_json(parse_json_text("[]")) == Poly());
    CHECK_THROWS_AS(poly_from_json(parse_json_text("[1,2]")), InvalidInput);
    CHECK_THROWS_AS(poly_from_json(parse_json_text("{\"a\":1}")), InvalidInput);
}

TEST_CASE("world and matrix shapes") {
    WebWorld w = enumerate_world(WebGraph({{1, 2, 2}}, 2));
    Json wj = world_json(w);
    CHECK(wj["size"] == "2");
    CHECK(wj["diagrams"].size() == 2);
    CHECK(graph_from_json(wj["graph"]) == w.graph());

    ColouringMatrix m = colouring_matrix(w);
    Json mj = colouring_matrix_json(m);
    CHECK(mj["order"].size() == 2);
    CHECK(mj["entries"].size() == 2);
    CHECK(poly_from_json(mj["entries"][0][0]) == m.entries[0][0]);

    MixingMatrix r = mixing_matrix_of(m);
    Json rj = mixing_matrix_json(r);
    CHECK(rj["entries"][1][0] == "-1/1");
    CHECK(rj["entries"][1][1] == "1/1");

    // identical dumps on repeated serialization
    CHECK(json_dump(mj) == json_dump(colouring_matrix_json(m)));
    CHECK(json_dump(wj) == json_dump(world_json(w)));
}

TEST_CASE("file loading") {
    TempFile good("{\"n_pegs\": 2, \"edges\": [[1, 2, 2]]}");
    CHECK(load_graph_file(good.path) == WebGraph({{1, 2, 2}}, 2));
    TempFile diag("{\"n_pegs\": 2, \"edges\": [[1, 2, 1, 2], [1, 2, 2, 1]]}");
    CHECK(load_diagram_file(diag.path) == kCrossed);
    TempFile bad("{\"n_pegs\": 2");
    CHECK_THROWS_AS(load_graph_file(bad.path), InvalidInput);
    CHECK_THROWS_AS(load_graph_file("definitely_missing_file.json"), InvalidInput);
}
