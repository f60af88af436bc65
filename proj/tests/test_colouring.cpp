#include "doctest.h"

#include <algorithm>

#include "webworlds/colouring.hpp"
#include "webworlds/core.hpp"
#include "webworlds/errors.hpp"
#include "webworlds/polyalg.hpp"

using namespace webworlds;

namespace {

const WebDiagram kCrossed({{1, 2, 1, 2}, {1, 2, 2, 1}}, 2);
const WebDiagram kNested({{1, 2, 1, 1}, {1, 2, 2, 2}}, 2);

} // namespace

TEST_CASE("colouring validation") {
    CHECK_THROWS_AS(reconstruct(kCrossed, {{1}, 1}), InvalidInput);          // wrong length
    CHECK_THROWS_AS(reconstruct(kCrossed, {{1, 1}, 2}), InvalidInput);       // not surjective
    CHECK_THROWS_AS(reconstruct(kCrossed, {{0, 1}, 2}), InvalidInput);       // colour range
    CHECK_THROWS_AS(reconstruct(kCrossed, {{1, 3}, 2}), InvalidInput);       // colour range
    CHECK_THROWS_AS(reconstruct(kCrossed, {{1, 1}, 0}), InvalidInput);       // no colours
    CHECK_NOTHROW(reconstruct(kCrossed, {{1, 1}, 1}));
}

TEST_CASE("colour classes and relabelling") {
    // edges are taken in canonical order: (1,2,1,2) then (1,2,2,1)
    auto classes = colour_classes(kCrossed, {{2, 1}, 2});
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<Edge>{{1, 2, 2, 1}});
    CHECK(classes[1] == std::vector<Edge>{{1, 2, 1, 2}});

    CHECK(relabel(classes[0], 2) == WebDiagram({{1, 2, 1, 1}}, 2));
    CHECK(relabel({{1, 3, 2, 4}, {1, 3, 4, 5}}, 3) ==
          WebDiagram({{1, 3, 1, 1}, {1, 3, 2, 2}}, 3));
}

TEST_CASE("reconstruction on the two-edge crossed pair") {
    // both 2-colourings of the crossed diagram rebuild the nested one
    CHECK(reconstruct(kCrossed, {{1, 2}, 2}) == kNested);
    CHECK(reconstruct(kCrossed, {{2, 1}, 2}) == kNested);
    CHECK(reconstruct(kCrossed, {{1, 1}, 1}) == kCrossed);
    // the nested diagram rebuilds itself under every colouring
    CHECK(reconstruct(kNested, {{1, 2}, 2}) == kNested);
    CHECK(reconstruct(kNested, {{2, 1}, 2}) == kNested);
    CHECK(reconstruct(kNested, {{1, 1}, 1}) == kNested);
}

TEST_CASE("counting colourings") {
    CHECK(count_colourings(kCrossed, kCrossed, 1) == 1);
    CHECK(count_colourings(kCrossed, kCrossed, 2) == 0);
    CHECK(count_colourings(kCrossed, kNested, 2) == 2);
    CHECK(count_colourings(kCrossed, kNested, 1) == 0);
    CHECK(count_colourings(kNested, kNested, 1) == 1);
    CHECK(count_colourings(kNested, kNested, 2) == 2);
    CHECK(count_colourings(kNested, kCrossed, 1) == 0);
    CHECK(count_colourings(kNested, kCrossed, 2) == 0);
    // more colours than edges leave nothing surjective
    CHECK(count_colourings(kNested, kNested, 3) == 0);
    CHECK_THROWS_AS(count_colourings(kNested, kNested, 0), InvalidInput);
}

TEST_CASE("reconstruction stays in the world") {
    WebWorld w = enumerate_world(WebGraph({{1, 2, 1}, {2, 3, 2}}, 3));
    for (const WebDiagram& d : w.diagrams())
        for (long l = 1; l <= d.edge_count(); ++l) {
            Int total = 0;
            for (const auto& [image, cnt] : reconstruction_distribution(d, l)) {
                CHECK(w.contains(image));
                total += cnt;
            }
            // every surjective colouring reconstructs something
            CHECK(total == factorial(l) * stirling(d.edge_count(), l, StirlingKind::second));
        }
}

TEST_CASE("flipping commutes with reconstruction") {
    WebWorld w = enumerate_world(WebGraph({{1, 2, 3}}, 2));
    for (const WebDiagram& d : w.diagrams())
        for (long l = 1; l <= 3; ++l) {
            std::vector<int> alpha(3, 1);
            while (true) {
                bool surj = true;
                for (int c = 1; c <= l; ++c) {
                    bool hit = false;
                    for (int v : alpha)
                        hit = hit || v == c;
                    surj = surj && hit;
                }
                if (surj) {
                    Colouring a{alpha, static_cast<int>(l)};
                    // reversing the colour order on the flipped diagram
                    // mirrors the rebuilt stack; colours follow each edge
                    // through the flip, so transport along the edge map
                    WebDiagram fd = flip(d);
                    std::vector<int> p = pegs_vector(d);
                    std::vector<int> rev(alpha.size(), 0);
                    for (size_t i = 0; i < alpha.size(); ++i) {
                        const Edge& e = d.edges()[i];
                        Edge fe{e.a, e.b, p[static_cast<size_t>(e.a - 1)] + 1 - e.c,
                                p[static_cast<size_t>(e.b - 1)] + 1 - e.d};
                        auto it = std::find(fd.edges().begin(), fd.edges().end(), fe);
                        REQUIRE(it != fd.edges().end());
                        rev[static_cast<size_t>(it - fd.edges().begin())] =
                            static_cast<int>(l) + 1 - alpha[i];
                    }
                    Colouring ra{rev, static_cast<int>(l)};
                    CHECK(reconstruct(fd, ra) == flip(reconstruct(d, a)));
                }
                size_t i = 0;
                while (i < alpha.size() && alpha[i] == l) {
                    alpha[i] = 1;
                    ++i;
                }
                if (i == alpha.size())
                    break;
                ++alpha[i];
            }
        }
}

TEST_CASE("colouring guard") {
    WebDiagram d({{1, 2, 1, 1}, {1, 2, 2, 2}, {1, 2, 3, 3}}, 2);
    CHECK_THROWS_AS(reconstruction_distribution(d, 3, 8), GuardExceeded);
    CHECK_NOTHROW(reconstruction_distribution(d, 3, 27));
}
