#include "doctest.h"

#include <numeric>

#include "webworlds/core.hpp"
#include "webworlds/errors.hpp"
#include "webworlds/matrices.hpp"
#include "webworlds/polyalg.hpp"
#include "webworlds/words.hpp"

using namespace webworlds;

namespace {

Poly P(const std::string& coeffs) { return poly_from_coeff_list(coeffs); }

Permutation perm(std::vector<int> v) { return Permutation{std::move(v)}; }

} // namespace

TEST_CASE("permutation validation") {
    CHECK_NOTHROW(check_permutation(perm({1})));
    CHECK_NOTHROW(check_permutation(perm({2, 1, 3})));
    CHECK_THROWS_AS(check_permutation(perm({})), InvalidInput);
    CHECK_THROWS_AS(check_permutation(perm({1, 1})), InvalidInput);
    CHECK_THROWS_AS(check_permutation(perm({0, 1})), InvalidInput);
    CHECK_THROWS_AS(check_permutation(perm({1, 3})), InvalidInput);
}

TEST_CASE("indecomposable prefixes") {
    CHECK(is_indecomposable(perm({1})));
    CHECK(is_indecomposable(perm({2, 1})));
    CHECK(is_indecomposable(perm({2, 3, 1})));
    CHECK(is_indecomposable(perm({3, 1, 4, 2})));
    CHECK_FALSE(is_indecomposable(perm({1, 2})));
    CHECK_FALSE(is_indecomposable(perm({2, 1, 3})));
}

TEST_CASE("permutation splitting") {
    auto blocks = perm_decompose(perm({2, 1, 3, 4}));
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].one_line == std::vector<int>{2, 1});
    CHECK(blocks[1].one_line == std::vector<int>{1});
    CHECK(blocks[2].one_line == std::vector<int>{1});

    blocks = perm_decompose(perm({1, 2, 3}));
    REQUIRE(blocks.size() == 3);
    for (const Permutation& b : blocks)
        CHECK(b.one_line == std::vector<int>{1});

    blocks = perm_decompose(perm({2, 3, 1}));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].one_line == std::vector<int>{2, 3, 1});

    blocks = perm_decompose(perm({3, 1, 2, 4, 6, 5}));
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].one_line == std::vector<int>{3, 1, 2});
    CHECK(blocks[1].one_line == std::vector<int>{1});
    CHECK(blocks[2].one_line == std::vector<int>{2, 1});
}

TEST_CASE("words from strings and permutations") {
    CHECK(word_from_string("abc") == Word{1, 2, 3});
    CHECK(word_from_string("cbabac") == Word{3, 2, 1, 2, 1, 3});
    CHECK(word_string(Word{1, 2, 2}) == "abb");
    CHECK_THROWS_AS(word_from_string(""), InvalidInput);
    CHECK_THROWS_AS(word_from_string("aB"), InvalidInput);
    CHECK_THROWS_AS(word_string(Word{27}), InvalidInput);

    CHECK(component_word(perm({2, 1, 3, 4})) == Word{1, 2, 2});
    CHECK(component_word(perm({1, 2, 3, 4})) == Word{1, 1, 1, 1});
    CHECK(component_word(perm({2, 1, 4, 3})) == Word{1, 1});
    CHECK(component_word(perm({2, 3, 1})) == Word{1});
}

TEST_CASE("pass-reading polynomials") {
    CHECK(f_word(word_from_string("cbabac")) == P("0,1,6,17,26,22,8"));
    CHECK(f_word(word_from_string("abc")) == P("0,1,2,1"));
    CHECK(f_word(word_from_string("aaa")) == P("0,1,6,6"));

    // all-distinct letters: x (1+x)^(n-1)
    for (long n = 1; n <= 6; ++n) {
        Word w;
        for (long i = 0; i < n; ++i)
            w.push_back(static_cast<int>(i) + 1);
        Poly expect;
        for (long k = 0; k < n; ++k)
            expect += Poly::monomial(k + 1, binomial(n - 1, k));
        CHECK(f_word(w) == expect);
    }
    // one repeated letter: the ordered-partition polynomial
    for (long n = 1; n <= 6; ++n) {
        Word w(static_cast<size_t>(n), 7);
        CHECK(f_word(w) == fubini(n));
    }
    // letter names are immaterial
    CHECK(f_word(Word{5, 3, 5}) == f_word(Word{1, 2, 1}));

    CHECK_THROWS_AS(f_word(Word{}), InvalidInput);
    CHECK_THROWS_AS(f_word(Word{1, 1, 1, 1}, 3), GuardExceeded);
}

TEST_CASE("two-peg diagrams") {
    CHECK(two_peg_diagram(perm({2, 1})) == WebDiagram({{1, 2, 1, 2}, {1, 2, 2, 1}}, 2));
    CHECK(two_peg_diagram(perm({1, 2})) == WebDiagram({{1, 2, 1, 1}, {1, 2, 2, 2}}, 2));
    CHECK(two_peg_diagram(perm({1})) == WebDiagram({{1, 2, 1, 1}}, 2));
}

TEST_CASE("two-peg diagonal entries") {
    CHECK(two_peg_diagonal(perm({2, 1})) == P("0,1"));
    CHECK(two_peg_diagonal(perm({1, 2})) == P("0,1,2"));
    CHECK(two_peg_diagonal(perm({2, 1, 3, 4})) == f_word(Word{1, 2, 2}));

    // against the matrix diagonal, permutation by permutation
    for (long n = 1; n <= 4; ++n) {
        ColouringMatrix m = colouring_matrix(enumerate_world(WebGraph({{1, 2, n}}, 2)));
        Permutation p;
        p.one_line.resize(n);
        std::iota(p.one_line.begin(), p.one_line.end(), 1);
        do {
            long i = m.world.index_of(two_peg_diagram(p));
            CHECK(two_peg_diagonal(p) == m.entries[i][i]);
        } while (std::next_permutation(p.one_line.begin(), p.one_line.end()));
    }
}

TEST_CASE("two-peg traces") {
    CHECK(two_peg_trace(1) == P("0,1"));
    CHECK(two_peg_trace(2) == P("0,2,2"));
    CHECK(two_peg_trace(3) == P("0,6,8,6"));
    CHECK(two_peg_trace(4) == P("0,24,30,42,24"));
    CHECK(two_peg_trace(5) == P("0,120,116,216,264,120"));
    CHECK(two_peg_trace(6) == P("0,720,532,1002,1920,1920,720"));
    for (long n = 1; n <= 6; ++n)
        CHECK(two_peg_trace(n).coeff(1) == factorial(n));
    CHECK_THROWS_AS(two_peg_trace(0), InvalidInput);
    CHECK_THROWS_AS(two_peg_trace(9), GuardExceeded);
}

TEST_CASE("trace coefficient reports") {
    std::vector<Int> table = {2, 8, 42, 264, 1920};
    for (long n = 2; n <= 6; ++n) {
        ConjectureReport rep = conjecture_report(n);
        CHECK(rep.a_n == table[static_cast<size_t>(n - 2)]);
        CHECK_FALSE(rep.match);
        CHECK(rep.shifted_match);
        CHECK(rep.formula_value_shifted == rep.a_n);
    }
    ConjectureReport rep = conjecture_report(4);
    CHECK(rep.formula_value == 8);
    CHECK(rep.formula_value_shifted == 42);
    CHECK_THROWS_AS(conjecture_report(1), InvalidInput);
}
