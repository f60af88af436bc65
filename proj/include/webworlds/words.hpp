#pragma once

#include <string>
#include <vector>

#include "webworlds/core.hpp"
#include "webworlds/poly.hpp"

namespace webworlds {

// permutation of {1..n} in one-line notation
struct Permutation {
    std::vector<int> one_line;
};

void check_permutation(const Permutation& p);

// true when no proper prefix of the one-line form maps onto {1..j}
bool is_indecomposable(const Permutation& p);

// maximal splitting into indecomposable blocks, each rebased to {1..len}
std::vector<Permutation> perm_decompose(const Permutation& p);

/* A word is a sequence of letter ids; letters are compared by equality
 * and carry no other meaning. */
using Word = std::vector<int>;

// lowercase letters only, 'a' -> 1 .. 'z' -> 26
Word word_from_string(const std::string& s);
std::string word_string(const Word& w);

// word of a permutation: blocks of perm_decompose, equal blocks equal
// letters, ids by first occurrence
Word component_word(const Permutation& p);

inline constexpr long kDefaultWordGuard = 10;

/* F_w(x) = sum_k f_w(k) x^k where f_w(k) counts surjective pass
 * assignments r in [1..k]^n: concatenating, for p = 1..k, the letters at
 * positions {i : r_i = p} in increasing position order must spell w
 * again. */
Poly f_word(const Word& w, long guard = kDefaultWordGuard);

// diagram on two pegs with edges (1,2,i,pi_i)
WebDiagram two_peg_diagram(const Permutation& p);

// diagonal colouring-matrix entry of the two-peg diagram, via its word
Poly two_peg_diagonal(const Permutation& p, long guard = kDefaultWordGuard);

inline constexpr long kDefaultTwoPegGuard = 8;

// sum of two_peg_diagonal over all n! permutations of {1..n}
Poly two_peg_trace(long n, long guard = kDefaultTwoPegGuard);

struct ConjectureReport {
    long n = 0;
    Int a_n;                   // coefficient of x^(n-1) in two_peg_trace(n)
    Int formula_value;         // (n-2)! (n^2 - 3n + 4) / 2
    bool match = false;        // a_n == formula_value
    Int formula_value_shifted; // the same formula evaluated at n + 1
    bool shifted_match = false;
};

/* The closed formula tracks the trace coefficient one index later:
 * evaluating it at n + 1 reproduces a_n on every row tested, the plain
 * reading on none.  Both readings are reported. */
ConjectureReport conjecture_report(long n, long guard = kDefaultTwoPegGuard);

} // namespace webworlds
