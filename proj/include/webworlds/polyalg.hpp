#pragma once

#include <vector>

#include "webworlds/poly.hpp"

namespace webworlds {

Int factorial(long n);
Int binomial(long n, long k); // n >= 0; zero outside 0 <= k <= n
Int multinomial(long n, const std::vector<long>& parts); // parts sum to n

enum class StirlingKind { first_unsigned, second };
Int stirling(long n, long k, StirlingKind kind);

// sum_k k! S2(n,k) x^k; fubini(0) = 1
Poly fubini(long n);

/* Number of 0-1 fillings of an m x k array with row sums i_1..i_m and no
 * zero column: the coefficient of u_1^{i_1}...u_m^{i_m} in
 * ((1+u_1)...(1+u_m) - 1)^k, computed by exact truncated expansion. */
Int s_count(long k, const std::vector<long>& i);

// closed forms for one, two or three rows; cross-checks for s_count
Int s_count_closed(long k, const std::vector<long>& i);

/* Number of m x n 0-1 matrices with exactly r ones and no zero row or
 * column, by inclusion-exclusion over the discarded rows/columns. */
Int n_count(long r, long m, long n);

/* Product A1 <> ... <> Am:
 *   sum_k x^k sum_{i_1..i_m, max <= k <= sum} a1_{i_1}...am_{i_m} S_k(i)
 * Each operand must have zero constant term or be exactly the unit 1. */
Poly black_diamond(const std::vector<Poly>& ops);
Poly diamond_power(const Poly& a, long m); // m = 0 gives the unit 1

// L_0 = 1; L_i = sum_{j,k in [1,i]} n_count(i,j,k) x^{j+k}
Poly l_series(long i);

// a_1 x + a_2 x^2 + ... -> a_1 - a_2/2 + a_3/3 - ...; rejects a nonzero
// constant term
Rat mixing_transform(const Poly& a);

// sum_{a,b=1}^{n} (-1)^{a+b} C(ab-1, k-1) C(n,a) C(n,b)
Rat inner_sum_identity(long n, long k);

} // namespace webworlds
