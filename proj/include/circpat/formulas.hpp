#pragma once

#include <stdexcept>

#include "circpat/bigint.hpp"
#include "circpat/core.hpp"
#include "circpat/enumerate.hpp"

namespace circpat {

/*
 * Closed forms and recurrences for the number u_n of circular permutations of
 * 1..n avoiding a single 4-letter pattern.  Up to rotation and reversal there
 * are three classes, with representatives 1234, 1324, 1342:
 *
 *   1324 class:  u_n = F(2n-3)                 (Fibonacci, F(1) = F(2) = 1)
 *   1342 class:  u_n = 2^(n-1) - (n-1)
 *   1234 class:  u_n = 2^n + 1 - 2n - C(n,3)
 *
 * Every 3-letter pattern has exactly one avoider for every n.  The stratified
 * counts fix the position k of the letter n-1 in the canonical word.
 */

struct unsupported_pattern_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

BigInt fib(int m);                          // F(1) = F(2) = 1
BigInt binomial(long long a, long long b);  // 0 when b < 0 or b > a

BigInt count_1324_closed(int n);
BigInt count_1342_closed(int n);
BigInt count_1234_closed(int n);

// Same values by recurrence:
//   1324:  u_n = u_{n-1} + sum_{k=1}^{n-2} u_{n-k}
//   1342:  u_n = u_{n-1} + 2^(n-2) - 1
//   1234:  u_n = u_{n-1} + 2^(n-1) - n - C(n-2,2)
// all with u_1 = u_2 = 1.  Each evaluation keeps its table local.
BigInt count_1324_recurrence(int n);
BigInt count_1342_recurrence(int n);
BigInt count_1234_recurrence(int n);

// Avoiders with n-1 at position k of the canonical word.
//   1324:  k <= n-2 -> u_{n-k};               k = n-1 -> u_{n-1}      (n >= 3)
//   1342:  k = 1 -> u_{n-1};  2 <= k <= n-2 -> 2^(n-k-1);  k = n-1 -> 1
//   1234:  k = 1 -> u_{n-1};  k = 2 -> 2^(n-3);
//          3 <= k <= n-1 -> 2^(n-1-k) + C(n-2,k-1) - n + k
BigInt stratified_1324(int n, int k);
BigInt stratified_1342(int n, int k);  // n >= 4
BigInt stratified_1234(int n, int k);  // n >= 4

enum class PatternFamily { f1234, f1324, f1342 };

// Which of the three counting classes a 4-letter pattern belongs to (its
// rotation orbit, or the reversal of that orbit).
PatternFamily classify_4letter(const Pattern& p);

// Lexicographically least cyclic rotation of p.
Pattern orbit_representative(const Pattern& p);

// Closed-form count for any pattern of length 3 (always 1) or 4 (dispatch on
// class).  Other lengths raise unsupported_pattern_error.
AvoiderCount count_for_pattern(int n, const Pattern& p);
BigInt count_recurrence_for_pattern(int n, const Pattern& p);

enum class GrowthKind { phi_squared, two };

struct GrowthConstant {
    double value;
    GrowthKind kind;
};

// lim u_n^(1/n): (3+sqrt(5))/2 for the 1324 class, 2 for the other two.
GrowthConstant growth_constant(const Pattern& p);

// v^(1/n) computed through 50-digit floats, returned as double.
double nth_root(const BigInt& v, int n);

}  // namespace circpat
