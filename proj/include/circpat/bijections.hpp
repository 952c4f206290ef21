#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circpat/core.hpp"

namespace circpat {

/*
 * Constructive maps behind the counting formulas: explicit bijections from
 * simple 0-1 words onto avoider sets, the recursive peeling of 1324-avoiders
 * by the position of n-1, and total validators for the structural shape of
 * 1342- and 1234-avoiders.
 */

using Bits = std::vector<uint8_t>;  // values 0/1

Bits parse_bits(const std::string& text);
std::string bits_str(const Bits& b);

// Fibonacci word: empty, or starts with 0 and has no two consecutive 1s.
// There are F(m) of length m-1.
bool is_fib_word(const Bits& b);

// Code words for the 1342 bijection: any 0-1 word whose number of 1s is not
// exactly one.  There are 2^m - m of length m.
bool is_code_word_1342(const Bits& b);

// ---- bit strings <-> {213,231}-avoiding linear permutations ----
// Bit i says whether position i receives the largest (1) or smallest (0)
// letter not yet used; the last position gets the leftover.  A bijection from
// length n-1 bit strings onto the 2^(n-1) avoiders of {213, 231} on 1..n.
LinearWord minmax_bits_to_perm(const Bits& bits);
Bits minmax_perm_to_bits(const LinearWord& w);  // rejects words containing 213 or 231

// All Fibonacci words of length m-1, lexicographic.
std::vector<Bits> fib_words(int m);

// One peeling step of a Fibonacci word of even length 2n-4 (the encoding of
// a 1324-avoider on 1..n, n >= 3): strip a leading "01", or strip a leading
// "00" plus the maximal run of "10" pairs after it.
enum class FibBranch : uint8_t { pair01, zeros00 };

struct FibWordStep {
    FibBranch branch;
    int ten_pairs;  // "10" pairs stripped after the leading "00"; 0 for pair01
    Bits remainder;
};

FibWordStep fib_word_step(const Bits& w);
Bits fib_word_unstep(const FibWordStep& step);

// Composite encoding: Fibonacci words of length 2n-4 <-> 1324-avoiders on
// 1..n (n >= 2).  The 01 branch matches position n-1 of the letter n-1; the
// (00, k) branch matches position k+1.
CircularPermutation fib_word_to_avoider_1324(int n, const Bits& w);
Bits avoider_1324_to_fib_word(const CircularPermutation& c);

// Peeling a 1324-avoider by the position k of n-1.  For k <= n-2 the first k
// letters are forced to be n-k..n-1 in increasing order; dropping them and
// relabeling n to n-k leaves an avoider on 1..n-k.  For k = n-1 dropping n
// leaves an avoider on 1..n-1.
struct Decomposition1324 {
    int parent_size;  // n
    int pivot_pos;    // k, position of n-1 in the parent
    CircularPermutation child;
};

Decomposition1324 decompose_1324(const CircularPermutation& c);  // n >= 3, input must avoid 1324
CircularPermutation compose_1324(const Decomposition1324& d);

// All length-m code words (number of 1s != 1), lexicographic.
std::vector<Bits> code_words_1342(int m);

// Code words of length n-1 <-> 1342-avoiders on 1..n.
CircularPermutation code_to_avoider_1342(const Bits& code);
Bits avoider_1342_to_code(const CircularPermutation& c);

// Shape of a 1342-avoider whose canonical word has n-1 at position k >= 2:
// head: increasing run of consecutive letters head_base..head_base+k-2,
// then n-1, then the letters above the head ordered to avoid {213, 231},
// then the letters below the head in increasing order, then n.
struct Decomposition1342 {
    int pivot_pos;           // k
    int head_base;           // least (= first) letter of the head
    std::vector<int> head;
    std::vector<int> upper;
    std::vector<int> lower;
};

// Checks the shape; empty result means the word is not of that form.
// Succeeds exactly when the word avoids 1342 (precondition: n >= 4, k >= 2).
std::optional<Decomposition1342> validate_structure_1342(const CircularPermutation& c);

// Shape of a 1234-avoider with n-1 at position k >= 2.  For k = 2 a single
// letter precedes n-1 and the tail's letters above it and below it each
// decrease.  For k >= 3 the head is strictly decreasing with minimum
// head_min and maximum head_max; the tail splits by value into low (below
// head_min), gap (between, not in the head) and high (above head_max); a
// nonempty gap forces the whole tail to decrease, otherwise low and high
// each decrease.
struct Structure1234 {
    int pivot_pos;                // k
    int lone_head = 0;            // k == 2 only
    int head_min = 0;             // k >= 3
    int head_max = 0;             // k >= 3
    std::vector<int> head_inner;  // head letters strictly between min and max
    std::vector<int> low, gap, high;
};

// Succeeds exactly when the word avoids 1234 (precondition: n >= 4, k >= 2).
std::optional<Structure1234> validate_structure_1234(const CircularPermutation& c);

}  // namespace circpat
