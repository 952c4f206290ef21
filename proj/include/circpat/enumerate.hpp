#pragma once

#include <functional>
#include <optional>

#include "circpat/bigint.hpp"
#include "circpat/core.hpp"

namespace circpat {

/*
 * Exhaustive enumeration over the (n-1)! canonical words, used as the ground
 * truth that every formula and bijection is checked against.  Deliberately
 * free of caching or closed-form shortcuts.
 */

enum class CountMethod { brute, formula, recurrence, bijection_image };

struct AvoiderCount {
    int n;
    std::vector<Pattern> patterns;
    BigInt count;
    CountMethod method;
};

struct PositionStratum {
    int k;  // position (1-based) of the letter n-1 in the canonical word
    BigInt count;
};

// Yields canonical words in lexicographic order of the first n-1 letters.
// A prefix pins the first letters, which partitions the full stream into
// disjoint sub-streams for parallel consumption.
class CanonicalWordStream {
public:
    explicit CanonicalWordStream(int n);
    CanonicalWordStream(int n, std::vector<int> prefix);

    std::optional<CircularPermutation> next();

private:
    std::vector<int> word_;
    size_t fixed_;
    bool done_;
};

// Internal-iteration forms of the same stream (no per-word allocation).
void for_each_canonical_word(int n, const std::function<void(std::span<const int>)>& visit);
void for_each_canonical_word_with_prefix(int n, std::span<const int> prefix,
                                         const std::function<void(std::span<const int>)>& visit);
void for_each_linear_perm(int n, const std::function<void(std::span<const int>)>& visit);

// Circular permutations of 1..n containing none of ps.  workers > 1 splits
// the stream by first letter; the merged count is identical to a sequential
// run.
AvoiderCount count_avoiders(int n, const std::vector<Pattern>& ps, int workers = 1);

std::vector<CircularPermutation> list_avoiders(int n, const std::vector<Pattern>& ps);

// Avoiders whose canonical word has n-1 at position k (1 <= k <= n-1).
PositionStratum count_avoiders_at_position(int n, const std::vector<Pattern>& ps, int k);

// Ordinary (non-circular) permutations of 1..n avoiding all of ps linearly.
AvoiderCount count_linear_avoiders(int n, const std::vector<Pattern>& ps);

}  // namespace circpat
