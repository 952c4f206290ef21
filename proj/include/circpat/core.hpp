#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace circpat {

/*
 * A circular permutation is an arrangement of 1..n around a circle, read
 * clockwise, identified up to rotation.  Its canonical form is the unique
 * linear word that ends in n.  A pattern occurs in a circular permutation if
 * some clockwise subsequence spanning at most one revolution is order
 * isomorphic to it; a circular permutation avoids every rotation of a pattern
 * it avoids, so patterns are classified up to rotation (and reversal, which
 * corresponds to reading the circle counterclockwise).
 */

// Word of pairwise distinct positive integers; values need not be contiguous.
using LinearWord = std::vector<int>;

// Permutation of 1..k used as a forbidden relative-order template.
class Pattern {
public:
    explicit Pattern(std::vector<int> letters);

    // "1324" for k <= 9; comma-separated ("4,11,2,...") for longer patterns.
    static Pattern from_string(const std::string& text);

    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const { return letters_; }
    int at(int i) const { return letters_[static_cast<size_t>(i)]; }  // 0-based

    std::string str() const;
    auto operator<=>(const Pattern&) const = default;

private:
    std::vector<int> letters_;
};

// Rotation class of arrangements of 1..n, stored as the word ending in n.
class CircularPermutation {
public:
    explicit CircularPermutation(std::vector<int> canonical_word);

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    std::string str() const;
    auto operator<=>(const CircularPermutation&) const = default;

private:
    std::vector<int> word_;
};

// One occurrence: the position (1-based, in the canonical word) where the
// occurrence starts, and all k positions in the order they are read.  Each
// position set yields at most one witness because the rotations of a word of
// distinct letters are pairwise distinct.
struct OccurrenceWitness {
    int start;
    std::vector<int> positions;
};

struct PatternClass {
    Pattern representative;               // lexicographically least in the orbit
    std::vector<Pattern> rotation_orbit;  // sorted
    Pattern reversal_partner_representative;
};

// Rank relabeling: smallest letter becomes 1, and so on.  Rejects duplicates.
Pattern reduce(const LinearWord& w);

// Rotates an arrangement of 1..n so that n comes last.  Rejects words that
// are not a permutation of 1..n (in particular the empty word).
CircularPermutation canonicalize(const LinearWord& arrangement);

// The k word-rotations of p, each again a permutation of 1..k.
std::vector<Pattern> cyclic_rotations(const Pattern& p);

Pattern reversal(const Pattern& p);

// All k! patterns grouped into rotation orbits, sorted by representative,
// each annotated with the representative of the orbit its reversal lands in.
std::vector<PatternClass> pattern_classes(int k);

// Classical containment: some subsequence of w reduces to p.
bool contains_linear(std::span<const int> w, const Pattern& p);

// Circular containment, computed by scanning all n linearizations (one per
// starting rotation) for linear containment of p.
bool contains_circular(const CircularPermutation& c, const Pattern& p);

// Same predicate by the independent route: the canonical word linearly
// contains some member of cyclic_rotations(p).  Must agree with the above.
bool contains_circular_via_rotations(const CircularPermutation& c, const Pattern& p);

// Raw-word forms used by the enumerator's inner loop (word must be a
// permutation of 1..n; not re-validated here).
bool contains_circular_word(std::span<const int> word, const Pattern& p);
bool contains_in_rotation(std::span<const int> word, int start, const Pattern& p);

std::vector<OccurrenceWitness> find_occurrences_circular(const CircularPermutation& c,
                                                         const Pattern& p);
long long count_occurrences_circular(const CircularPermutation& c, const Pattern& p);

// "5 6 4 2 3 1 7" or "5,6,4,2,3,1,7" -> letters.
LinearWord parse_word(const std::string& text);
std::string word_str(std::span<const int> w);

}  // namespace circpat
