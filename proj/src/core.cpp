#include "circpat/core.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace circpat {

namespace {

constexpr int kMaxPatternLength = 16;

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool is_permutation_of_1_to_n(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int x : w) {
        if (x < 1 || x > n || seen[static_cast<size_t>(x)]) return false;
        seen[static_cast<size_t>(x)] = 1;
    }
    return true;
}

std::vector<int> split_ints(const std::string& text, char sep) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a number: '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        require(pos == item.size(), "trailing characters after number");
        out.push_back(v);
    }
    return out;
}

}  // namespace

Pattern::Pattern(std::vector<int> letters) : letters_(std::move(letters)) {
    require(!letters_.empty(), "empty pattern");
    require(static_cast<int>(letters_.size()) <= kMaxPatternLength, "pattern too long");
    require(is_permutation_of_1_to_n(letters_), "pattern is not a permutation of 1..k");
}

Pattern Pattern::from_string(const std::string& text) {
    require(!text.empty(), "empty pattern");
    if (text.find(',') != std::string::npos) {
        return Pattern(split_ints(text, ','));
    }
    // Digit-string form covers k <= 9 only; longer patterns need commas.
    require(text.size() <= 9, "digit-string patterns are limited to length 9; use commas");
    std::vector<int> letters;
    letters.reserve(text.size());
    for (char ch : text) {
        require(ch >= '1' && ch <= '9', "pattern digits must be 1..9");
        letters.push_back(ch - '0');
    }
    return Pattern(std::move(letters));
}

std::string Pattern::str() const {
    std::string out;
    if (length() <= 9) {
        for (int x : letters_) out.push_back(static_cast<char>('0' + x));
        return out;
    }
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(letters_[i]);
    }
    return out;
}

CircularPermutation::CircularPermutation(std::vector<int> canonical_word)
    : word_(std::move(canonical_word)) {
    require(!word_.empty(), "empty circular permutation");
    require(is_permutation_of_1_to_n(word_), "word is not a permutation of 1..n");
    require(word_.back() == static_cast<int>(word_.size()), "canonical word must end in n");
}

std::string CircularPermutation::str() const { return word_str(word_); }

Pattern reduce(const LinearWord& w) {
    require(!w.empty(), "cannot reduce the empty word");
    require(static_cast<int>(w.size()) <= kMaxPatternLength, "word too long to reduce");
    std::vector<int> sorted(w);
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "duplicate letters");
    std::vector<int> ranks(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        ranks[i] = 1 + static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w[i]) -
                                        sorted.begin());
    }
    return Pattern(std::move(ranks));
}

CircularPermutation canonicalize(const LinearWord& arrangement) {
    require(!arrangement.empty(), "empty arrangement");
    require(is_permutation_of_1_to_n(arrangement), "arrangement is not a permutation of 1..n");
    const int n = static_cast<int>(arrangement.size());
    const size_t cut =
        static_cast<size_t>(std::find(arrangement.begin(), arrangement.end(), n) -
                            arrangement.begin()) +
        1;
    std::vector<int> rotated;
    rotated.reserve(arrangement.size());
    rotated.insert(rotated.end(), arrangement.begin() + static_cast<long>(cut % arrangement.size()),
                   arrangement.end());
    rotated.insert(rotated.end(), arrangement.begin(),
                   arrangement.begin() + static_cast<long>(cut % arrangement.size()));
    return CircularPermutation(std::move(rotated));
}

std::vector<Pattern> cyclic_rotations(const Pattern& p) {
    const int k = p.length();
    std::vector<Pattern> out;
    out.reserve(static_cast<size_t>(k));
    std::vector<int> rot(p.letters());
    for (int i = 0; i < k; ++i) {
        out.emplace_back(rot);
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    return out;
}

Pattern reversal(const Pattern& p) {
    std::vector<int> rev(p.letters().rbegin(), p.letters().rend());
    return Pattern(std::move(rev));
}

std::vector<PatternClass> pattern_classes(int k) {
    require(k >= 1, "k must be positive");
    require(k <= 8, "pattern classes supported for k <= 8");

    auto orbit_min = [](const Pattern& p) {
        auto rots = cyclic_rotations(p);
        return *std::min_element(rots.begin(), rots.end());
    };

    std::vector<PatternClass> classes;
    std::vector<int> letters(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) letters[static_cast<size_t>(i)] = i + 1;
    std::vector<std::vector<int>> seen;
    do {
        if (std::binary_search(seen.begin(), seen.end(), letters)) continue;
        // Lexicographic iteration reaches the least member of each orbit first.
        Pattern rep{letters};
        auto orbit = cyclic_rotations(rep);
        std::sort(orbit.begin(), orbit.end());
        for (const Pattern& q : orbit) {
            seen.insert(std::lower_bound(seen.begin(), seen.end(), q.letters()), q.letters());
        }
        Pattern partner = orbit_min(reversal(rep));
        classes.push_back(PatternClass{rep, std::move(orbit), std::move(partner)});
    } while (std::next_permutation(letters.begin(), letters.end()));
    return classes;
}

namespace {

// Backtracking subsequence match; idx(off) maps logical offsets to word
// positions so the same search serves linear words and rotated windows.
template <typename Idx>
bool match_pattern(std::span<const int> word, const Pattern& p, Idx idx) {
    const int n = static_cast<int>(word.size());
    const int k = p.length();
    if (k > n) return false;
    std::array<int, kMaxPatternLength> chosen{};  // logical offsets, increasing
    int t = 0;
    int cand = 0;
    while (true) {
        const int limit = n - (k - t) + 1;  // leave room for the rest of p
        bool placed = false;
        for (; cand < limit; ++cand) {
            const int v = word[static_cast<size_t>(idx(cand))];
            bool ok = true;
            for (int j = 0; j < t; ++j) {
                const int u = word[static_cast<size_t>(idx(chosen[static_cast<size_t>(j)]))];
                if ((u < v) != (p.at(j) < p.at(t))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                placed = true;
                break;
            }
        }
        if (placed) {
            if (t == k - 1) return true;
            chosen[static_cast<size_t>(t)] = cand;
            ++t;
            ++cand;
        } else {
            if (t == 0) return false;
            --t;
            cand = chosen[static_cast<size_t>(t)] + 1;
        }
    }
}

}  // namespace

bool contains_linear(std::span<const int> w, const Pattern& p) {
    return match_pattern(w, p, [](int off) { return off; });
}

bool contains_in_rotation(std::span<const int> word, int start, const Pattern& p) {
    const int n = static_cast<int>(word.size());
    return match_pattern(word, p, [start, n](int off) {
        int i = start + off;
        return i < n ? i : i - n;
    });
}

bool contains_circular_word(std::span<const int> word, const Pattern& p) {
    const int n = static_cast<int>(word.size());
    for (int s = 0; s < n; ++s) {
        if (contains_in_rotation(word, s, p)) return true;
    }
    return false;
}

bool contains_circular(const CircularPermutation& c, const Pattern& p) {
    return contains_circular_word(c.word(), p);
}

bool contains_circular_via_rotations(const CircularPermutation& c, const Pattern& p) {
    for (const Pattern& q : cyclic_rotations(p)) {
        if (contains_linear(c.word(), q)) return true;
    }
    return false;
}

std::vector<OccurrenceWitness> find_occurrences_circular(const CircularPermutation& c,
                                                         const Pattern& p) {
    const int n = c.size();
    const int k = p.length();
    std::vector<OccurrenceWitness> out;
    if (k > n) return out;

    const auto rotations = cyclic_rotations(p);
    const auto& word = c.word();

    // Every k-subset of positions is read clockwise from each of its elements;
    // the readings are the k rotations of one word, so the subset matches p
    // (from a unique start) exactly when its left-to-right reduction is one of
    // the rotations of p.
    std::vector<int> comb(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
    std::vector<int> letters(static_cast<size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i)
            letters[static_cast<size_t>(i)] = word[static_cast<size_t>(comb[static_cast<size_t>(i)])];
        const Pattern red = reduce(letters);
        for (int t = 0; t < k; ++t) {
            bool eq = true;
            for (int i = 0; i < k && eq; ++i) {
                eq = red.at((t + i) % k) == p.at(i);
            }
            if (eq) {
                OccurrenceWitness wit;
                wit.start = comb[static_cast<size_t>(t)] + 1;
                for (int i = 0; i < k; ++i)
                    wit.positions.push_back(comb[static_cast<size_t>((t + i) % k)] + 1);
                out.push_back(std::move(wit));
                break;  // rotations of a duplicate-free word are distinct
            }
        }
        int i = k - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

long long count_occurrences_circular(const CircularPermutation& c, const Pattern& p) {
    return static_cast<long long>(find_occurrences_circular(c, p).size());
}

LinearWord parse_word(const std::string& text) {
    std::vector<int> letters;
    if (text.find(',') != std::string::npos) {
        letters = split_ints(text, ',');
    } else {
        std::istringstream in(text);
        std::string item;
        while (in >> item) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("not a number: '" + item + "'");
            }
            require(pos == item.size(), "trailing characters after number");
            letters.push_back(v);
        }
    }
    require(!letters.empty(), "empty word");
    return letters;
}

std::string word_str(std::span<const int> w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(w[i]);
    }
    return out;
}

}  // namespace circpat
