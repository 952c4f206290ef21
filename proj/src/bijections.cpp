#include "circpat/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace circpat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

const Pattern& pat_213() {
    static const Pattern p = Pattern::from_string("213");
    return p;
}
const Pattern& pat_231() {
    static const Pattern p = Pattern::from_string("231");
    return p;
}
const Pattern& pat_1324() {
    static const Pattern p = Pattern::from_string("1324");
    return p;
}
const Pattern& pat_1342() {
    static const Pattern p = Pattern::from_string("1342");
    return p;
}

int popcount(const Bits& b) {
    int ones = 0;
    for (uint8_t x : b) ones += x;
    return ones;
}

int find_letter(const std::vector<int>& word, int letter) {
    return static_cast<int>(std::find(word.begin(), word.end(), letter) - word.begin());
}

bool strictly_decreasing(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] <= v[i]) return false;
    }
    return true;
}

bool strictly_increasing(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] >= v[i]) return false;
    }
    return true;
}

std::optional<Decomposition1342> extract_1342_shape(const std::vector<int>& word, int n, int k);

}  // namespace

Bits parse_bits(const std::string& text) {
    Bits out;
    out.reserve(text.size());
    for (char ch : text) {
        require(ch == '0' || ch == '1', "bits must be 0 or 1");
        out.push_back(static_cast<uint8_t>(ch - '0'));
    }
    return out;
}

std::string bits_str(const Bits& b) {
    std::string out;
    out.reserve(b.size());
    for (uint8_t x : b) out.push_back(static_cast<char>('0' + x));
    return out;
}

bool is_fib_word(const Bits& b) {
    if (b.empty()) return true;
    if (b[0] != 0) return false;
    for (size_t i = 1; i < b.size(); ++i) {
        if (b[i] == 1 && b[i - 1] == 1) return false;
    }
    return true;
}

bool is_code_word_1342(const Bits& b) { return popcount(b) != 1; }

LinearWord minmax_bits_to_perm(const Bits& bits) {
    const int n = static_cast<int>(bits.size()) + 1;
    // The unused letters always form an interval, so the extremes are the ends.
    int lo = 1, hi = n;
    LinearWord w;
    w.reserve(static_cast<size_t>(n));
    for (uint8_t b : bits) w.push_back(b ? hi-- : lo++);
    w.push_back(lo);
    return w;
}

Bits minmax_perm_to_bits(const LinearWord& w) {
    const int n = static_cast<int>(w.size());
    require(n >= 1, "empty word");
    {
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int x : w) {
            require(x >= 1 && x <= n && !seen[static_cast<size_t>(x)],
                    "word is not a permutation of 1..n");
            seen[static_cast<size_t>(x)] = 1;
        }
    }
    require(!contains_linear(w, pat_213()) && !contains_linear(w, pat_231()),
            "word must avoid 213 and 231");
    Bits bits;
    bits.reserve(static_cast<size_t>(n) - 1);
    int lo = 1, hi = n;
    for (int i = 0; i + 1 < n; ++i) {
        if (w[static_cast<size_t>(i)] == hi) {
            bits.push_back(1);
            --hi;
        } else if (w[static_cast<size_t>(i)] == lo) {
            bits.push_back(0);
            ++lo;
        } else {
            // An avoider's every letter is an extreme of the unused set: a
            // middle letter would start a 213 or 231 with a later pair.
            throw std::logic_error("letter is neither extreme of the unused set");
        }
    }
    return bits;
}

std::vector<Bits> fib_words(int m) {
    require(m >= 1, "Fibonacci word index must be positive");
    const int len = m - 1;
    std::vector<Bits> out;
    Bits cur;
    auto emit = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        cur.push_back(0);
        self(self);
        cur.pop_back();
        if (!cur.empty() && cur.back() == 0) {
            cur.push_back(1);
            self(self);
            cur.pop_back();
        }
    };
    emit(emit);
    return out;
}

FibWordStep fib_word_step(const Bits& w) {
    require(is_fib_word(w), "not a Fibonacci word");
    require(w.size() >= 2 && w.size() % 2 == 0, "peeling needs even length >= 2");
    if (w[1] == 1) {
        return FibWordStep{FibBranch::pair01, 0, Bits(w.begin() + 2, w.end())};
    }
    size_t idx = 2;
    int pairs = 0;
    while (idx + 1 < w.size() && w[idx] == 1 && w[idx + 1] == 0) {
        ++pairs;
        idx += 2;
    }
    Bits rest(w.begin() + static_cast<long>(idx), w.end());
    // Even length and the no-11 rule leave no way for the rest to begin with 1.
    if (!rest.empty() && rest[0] != 0) throw std::logic_error("dangling 1 after pair run");
    return FibWordStep{FibBranch::zeros00, pairs, std::move(rest)};
}

Bits fib_word_unstep(const FibWordStep& step) {
    require(is_fib_word(step.remainder), "remainder is not a Fibonacci word");
    require(step.remainder.size() % 2 == 0, "remainder must have even length");
    Bits out;
    if (step.branch == FibBranch::pair01) {
        require(step.ten_pairs == 0, "pair01 branch carries no 10-pairs");
        out = {0, 1};
    } else {
        require(step.ten_pairs >= 0, "negative pair count");
        out = {0, 0};
        for (int i = 0; i < step.ten_pairs; ++i) {
            out.push_back(1);
            out.push_back(0);
        }
    }
    out.insert(out.end(), step.remainder.begin(), step.remainder.end());
    return out;
}

CircularPermutation fib_word_to_avoider_1324(int n, const Bits& w) {
    require(n >= 2, "encoding starts at n = 2");
    require(is_fib_word(w), "not a Fibonacci word");
    require(static_cast<int>(w.size()) == 2 * n - 4, "word length must be 2n-4");
    if (n == 2) return CircularPermutation{{1, 2}};
    const FibWordStep step = fib_word_step(w);
    if (step.branch == FibBranch::pair01) {
        CircularPermutation child = fib_word_to_avoider_1324(n - 1, step.remainder);
        return compose_1324(Decomposition1324{n, n - 1, std::move(child)});
    }
    const int k = step.ten_pairs + 1;  // (00, k-1 pairs) branch puts n-1 at position k
    CircularPermutation child = fib_word_to_avoider_1324(n - 1 - step.ten_pairs, step.remainder);
    return compose_1324(Decomposition1324{n, k, std::move(child)});
}

Bits avoider_1324_to_fib_word(const CircularPermutation& c) {
    const int n = c.size();
    require(n >= 2, "encoding starts at n = 2");
    require(!contains_circular(c, pat_1324()), "input contains 1324");
    if (n == 2) return {};
    const Decomposition1324 d = decompose_1324(c);
    if (d.pivot_pos == n - 1) {
        return fib_word_unstep(
            FibWordStep{FibBranch::pair01, 0, avoider_1324_to_fib_word(d.child)});
    }
    return fib_word_unstep(FibWordStep{FibBranch::zeros00, d.pivot_pos - 1,
                                       avoider_1324_to_fib_word(d.child)});
}

Decomposition1324 decompose_1324(const CircularPermutation& c) {
    const int n = c.size();
    require(n >= 3, "peeling needs n >= 3");
    require(!contains_circular(c, pat_1324()), "input contains 1324");
    const auto& word = c.word();
    const int k = find_letter(word, n - 1) + 1;
    if (k == n - 1) {
        std::vector<int> child(word.begin(), word.end() - 1);
        return Decomposition1324{n, k, CircularPermutation(std::move(child))};
    }
    // With n-1 this early, avoidance forces the first k letters to be
    // n-k..n-1 in increasing order.
    for (int i = 0; i < k; ++i) {
        if (word[static_cast<size_t>(i)] != n - k + i) {
            throw std::logic_error("1324-avoider head is not the forced increasing run");
        }
    }
    std::vector<int> child(word.begin() + k, word.end());
    child.back() = n - k;  // relabel n
    return Decomposition1324{n, k, CircularPermutation(std::move(child))};
}

CircularPermutation compose_1324(const Decomposition1324& d) {
    const int n = d.parent_size;
    const int k = d.pivot_pos;
    const int child_n = d.child.size();
    require(n >= 3, "parent size must be >= 3");
    require(k >= 1 && k <= n - 1, "pivot position must lie in 1..n-1");
    if (k == n - 1) {
        require(child_n == n - 1, "child size must be n-1 for pivot n-1");
        std::vector<int> word(d.child.word());
        word.push_back(n);
        return CircularPermutation(std::move(word));
    }
    require(child_n == n - k, "child size must be n-k");
    std::vector<int> word;
    word.reserve(static_cast<size_t>(n));
    for (int i = 0; i < k; ++i) word.push_back(n - k + i);
    word.insert(word.end(), d.child.word().begin(), d.child.word().end());
    word.back() = n;  // relabel the child's n-k back to n
    return CircularPermutation(std::move(word));
}

std::vector<Bits> code_words_1342(int m) {
    require(m >= 0, "length must be nonnegative");
    require(m <= 24, "code word listing capped at length 24");
    std::vector<Bits> out;
    for (uint32_t v = 0; v < (1u << m); ++v) {
        Bits b(static_cast<size_t>(m));
        int ones = 0;
        for (int i = 0; i < m; ++i) {
            b[static_cast<size_t>(i)] = static_cast<uint8_t>((v >> (m - 1 - i)) & 1u);
            ones += b[static_cast<size_t>(i)];
        }
        if (ones != 1) out.push_back(std::move(b));
    }
    return out;
}

namespace {

// Recursive construction for the 1342 code.  u has length n-1 and not exactly
// one 1; returns the canonical word on 1..n.
std::vector<int> build_1342(const Bits& u, int n) {
    if (n == 1) return {1};
    if (u[0] == 0) {
        // n-1 leads; the rest is the n-1 construction with its last letter
        // bumped to make room for the final n.
        Bits rest(u.begin() + 1, u.end());
        std::vector<int> child = build_1342(rest, n - 1);
        std::vector<int> word;
        word.reserve(static_cast<size_t>(n));
        word.push_back(n - 1);
        word.insert(word.end(), child.begin(), child.end() - 1);
        word.push_back(n);
        return word;
    }
    // First bit 1: n-1 sits at the position k of the next 1 (one exists since
    // the number of 1s is at least two).
    int k = 0;
    for (int i = 2; i <= n - 1; ++i) {
        if (u[static_cast<size_t>(i - 1)] == 1) {
            k = i;
            break;
        }
    }
    if (k == 0) throw std::logic_error("second 1 missing in 1342 code");
    // j: position of the following 1 inside u_{k+1}..u_{n-1}, or n-k if none.
    int j = n - k;
    for (int t = 1; t <= n - 1 - k; ++t) {
        if (u[static_cast<size_t>(k + t - 1)] == 1) {
            j = t;
            break;
        }
    }
    std::vector<int> word;
    word.reserve(static_cast<size_t>(n));
    for (int i = 0; i < k - 1; ++i) word.push_back(j + i);  // head run j..j+k-2
    word.push_back(n - 1);
    const int upper_size = n - k - j;  // letters j+k-1..n-2
    if (upper_size > 0) {
        Bits upper_bits(u.begin() + (k + j), u.end());
        LinearWord upper = minmax_bits_to_perm(upper_bits);
        for (int x : upper) word.push_back(j + k - 2 + x);
    }
    for (int i = 1; i <= j - 1; ++i) word.push_back(i);  // increasing low tail
    word.push_back(n);
    return word;
}

}  // namespace

CircularPermutation code_to_avoider_1342(const Bits& code) {
    require(is_code_word_1342(code), "code must not contain exactly one 1");
    const int n = static_cast<int>(code.size()) + 1;
    return CircularPermutation(build_1342(code, n));
}

Bits avoider_1342_to_code(const CircularPermutation& c) {
    const int n = c.size();
    require(!contains_circular(c, pat_1342()), "input contains 1342");
    if (n == 1) return {};
    const auto& word = c.word();
    const int k = find_letter(word, n - 1) + 1;
    if (k == 1) {
        std::vector<int> child(word.begin() + 1, word.end() - 1);
        child.push_back(n - 1);
        Bits rest = avoider_1342_to_code(CircularPermutation(std::move(child)));
        Bits out;
        out.reserve(static_cast<size_t>(n) - 1);
        out.push_back(0);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }
    const auto shape = extract_1342_shape(word, n, k);
    if (!shape) throw std::logic_error("1342-avoider failed its own structure check");
    const int j = shape->head_base;
    Bits out(static_cast<size_t>(n) - 1, 0);
    out[0] = 1;
    out[static_cast<size_t>(k) - 1] = 1;
    if (!shape->upper.empty()) {
        out[static_cast<size_t>(k + j) - 1] = 1;
        LinearWord reduced;
        reduced.reserve(shape->upper.size());
        for (int x : shape->upper) reduced.push_back(x - (j + k - 2));
        const Bits upper_bits = minmax_perm_to_bits(reduced);
        std::copy(upper_bits.begin(), upper_bits.end(), out.begin() + (k + j));
    }
    return out;
}

namespace {

std::optional<Decomposition1342> extract_1342_shape(const std::vector<int>& word, int n, int k) {
    Decomposition1342 d;
    d.pivot_pos = k;
    d.head.assign(word.begin(), word.begin() + (k - 1));
    const int j = d.head[0];
    d.head_base = j;
    // Head: increasing run of consecutive letters starting at j.
    for (int i = 0; i < k - 1; ++i) {
        if (d.head[static_cast<size_t>(i)] != j + i) return std::nullopt;
    }
    // Tail: letters above the head first, then letters below it, increasing.
    const int head_top = j + k - 2;
    bool seen_low = false;
    for (int i = k; i < n - 1; ++i) {
        const int x = word[static_cast<size_t>(i)];
        if (x > head_top) {
            if (seen_low) return std::nullopt;
            d.upper.push_back(x);
        } else {
            seen_low = true;
            d.lower.push_back(x);
        }
    }
    if (!strictly_increasing(d.lower)) return std::nullopt;
    if (contains_linear(d.upper, pat_213()) || contains_linear(d.upper, pat_231())) {
        return std::nullopt;
    }
    return d;
}

}  // namespace

std::optional<Decomposition1342> validate_structure_1342(const CircularPermutation& c) {
    const int n = c.size();
    require(n >= 4, "structure check needs n >= 4");
    const auto& word = c.word();
    const int k = find_letter(word, n - 1) + 1;
    require(k >= 2, "letter n-1 must not lead the word");
    return extract_1342_shape(word, n, k);
}

std::optional<Structure1234> validate_structure_1234(const CircularPermutation& c) {
    const int n = c.size();
    require(n >= 4, "structure check needs n >= 4");
    const auto& word = c.word();
    const int k = find_letter(word, n - 1) + 1;
    require(k >= 2, "letter n-1 must not lead the word");

    Structure1234 s;
    s.pivot_pos = k;
    if (k == 2) {
        s.lone_head = word[0];
        int prev_high = n, prev_low = n;
        for (int i = 2; i < n - 1; ++i) {
            const int x = word[static_cast<size_t>(i)];
            if (x > s.lone_head) {
                if (x >= prev_high) return std::nullopt;
                prev_high = x;
                s.high.push_back(x);
            } else {
                if (x >= prev_low) return std::nullopt;
                prev_low = x;
                s.low.push_back(x);
            }
        }
        return s;
    }

    std::vector<int> head(word.begin(), word.begin() + (k - 1));
    // An increasing pair in the head would run straight into n-1 and n.
    if (!strictly_decreasing(head)) return std::nullopt;
    s.head_max = head.front();
    s.head_min = head.back();
    s.head_inner.assign(head.begin() + 1, head.end() - 1);

    std::vector<int> tail(word.begin() + k, word.end() - 1);
    for (int x : tail) {
        if (x < s.head_min) {
            s.low.push_back(x);
        } else if (x > s.head_max) {
            s.high.push_back(x);
        } else {
            s.gap.push_back(x);  // strictly between min and max, not in the head
        }
    }
    if (!s.gap.empty()) {
        if (!strictly_decreasing(tail)) return std::nullopt;
    } else {
        if (!strictly_decreasing(s.low) || !strictly_decreasing(s.high)) return std::nullopt;
    }
    return s;
}

}  // namespace circpat
