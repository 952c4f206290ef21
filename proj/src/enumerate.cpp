#include "circpat/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace circpat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Word layout: [prefix | free letters ascending | n].  Lexicographic stepping
// permutes only the free segment, so a pinned prefix yields exactly the
// contiguous block of the full stream that starts with it.
std::vector<int> initial_word(int n, std::span<const int> prefix) {
    require(n >= 1, "n must be positive");
    require(static_cast<int>(prefix.size()) <= n - 1 || (n == 1 && prefix.empty()),
            "prefix longer than n-1");
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (int x : prefix) {
        require(x >= 1 && x <= n - 1, "prefix letters must lie in 1..n-1");
        require(!used[static_cast<size_t>(x)], "duplicate prefix letter");
        used[static_cast<size_t>(x)] = 1;
    }
    std::vector<int> word(prefix.begin(), prefix.end());
    for (int x = 1; x <= n - 1; ++x) {
        if (!used[static_cast<size_t>(x)]) word.push_back(x);
    }
    word.push_back(n);
    return word;
}

bool avoids_all(std::span<const int> word, const std::vector<Pattern>& ps) {
    for (const Pattern& p : ps) {
        if (contains_circular_word(word, p)) return false;
    }
    return true;
}

void check_patterns(const std::vector<Pattern>& ps) {
    require(!ps.empty(), "at least one pattern required");
}

uint64_t count_avoiders_with_prefix(int n, std::span<const int> prefix,
                                    const std::vector<Pattern>& ps) {
    uint64_t count = 0;
    for_each_canonical_word_with_prefix(n, prefix, [&](std::span<const int> word) {
        if (avoids_all(word, ps)) ++count;
    });
    return count;
}

}  // namespace

CanonicalWordStream::CanonicalWordStream(int n) : CanonicalWordStream(n, {}) {}

CanonicalWordStream::CanonicalWordStream(int n, std::vector<int> prefix)
    : word_(initial_word(n, prefix)), fixed_(prefix.size()), done_(false) {}

std::optional<CircularPermutation> CanonicalWordStream::next() {
    if (done_) return std::nullopt;
    CircularPermutation out{std::vector<int>(word_)};
    done_ = !std::next_permutation(word_.begin() + static_cast<long>(fixed_), word_.end() - 1);
    return out;
}

void for_each_canonical_word(int n, const std::function<void(std::span<const int>)>& visit) {
    for_each_canonical_word_with_prefix(n, {}, visit);
}

void for_each_canonical_word_with_prefix(int n, std::span<const int> prefix,
                                         const std::function<void(std::span<const int>)>& visit) {
    std::vector<int> word = initial_word(n, prefix);
    do {
        visit(word);
    } while (std::next_permutation(word.begin() + static_cast<long>(prefix.size()),
                                   word.end() - 1));
}

void for_each_linear_perm(int n, const std::function<void(std::span<const int>)>& visit) {
    require(n >= 1, "n must be positive");
    std::vector<int> word(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = i + 1;
    do {
        visit(word);
    } while (std::next_permutation(word.begin(), word.end()));
}

AvoiderCount count_avoiders(int n, const std::vector<Pattern>& ps, int workers) {
    require(n >= 1, "n must be positive");
    require(workers >= 1, "workers must be positive");
    check_patterns(ps);

    uint64_t total = 0;
    if (workers == 1 || n <= 3) {
        total = count_avoiders_with_prefix(n, {}, ps);
    } else {
        // Split by first letter; per-slice counts are exact, so any merge
        // order reproduces the sequential total.
        const int slices = n - 1;
        const int nthreads = std::min(workers, slices);
        std::vector<uint64_t> partial(static_cast<size_t>(slices), 0);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                for (int first = t + 1; first <= slices; first += nthreads) {
                    const int prefix[1] = {first};
                    partial[static_cast<size_t>(first - 1)] =
                        count_avoiders_with_prefix(n, prefix, ps);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (uint64_t c : partial) total += c;
    }
    return AvoiderCount{n, ps, BigInt(total), CountMethod::brute};
}

std::vector<CircularPermutation> list_avoiders(int n, const std::vector<Pattern>& ps) {
    require(n >= 1, "n must be positive");
    check_patterns(ps);
    std::vector<CircularPermutation> out;
    for_each_canonical_word(n, [&](std::span<const int> word) {
        if (avoids_all(word, ps)) {
            out.emplace_back(std::vector<int>(word.begin(), word.end()));
        }
    });
    return out;
}

PositionStratum count_avoiders_at_position(int n, const std::vector<Pattern>& ps, int k) {
    require(n >= 3, "stratified counts need n >= 3");
    require(k >= 1 && k <= n - 1, "position k must lie in 1..n-1");
    check_patterns(ps);
    uint64_t count = 0;
    for_each_canonical_word(n, [&](std::span<const int> word) {
        if (word[static_cast<size_t>(k - 1)] == n - 1 && avoids_all(word, ps)) ++count;
    });
    return PositionStratum{k, BigInt(count)};
}

AvoiderCount count_linear_avoiders(int n, const std::vector<Pattern>& ps) {
    require(n >= 1, "n must be positive");
    check_patterns(ps);
    uint64_t count = 0;
    for_each_linear_perm(n, [&](std::span<const int> word) {
        for (const Pattern& p : ps) {
            if (contains_linear(word, p)) return;
        }
        ++count;
    });
    return AvoiderCount{n, ps, BigInt(count), CountMethod::brute};
}

}  // namespace circpat
