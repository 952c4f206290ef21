#include "circpat/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "circpat/bijections.hpp"
#include "circpat/enumerate.hpp"
#include "circpat/formulas.hpp"

namespace circpat {

namespace {

const Pattern& pat(const char* s) {
    static std::map<std::string, Pattern> cache;
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, Pattern::from_string(s)).first;
    return it->second;
}

std::vector<int> identity_word(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return w;
}

std::vector<int> reverse_identity_word(int n) {
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (int i = n - 1; i >= 1; --i) w.push_back(i);
    w.push_back(n);
    return w;
}

}  // namespace

SuiteResult verify_formulas_vs_oracle(int n_max) {
    std::ostringstream why;
    for (int n = 1; n <= n_max; ++n) {
        struct Row {
            const char* name;
            BigInt closed, rec;
        };
        const Row rows[] = {
            {"1324", count_1324_closed(n), count_1324_recurrence(n)},
            {"1342", count_1342_closed(n), count_1342_recurrence(n)},
            {"1234", count_1234_closed(n), count_1234_recurrence(n)},
        };
        for (const Row& r : rows) {
            const BigInt brute = count_avoiders(n, {pat(r.name)}).count;
            if (r.closed != brute || r.rec != brute) {
                why << "pattern " << r.name << " at n=" << n << ": closed " << r.closed
                    << ", recurrence " << r.rec << ", oracle " << brute;
                return {"formulas-vs-oracle", false, why.str()};
            }
        }
        for (const char* three : {"123", "132"}) {
            const BigInt brute = count_avoiders(n, {pat(three)}).count;
            if (brute != 1) {
                why << "pattern " << three << " at n=" << n << ": oracle " << brute
                    << ", expected 1";
                return {"formulas-vs-oracle", false, why.str()};
            }
        }
        if (n >= 3) {
            const auto only132 = list_avoiders(n, {pat("132")});
            const auto only123 = list_avoiders(n, {pat("123")});
            if (only132.size() != 1 || only132[0].word() != identity_word(n) ||
                only123.size() != 1 || only123[0].word() != reverse_identity_word(n)) {
                why << "3-letter avoider sets wrong at n=" << n;
                return {"formulas-vs-oracle", false, why.str()};
            }
        }
    }
    // Dispatch: the closed form for any 4-letter pattern matches the oracle,
    // which also pins rotation- and reversal-invariance of the counts.
    const int invar_max = std::min(n_max, 8);
    for (int n = 1; n <= invar_max; ++n) {
        for (const PatternClass& cls : pattern_classes(4)) {
            for (const Pattern& p : cls.rotation_orbit) {
                const BigInt predicted = count_for_pattern(n, p).count;
                const BigInt brute = count_avoiders(n, {p}).count;
                if (predicted != brute) {
                    why << "dispatch mismatch for " << p.str() << " at n=" << n << ": formula "
                        << predicted << ", oracle " << brute;
                    return {"formulas-vs-oracle", false, why.str()};
                }
            }
        }
    }
    why << "closed forms, recurrences and oracle agree for n <= " << n_max
        << "; all 24 four-letter patterns dispatched correctly for n <= " << invar_max;
    return {"formulas-vs-oracle", true, why.str()};
}

SuiteResult verify_stratified(int n_max) {
    std::ostringstream why;
    for (int n = 4; n <= n_max; ++n) {
        struct Fam {
            const char* name;
            BigInt (*strat)(int, int);
            BigInt (*closed)(int);
        };
        const Fam fams[] = {
            {"1324", stratified_1324, count_1324_closed},
            {"1342", stratified_1342, count_1342_closed},
            {"1234", stratified_1234, count_1234_closed},
        };
        for (const Fam& f : fams) {
            BigInt sum = 0;
            for (int k = 1; k <= n - 1; ++k) {
                const BigInt predicted = f.strat(n, k);
                const BigInt brute = count_avoiders_at_position(n, {pat(f.name)}, k).count;
                if (predicted != brute) {
                    why << "pattern " << f.name << " at n=" << n << ", k=" << k << ": formula "
                        << predicted << ", oracle " << brute;
                    return {"stratified", false, why.str()};
                }
                sum += predicted;
            }
            if (sum != f.closed(n)) {
                why << "pattern " << f.name << " strata at n=" << n << " sum to " << sum
                    << ", closed form " << f.closed(n);
                return {"stratified", false, why.str()};
            }
        }
    }
    why << "position-stratified counts match the oracle and sum to the closed forms for 4 <= n <= "
        << n_max;
    return {"stratified", true, why.str()};
}

SuiteResult verify_bijection_images(int n_max) {
    std::ostringstream why;

    const int minmax_max = std::min(n_max, 9);
    for (int n = 1; n <= minmax_max; ++n) {
        std::set<LinearWord> image;
        for (const Bits& code : [&] {
            std::vector<Bits> all;
            for (uint32_t v = 0; v < (1u << (n - 1)); ++v) {
                Bits b(static_cast<size_t>(n) - 1);
                for (int i = 0; i < n - 1; ++i)
                    b[static_cast<size_t>(i)] = static_cast<uint8_t>((v >> (n - 2 - i)) & 1u);
                all.push_back(std::move(b));
            }
            return all;
        }()) {
            const LinearWord w = minmax_bits_to_perm(code);
            if (minmax_perm_to_bits(w) != code) {
                why << "minmax round trip failed for bits " << bits_str(code);
                return {"bijection-image", false, why.str()};
            }
            image.insert(w);
        }
        std::set<LinearWord> avoiders;
        for_each_linear_perm(n, [&](std::span<const int> w) {
            if (!contains_linear(w, pat("213")) && !contains_linear(w, pat("231"))) {
                avoiders.emplace(w.begin(), w.end());
            }
        });
        if (image != avoiders) {
            why << "minmax image differs from the {213,231}-avoider set at n=" << n;
            return {"bijection-image", false, why.str()};
        }
    }

    const int small_max = std::min(n_max, 8);
    for (int n = 2; n <= small_max; ++n) {
        std::set<CircularPermutation> image;
        for (const Bits& code : code_words_1342(n - 1)) {
            const CircularPermutation c = code_to_avoider_1342(code);
            if (avoider_1342_to_code(c) != code) {
                why << "1342 code round trip failed for " << bits_str(code);
                return {"bijection-image", false, why.str()};
            }
            image.insert(c);
        }
        const auto avoiders = list_avoiders(n, {pat("1342")});
        if (image != std::set<CircularPermutation>(avoiders.begin(), avoiders.end())) {
            why << "1342 code image differs from the avoider set at n=" << n;
            return {"bijection-image", false, why.str()};
        }
    }

    for (int n = 2; n <= small_max; ++n) {
        std::set<CircularPermutation> image;
        for (const Bits& w : fib_words(2 * n - 3)) {
            const CircularPermutation c = fib_word_to_avoider_1324(n, w);
            if (avoider_1324_to_fib_word(c) != w) {
                why << "Fibonacci-word round trip failed for " << bits_str(w);
                return {"bijection-image", false, why.str()};
            }
            image.insert(c);
        }
        const auto avoiders = list_avoiders(n, {pat("1324")});
        if (image != std::set<CircularPermutation>(avoiders.begin(), avoiders.end())) {
            why << "Fibonacci-word image differs from the 1324-avoider set at n=" << n;
            return {"bijection-image", false, why.str()};
        }
    }

    // Peeling branch counts over the Fibonacci words reproduce the recurrence
    // terms: u_{n-1} words start 01, and u_{n-1-k} words start 00 + k "10"s.
    const int branch_max = std::min(n_max, 10);
    for (int n = 3; n <= branch_max; ++n) {
        BigInt start01 = 0;
        std::map<int, BigInt> by_pairs;
        for (const Bits& w : fib_words(2 * n - 3)) {
            const FibWordStep step = fib_word_step(w);
            if (step.branch == FibBranch::pair01) {
                ++start01;
            } else {
                ++by_pairs[step.ten_pairs];
            }
        }
        if (start01 != count_1324_closed(n - 1)) {
            why << "01-branch count at n=" << n << " is " << start01 << ", expected u_" << n - 1;
            return {"bijection-image", false, why.str()};
        }
        for (int k = 0; k <= n - 3; ++k) {
            if (by_pairs[k] != count_1324_closed(n - 1 - k)) {
                why << "00-branch count with " << k << " pairs at n=" << n << " is " << by_pairs[k]
                    << ", expected u_" << n - 1 - k;
                return {"bijection-image", false, why.str()};
            }
        }
    }

    why << "images equal avoider sets with exact round trips (minmax n <= " << minmax_max
        << ", 1342 and 1324 encodings n <= " << small_max << ")";
    return {"bijection-image", true, why.str()};
}

SuiteResult verify_structure_equivalence(int n_max) {
    std::ostringstream why;
    const int top = std::min(n_max, 8);
    for (int n = 4; n <= top; ++n) {
        bool bad = false;
        std::string detail;
        for_each_canonical_word(n, [&](std::span<const int> word) {
            if (bad) return;
            if (word[0] == n - 1) return;  // validators take k >= 2
            CircularPermutation c{std::vector<int>(word.begin(), word.end())};
            const bool ok1342 = validate_structure_1342(c).has_value();
            const bool avoid1342 = !contains_circular(c, pat("1342"));
            if (ok1342 != avoid1342) {
                bad = true;
                detail = "1342 validator disagrees with the oracle on " + c.str();
                return;
            }
            const bool ok1234 = validate_structure_1234(c).has_value();
            const bool avoid1234 = !contains_circular(c, pat("1234"));
            if (ok1234 != avoid1234) {
                bad = true;
                detail = "1234 validator disagrees with the oracle on " + c.str();
            }
        });
        if (bad) return {"structure-equivalence", false, detail};
    }
    why << "validators accept exactly the avoiders (exhaustive, 4 <= n <= " << top << ")";
    return {"structure-equivalence", true, why.str()};
}

std::vector<SuiteResult> verify_all(int n_max) {
    return {
        verify_formulas_vs_oracle(n_max),
        verify_stratified(n_max),
        verify_bijection_images(n_max),
        verify_structure_equivalence(n_max),
    };
}

bool all_pass(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.pass; });
}

}  // namespace circpat
