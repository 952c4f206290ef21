#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "circpat/core.hpp"
#include "circpat/enumerate.hpp"

using namespace circpat;

TEST_CASE("reduce relabels by rank") {
    CHECK(reduce({3, 8, 5}).letters() == std::vector<int>{1, 3, 2});
    CHECK(reduce({42, 7, 19}).letters() == std::vector<int>{3, 1, 2});
    CHECK(reduce({1, 2, 3, 4}).letters() == std::vector<int>{1, 2, 3, 4});
    CHECK(reduce({9}).letters() == std::vector<int>{1});
    CHECK_THROWS_AS(reduce({2, 2}), std::invalid_argument);
}

TEST_CASE("reduce is idempotent and order preserving, exhaustively") {
    // Every word of length <= 8 with distinct letters drawn from 1..12.
    long long checked = 0;
    long long bad = 0;
    std::vector<int> word;
    std::vector<bool> used(13, false);

    auto order_isomorphic = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            for (size_t j = i + 1; j < a.size(); ++j) {
                if ((a[i] < a[j]) != (b[i] < b[j])) return false;
            }
        }
        return true;
    };

    auto visit = [&](auto&& self) -> void {
        if (!word.empty()) {
            const Pattern r = reduce(word);
            const Pattern rr = reduce(r.letters());
            ++checked;
            if (rr != r || !order_isomorphic(word, r.letters())) ++bad;
        }
        if (word.size() == 8) return;
        for (int v = 1; v <= 12; ++v) {
            if (used[v]) continue;
            used[v] = true;
            word.push_back(v);
            self(self);
            word.pop_back();
            used[v] = false;
        }
    };
    visit(visit);

    long long expected = 0;
    long long falling = 1;
    for (int k = 1; k <= 8; ++k) {
        falling *= 12 - (k - 1);
        expected += falling;
    }
    CHECK(bad == 0);
    CHECK(checked == expected);
}

TEST_CASE("canonicalize rotates the maximum to the end") {
    CHECK(canonicalize({3, 1, 4, 2}).word() == std::vector<int>{2, 3, 1, 4});
    CHECK(canonicalize({4, 2, 3, 1}).word() == std::vector<int>{2, 3, 1, 4});
    CHECK(canonicalize({1, 2, 3, 4}).word() == std::vector<int>{1, 2, 3, 4});
    CHECK(canonicalize({1}).word() == std::vector<int>{1});
    CHECK_THROWS_AS(canonicalize({}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({1, 3}), std::invalid_argument);

    // All rotations of one arrangement collapse to the same class.
    const std::vector<int> base{5, 6, 4, 2, 3, 1, 7};
    const CircularPermutation ref = canonicalize(base);
    for (size_t s = 1; s < base.size(); ++s) {
        std::vector<int> rot(base.begin() + static_cast<long>(s), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(s));
        CHECK(canonicalize(rot) == ref);
    }
}

TEST_CASE("cyclic rotations of a pattern") {
    const auto rots = cyclic_rotations(Pattern::from_string("1324"));
    REQUIRE(rots.size() == 4);
    std::set<std::string> got;
    for (const auto& r : rots) got.insert(r.str());
    CHECK(got == std::set<std::string>{"1324", "3241", "2413", "4132"});

    const auto single = cyclic_rotations(Pattern::from_string("1"));
    CHECK(single.size() == 1);
}

TEST_CASE("reversal") {
    CHECK(reversal(Pattern::from_string("1324")).str() == "4231");
    CHECK(reversal(Pattern::from_string("123")).str() == "321");
    CHECK(reversal(reversal(Pattern::from_string("1342"))) == Pattern::from_string("1342"));
}

TEST_CASE("pattern classes for k = 1 .. 4") {
    SUBCASE("k = 1") {
        const auto cls = pattern_classes(1);
        REQUIRE(cls.size() == 1);
        CHECK(cls[0].representative.str() == "1");
        CHECK(cls[0].reversal_partner_representative.str() == "1");
    }
    SUBCASE("k = 2") {
        const auto cls = pattern_classes(2);
        REQUIRE(cls.size() == 1);
        CHECK(cls[0].representative.str() == "12");
        CHECK(cls[0].rotation_orbit.size() == 2);
    }
    SUBCASE("k = 3") {
        const auto cls = pattern_classes(3);
        REQUIRE(cls.size() == 2);
        CHECK(cls[0].representative.str() == "123");
        CHECK(cls[1].representative.str() == "132");
        std::vector<std::string> orbit0, orbit1;
        for (const auto& p : cls[0].rotation_orbit) orbit0.push_back(p.str());
        for (const auto& p : cls[1].rotation_orbit) orbit1.push_back(p.str());
        CHECK(orbit0 == std::vector<std::string>{"123", "231", "312"});
        CHECK(orbit1 == std::vector<std::string>{"132", "213", "321"});
        CHECK(cls[0].reversal_partner_representative.str() == "132");
        CHECK(cls[1].reversal_partner_representative.str() == "123");
    }
    SUBCASE("k = 4") {
        const auto cls = pattern_classes(4);
        REQUIRE(cls.size() == 6);
        const std::vector<std::string> reps{"1234", "1243", "1324", "1342", "1423", "1432"};
        const std::vector<std::vector<std::string>> orbits{
            {"1234", "2341", "3412", "4123"}, {"1243", "2431", "3124", "4312"},
            {"1324", "2413", "3241", "4132"}, {"1342", "2134", "3421", "4213"},
            {"1423", "2314", "3142", "4231"}, {"1432", "2143", "3214", "4321"},
        };
        const std::vector<std::string> partners{"1432", "1342", "1423", "1243", "1324", "1234"};
        for (size_t i = 0; i < 6; ++i) {
            CHECK(cls[i].representative.str() == reps[i]);
            std::vector<std::string> orbit;
            for (const auto& p : cls[i].rotation_orbit) orbit.push_back(p.str());
            CHECK(orbit == orbits[i]);
            CHECK(cls[i].reversal_partner_representative.str() == partners[i]);
        }
    }
}

TEST_CASE("linear containment") {
    const Pattern p123 = Pattern::from_string("123");
    const Pattern p321 = Pattern::from_string("321");
    CHECK(contains_linear(std::vector<int>{2, 4, 1, 5, 3}, p123));
    CHECK(!contains_linear(std::vector<int>{3, 2, 1}, p123));
    CHECK(contains_linear(std::vector<int>{3, 2, 1}, p321));
    CHECK(!contains_linear(std::vector<int>{1, 2}, p123));
    CHECK(contains_linear(std::vector<int>{3, 1, 8, 5}, Pattern::from_string("2143")));
    CHECK(!contains_linear(std::vector<int>{}, Pattern::from_string("1")));
}

TEST_CASE("circular containment wraps") {
    // (2,1,3,4) is 1342-free as a linear word, but the window starting at
    // the 1 reads 1 3 4 2.
    const CircularPermutation c = canonicalize({2, 1, 3, 4});
    const Pattern p1342 = Pattern::from_string("1342");
    CHECK(!contains_linear(c.word(), p1342));
    CHECK(contains_circular(c, p1342));

    // The identity avoids 132 but contains 123.
    const CircularPermutation id = canonicalize({1, 2, 3, 4, 5});
    CHECK(contains_circular(id, Pattern::from_string("123")));
    CHECK(!contains_circular(id, Pattern::from_string("132")));

    // An occurrence spans at most one revolution: no window of (1,3,2,4)
    // reads as 1342.
    CHECK(!contains_circular(canonicalize({1, 3, 2, 4}), p1342));
    CHECK(contains_circular(canonicalize({1, 3, 4, 2}), p1342));
}

TEST_CASE("both containment routes agree everywhere") {
    std::vector<Pattern> patterns;
    for (int k = 1; k <= 4; ++k) {
        for (const auto& cls : pattern_classes(k)) {
            for (const auto& p : cls.rotation_orbit) patterns.push_back(p);
        }
    }
    long long disagreements = 0;
    long long rotation_variance = 0;
    for (int n = 1; n <= 7; ++n) {
        for_each_canonical_word(n, [&](std::span<const int> word) {
            const CircularPermutation c{std::vector<int>(word.begin(), word.end())};
            for (const Pattern& p : patterns) {
                const bool a = contains_circular(c, p);
                if (a != contains_circular_via_rotations(c, p)) ++disagreements;
                // Containment is a property of the rotation class: every
                // rotation of the raw word must answer the same.
                for (int s = 0; s < n; ++s) {
                    std::vector<int> rot(word.begin() + s, word.end());
                    rot.insert(rot.end(), word.begin(), word.begin() + s);
                    if (contains_circular(canonicalize(rot), p) != a) ++rotation_variance;
                }
            }
        });
    }
    CHECK(disagreements == 0);
    CHECK(rotation_variance == 0);
}

TEST_CASE("avoidance is constant on a pattern's rotation orbit") {
    const CircularPermutation c = canonicalize({5, 6, 4, 2, 3, 1, 7});
    for (const auto& cls : pattern_classes(4)) {
        const bool ref = contains_circular(c, cls.rotation_orbit.front());
        for (const auto& p : cls.rotation_orbit) {
            CHECK(contains_circular(c, p) == ref);
        }
    }
}

TEST_CASE("occurrence witnesses") {
    const CircularPermutation c = canonicalize({5, 6, 4, 2, 3, 1, 7});
    const Pattern p = Pattern::from_string("1234");

    const auto hits = find_occurrences_circular(c, p);
    REQUIRE(hits.size() == 1);
    // Letters 2 3 5 6: 2,3 then wrapping to 5,6 at the word's start.
    std::vector<int> values;
    for (int pos : hits[0].positions) values.push_back(c.word()[static_cast<size_t>(pos - 1)]);
    CHECK(reduce(values) == p);
    CHECK(values == std::vector<int>{2, 3, 5, 6});
    CHECK(count_occurrences_circular(c, p) == 1);

    CHECK(count_occurrences_circular(canonicalize({1, 2, 3, 4}), Pattern::from_string("4321")) ==
          0);
    // Every 3-subset of the identity on 1..4 reads as 123 from its smallest.
    CHECK(count_occurrences_circular(canonicalize({1, 2, 3, 4}), Pattern::from_string("123")) ==
          4);
}

TEST_CASE("occurrence count matches containment") {
    for (int n = 1; n <= 6; ++n) {
        for_each_canonical_word(n, [&](std::span<const int> word) {
            const CircularPermutation c{std::vector<int>(word.begin(), word.end())};
            for (const auto& cls : pattern_classes(4)) {
                const Pattern& p = cls.representative;
                const bool contained = contains_circular(c, p);
                CHECK(contained == (count_occurrences_circular(c, p) > 0));
                const auto hits = find_occurrences_circular(c, p);
                CHECK(contained == !hits.empty());
                // Witness positions are distinct position sets.
                std::set<std::set<int>> sets;
                for (const auto& h : hits) {
                    sets.insert(std::set<int>(h.positions.begin(), h.positions.end()));
                    CHECK(h.start == h.positions.front());
                }
                CHECK(sets.size() == hits.size());
            }
        });
    }
}

TEST_CASE("pattern parsing and printing") {
    CHECK(Pattern::from_string("1324").letters() == std::vector<int>{1, 3, 2, 4});
    CHECK(Pattern::from_string("4,11,2,1,3,5,6,7,8,9,10").length() == 11);
    CHECK(Pattern::from_string("1324").str() == "1324");
    const Pattern wide = Pattern::from_string("10,9,8,7,6,5,4,3,2,1");
    CHECK(wide.str() == "10,9,8,7,6,5,4,3,2,1");
    CHECK_THROWS_AS(Pattern::from_string("1325"), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::from_string("0123"), std::invalid_argument);
}

TEST_CASE("word parsing round trips") {
    CHECK(parse_word("5 6 4 2 3 1 7") == LinearWord{5, 6, 4, 2, 3, 1, 7});
    CHECK(parse_word("5,6,4,2,3,1,7") == LinearWord{5, 6, 4, 2, 3, 1, 7});
    CHECK(parse_word("  3   1  2 ") == LinearWord{3, 1, 2});
    CHECK(word_str(std::vector<int>{1, 8, 7, 6, 2, 5, 3, 4}) == "1 8 7 6 2 5 3 4");
    CHECK_THROWS_AS(parse_word("1 x 2"), std::invalid_argument);
}
