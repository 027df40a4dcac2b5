#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "strmeas/exact.hpp"
#include "strmeas/generators.hpp"

using namespace strmeas;
using namespace strmeas::testing;

TEST_CASE("exact_ed examples") {
    CHECK(exact_ed(bytes("abc"), bytes("abc")) == 0);
    CHECK(exact_ed(bytes("abc"), bytes("")) == 3);
    CHECK(exact_ed(bytes(""), bytes("abc")) == 3);
    CHECK(exact_ed(bytes("kitten"), bytes("sitting")) == 3);
}

TEST_CASE("exact_ed matches the full table and obeys the metric axioms") {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto a = random_string(s, static_cast<std::int64_t>(s % 65), 3);
        const auto b = random_string(s + 1000, static_cast<std::int64_t>((s * 7) % 65), 3);
        const auto c = random_string(s + 2000, static_cast<std::int64_t>((s * 13) % 65), 3);
        const auto ab = exact_ed(a, b);
        CHECK(ab == table_ed(a, b));
        CHECK(exact_ed(a, a) == 0);
        CHECK(ab == exact_ed(b, a));
        CHECK((ab == 0) == (a == b));
        CHECK(exact_ed(a, c) <= ab + exact_ed(b, c));
    }
}

TEST_CASE("patience_sorting examples") {
    CHECK(patience_sorting(ints({1, 2, 3, 4})).length == 4);
    CHECK(patience_sorting(ints({4, 3, 2, 1})).length == 1);
    CHECK(patience_sorting(ints({2, 8, 4, 9, 5, 6})).length == 4);
}

TEST_CASE("bounded patience ignores extensions past the bound") {
    const auto x = ints({1, 2, 3, 4, 5, 6, 7, 8});
    const auto r = patience_sorting(x, 3);
    CHECK(r.length == 3);
    CHECK(r.P[3] == x.at(3));
    CHECK(patience_sorting(ints({2, 8, 4, 9, 5, 6}), 10).length == 4);
}

TEST_CASE("patience list is sorted after every prefix") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto x = random_string(s, 60, 8);
        for (std::size_t k = 0; k <= x.size(); ++k) {
            const auto pre = prefix(x, k);
            const auto r = patience_sorting(pre);
            for (std::int64_t i = 2; i <= r.length; ++i) CHECK(r.P[static_cast<std::size_t>(i - 1)] < r.P[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("patience matches the quadratic DP exhaustively (alphabet 3, length <= 9)") {
    SmallStringEnumerator en(3, 9);
    TokenString x;
    std::int64_t count = 0;
    while (en.next(x)) {
        REQUIRE(patience_sorting(x).length == quadratic_lis(x));
        ++count;
    }
    CHECK(count == 29524);
}

TEST_CASE("patience matches the quadratic DP on random inputs (n <= 200)") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto x = random_string(s * 31, static_cast<std::int64_t>(s % 201), 1 + static_cast<std::int64_t>(s % 50));
        CHECK(patience_sorting(x).length == quadratic_lis(x));
    }
}

TEST_CASE("exact_lis_sequence examples and validity") {
    CHECK(exact_lis_sequence(ints({5})) == ints({5}));
    CHECK(exact_lis_sequence(ints({3, 1, 2})) == ints({1, 2}));
    CHECK(exact_lis_sequence(ints({})).size() == 0);
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto x = random_string(s, 80, 20);
        const auto w = exact_lis_sequence(x);
        CHECK(static_cast<std::int64_t>(w.size()) == quadratic_lis(x));
        CHECK(strictly_increasing(w));
        CHECK(is_subsequence(w, x));
    }
}

TEST_CASE("exact_lnds_sequence is the longest non-decreasing subsequence") {
    CHECK(exact_lnds_sequence(ints({2, 2, 2})).size() == 3);
    CHECK(exact_lnds_sequence(ints({3, 2, 1})).size() == 1);
    SmallStringEnumerator en(3, 7);
    TokenString x;
    while (en.next(x)) {
        const auto w = exact_lnds_sequence(x);
        REQUIRE(static_cast<std::int64_t>(w.size()) == brute_lnds(x));
        CHECK(is_subsequence(w, x));
    }
}

TEST_CASE("exact_lcs_len examples") {
    CHECK(exact_lcs_len(bytes("ab"), bytes("ba")) == 1);
    CHECK(exact_lcs_len(bytes("abcabc"), bytes("abcabc")) == 6);
    CHECK(exact_lcs_len(bytes("abc"), bytes("xyz")) == 0);
}

TEST_CASE("hirschberg examples") {
    CHECK(hirschberg_lcs(bytes("ab"), bytes("ba")).size() == 1);
    CHECK(hirschberg_lcs(bytes("banana"), bytes("banana")) == bytes("banana"));
    CHECK(hirschberg_lcs(bytes(""), bytes("abc")).size() == 0);
}

TEST_CASE("hirschberg is valid and optimal on random pairs (n <= 128)") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto x = random_string(s, static_cast<std::int64_t>(s % 129), 4);
        const auto y = random_string(s + 500, static_cast<std::int64_t>((s * 11) % 129), 4);
        const auto c = hirschberg_lcs(x, y);
        CHECK(static_cast<std::int64_t>(c.size()) == table_lcs(x, y));
        CHECK(exact_lcs_len(x, y) == table_lcs(x, y));
        CHECK(is_subsequence(c, x));
        CHECK(is_subsequence(c, y));
    }
}

TEST_CASE("closest_substring_exact examples") {
    const auto r1 = closest_substring_exact(bytes("ab"), bytes("zabz"), 4);
    CHECK(r1.iv == Interval{2, 3});
    CHECK(r1.d == 0);
    const auto r2 = closest_substring_exact(bytes("a"), bytes("a"), 2);
    CHECK(r2.iv == Interval{1, 1});
    CHECK(r2.d == 0);
    CHECK(closest_substring_exact(bytes("aa"), bytes("bb"), 4).d == 2);
}

TEST_CASE("closest_substring_exact equals brute-force enumeration, ties to the smallest (l, r)") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const auto x = random_string(s, 1 + static_cast<std::int64_t>(s % 8), 3);
        const auto y = random_string(s + 77, 1 + static_cast<std::int64_t>((s * 5) % 14), 3);
        const auto maxlen = static_cast<std::int64_t>(2 * x.size());
        const auto got = closest_substring_exact(x, y, maxlen);
        // The empty substring, written [1, 0], is a candidate with distance |x|.
        std::int64_t best = static_cast<std::int64_t>(x.size());
        Interval arg{1, 0};
        const auto m = static_cast<std::int64_t>(y.size());
        for (std::int64_t l = 1; l <= m; ++l) {
            for (std::int64_t r = l; r <= m && r - l + 1 <= maxlen; ++r) {
                const auto d = table_ed(x, materialize(token_substring(y, Interval{l, r})));
                if (d < best) {
                    best = d;
                    arg = Interval{l, r};
                }
            }
        }
        CHECK(got.d == best);
        CHECK(got.iv == arg);
    }
}
