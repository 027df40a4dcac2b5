#include <doctest.h>

#include "oracles.hpp"
#include "strmeas/exact.hpp"
#include "strmeas/lcs_approx.hpp"
#include "strmeas/lis_approx.hpp"

using namespace strmeas;
using namespace strmeas::testing;

namespace {

bool lower_ok(std::int64_t v, std::int64_t L, Eps eps, std::int64_t c) {
    return (Eps::kDen - c * eps.num()) * L <= v * Eps::kDen;
}

// The reduction of x[xb..xe] against y, keeping only y-positions in (p, ye].
TokenString restricted_reduction(const TokenString& x, const TokenString& y, std::size_t xb, std::size_t xe,
                                 std::int64_t p, std::int64_t ye) {
    std::vector<std::int64_t> z;
    for (std::size_t i = xb; i <= xe; ++i) {
        for (std::int64_t j = ye; j > p; --j) {
            if (x.at(i) == y.at(static_cast<std::size_t>(j))) z.push_back(j);
        }
    }
    return TokenString::from_ints(z);
}

}  // namespace

TEST_CASE("lcs_to_lis_view examples") {
    CHECK(materialize(lcs_to_lis_view(bytes("ab"), bytes("ba"))) == ints({2, 1}));
    CHECK(patience_sorting(lcs_to_lis_view(bytes("ab"), bytes("ba"))).length == 1);
    CHECK(materialize(lcs_to_lis_view(bytes("aa"), bytes("aa"))) == ints({2, 1, 2, 1}));
    CHECK(patience_sorting(lcs_to_lis_view(bytes("aa"), bytes("aa"))).length == 2);
    CHECK(lcs_to_lis_view(bytes(""), bytes("abc")).size() == 0);
}

TEST_CASE("the reduced view is virtual and supports random access") {
    const auto x = random_string(1, 300, 4);
    const auto y = random_string(2, 300, 4);
    SpaceMeter m;
    const auto z = lcs_to_lis_view(x, y);
    CHECK(m.peak() == 0);
    CHECK(sizeof(z) <= 8 * sizeof(void*));
    const auto full = restricted_reduction(x, y, 1, x.size(), 0, static_cast<std::int64_t>(y.size()));
    REQUIRE(z.size() == full.size());
    // Backward and scattered reads agree with the materialized sequence.
    for (std::size_t k = z.size(); k >= 1; k -= 97) {
        CHECK(z.at(k) == full.at(k));
        if (k <= 97) break;
    }
    CHECK(z.at(1) == full.at(1));
}

TEST_CASE("reduction exactness, exhaustive over {a,b}, lengths <= 6") {
    const auto all = enumerate_small(2, 6);
    for (const auto& x : all) {
        for (const auto& y : all) REQUIRE(patience_sorting(lcs_to_lis_view(x, y)).length == table_lcs(x, y));
    }
}

TEST_CASE("masked view equals the reduction restricted to index tokens above p") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const auto x = random_string(s, 1 + static_cast<std::int64_t>(s % 12), 3);
        const auto y = random_string(s + 9, 1 + static_cast<std::int64_t>((s * 3) % 12), 3);
        for (std::int64_t p = 0; p <= static_cast<std::int64_t>(y.size()); ++p) {
            const MaskedY<TokenString> masked(y, static_cast<std::size_t>(p));
            const auto lhs = patience_sorting(lcs_to_lis_view(x, masked)).length;
            const auto rhs = patience_sorting(restricted_reduction(x, y, 1, x.size(), p, static_cast<std::int64_t>(y.size()))).length;
            CHECK(lhs == rhs);
            CHECK(lhs == table_lcs(x, materialize(token_substring(y, Interval{p + 1, static_cast<std::int64_t>(y.size())}))));
        }
    }
    const auto y = bytes("abc");
    const MaskedY<TokenString> m(y, 2);
    CHECK(m.at(1) == Token::wildcard());
    CHECK(m.at(3).code() == 'c');
}

TEST_CASE("fast LCS base case equals patience sorting on the materialized restricted reduction") {
    for (std::uint64_t s = 0; s < 80; ++s) {
        const auto x = random_string(s, 1 + static_cast<std::int64_t>(s % 30), 2 + static_cast<std::int64_t>(s % 3));
        const auto y = random_string(s + 3, 1 + static_cast<std::int64_t>((s * 7) % 30), 2 + static_cast<std::int64_t>(s % 3));
        SpaceMeter m;
        LcsProblem<TokenString, TokenString> prob(x, y, 2, m);
        const auto n = x.size();
        const auto ym = static_cast<std::int64_t>(y.size());
        for (std::size_t xb = 1; xb <= n; xb += 1 + n / 4) {
            for (std::size_t xe = xb; xe <= n; xe += 1 + n / 5) {
                for (std::int64_t p = 0; p <= ym; p += 1 + ym / 4) {
                    for (const std::optional<std::int64_t> cap : {std::optional<std::int64_t>{}, std::optional<std::int64_t>{2}}) {
                        Frontier<std::int64_t> f(m);
                        prob.base_frontier({xb, xe, p, ym}, cap, f);
                        const auto z = restricted_reduction(x, y, xb, xe, p, ym);
                        const auto ref = patience_sorting(z, cap);
                        REQUIRE(static_cast<std::int64_t>(f.size()) == ref.length + 1);
                        CHECK(f[0].s == 0);
                        for (std::int64_t l = 1; l <= ref.length; ++l) {
                            CHECK(f[static_cast<std::size_t>(l)].s == l);
                            CHECK(f[static_cast<std::size_t>(l)].q == ref.P[static_cast<std::size_t>(l)].code());
                        }
                    }
                }
            }
        }
        CHECK(m.live() == 0);
    }
}

TEST_CASE("approx_lcs examples") {
    SpaceMeter m;
    const auto x = random_string(4, 100, 4);
    const auto v = approx_lcs(x, x, ApproxParams(4, 0.1), m);
    CHECK(v <= 100);
    CHECK(lower_ok(v, 100, Eps::parse("0.1"), 3 * ceil_log(4, 100)));
    ApproxParams base(2, 0.1);
    CHECK(approx_lcs(bytes("abc"), bytes("xyz"), base, m) == 0);
    CHECK(m.live() == 0);
}

TEST_CASE("approx_lcs sandwich on seeded pairs") {
    const ApproxParams p(8, Eps::parse("0.05"));
    for (std::uint64_t s = 0; s < 8; ++s) {
        const auto x = random_string(s, 256, 4);
        const auto y = s % 2 ? substituted(x, 64, 4, s + 1) : random_string(s + 100, 256, 4);
        SpaceMeter m;
        const auto v = approx_lcs(x, y, p, m);
        const auto L = table_lcs(x, y);
        CHECK(v <= L);
        CHECK(lower_ok(v, L, p.eps, 3 * ceil_log(8, 256)));
        CHECK(m.live() == 0);
    }
}

TEST_CASE("memoisation does not change LCS results") {
    EngineOptions off;
    off.memo = false;
    const ApproxParams p(4, Eps::parse("0.1"));
    for (std::uint64_t s = 0; s < 6; ++s) {
        const auto x = random_string(s, 100, 3);
        const auto y = random_string(s + 7, 110, 3);
        SpaceMeter a, b;
        CHECK(approx_lcs(x, y, p, a) == approx_lcs(x, y, p, b, off));
        std::int64_t va = 0, vb = 0;
        CHECK(lcs_sequence(x, y, p, a, &va) == lcs_sequence(x, y, p, b, &vb, off));
        CHECK(va == vb);
    }
}

TEST_CASE("approx_lcs_bound examples") {
    SpaceMeter m;
    {
        const auto x = bytes("abcdefghijklmnop");
        const auto f = approx_lcs_bound(x, x, ApproxParams(2, 0.1), 2, m);
        const auto j = f.successor(2);
        REQUIRE(j < f.size());
        CHECK(f[j].s == 2);
        CHECK(f[j].q == 2);
        CHECK(frontier_max(f, LcsProblem<TokenString, TokenString>::pos_inf()) == 2);
    }
    {
        const auto f = approx_lcs_bound(bytes("xxaxx"), bytes("yyyayy"), ApproxParams(2, 0.1), 1, m);
        CHECK(frontier_max(f, LcsProblem<TokenString, TokenString>::pos_inf()) == 1);
    }
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto x = random_string(s, 120, 4);
        const auto y = random_string(s + 1, 120, 4);
        const ApproxParams p(4, Eps::parse("0.1"));
        const auto L = table_lcs(x, y);
        const auto f = approx_lcs_bound(x, y, p, L + static_cast<std::int64_t>(s), m);
        const auto v = frontier_max(f, LcsProblem<TokenString, TokenString>::pos_inf());
        CHECK(v <= L);
        CHECK(lower_ok(v, L, p.eps, 3 * ceil_log(4, 120)));
    }
    CHECK(m.live() == 0);
}

TEST_CASE("lcs_sequence examples") {
    SpaceMeter m;
    const auto x = random_string(8, 144, 4);
    const auto w = lcs_sequence(x, x, ApproxParams(4, 0.1), m);
    CHECK(is_subsequence(w, x));
    CHECK(lower_ok(static_cast<std::int64_t>(w.size()), 144, Eps::parse("0.1"), 3 * ceil_log(4, 144)));
    ApproxParams base(2, 0.1);
    base.enforce_sqrt_bound = false;
    const auto ab = lcs_sequence(bytes("ab"), bytes("ba"), base, m);
    CHECK(ab.size() == 1);
    CHECK((ab == bytes("a") || ab == bytes("b")));
    CHECK(m.live() == 0);
}

TEST_CASE("lcs_sequence validates on 50 seeded pairs, n = 256") {
    const ApproxParams p(8, Eps::parse("0.1"));
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto x = random_string(s * 3, 256, 4);
        const auto y = s % 2 ? substituted(x, 40, 4, s) : random_string(s * 3 + 1, 256, 4);
        SpaceMeter m;
        std::int64_t v = -1;
        const auto w = lcs_sequence(x, y, p, m, &v);
        const auto L = table_lcs(x, y);
        CHECK(static_cast<std::int64_t>(w.size()) == v);
        CHECK(is_subsequence(w, x));
        CHECK(is_subsequence(w, y));
        CHECK(v <= L);
        CHECK(lower_ok(v, L, p.eps, 3 * ceil_log(8, 256)));
        SpaceMeter m2;
        CHECK(v == approx_lcs(x, y, p, m2));
        CHECK(m.live() == 0);
    }
}
