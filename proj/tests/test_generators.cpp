#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "strmeas/exact.hpp"
#include "strmeas/generators.hpp"

using namespace strmeas;
using namespace strmeas::testing;

TEST_CASE("the PRNG is SplitMix64") {
    // Published reference outputs for seed 0.
    SplitMix64 r(0);
    CHECK(r.next() == 0xE220A8397B1DCDAFULL);
    CHECK(r.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(r.next() == 0x06C45D188009454FULL);
}

TEST_CASE("below stays in range") {
    SplitMix64 r(42);
    for (int i = 0; i < 10000; ++i) CHECK(r.below(7) < 7);
}

TEST_CASE("empty and identical-spec outputs") {
    GenSpec g;
    g.seed = 9;
    g.n = 0;
    CHECK(generate(g).x.size() == 0);
    g.n = 50;
    g.alphabet_size = 4;
    CHECK(generate(g).x == generate(g).x);
    g.seed = 10;
    const auto other = generate(g).x;
    g.seed = 9;
    CHECK_FALSE(generate(g).x == other);
}

TEST_CASE("random strings use the documented symbol codes") {
    GenSpec g;
    g.seed = 3;
    g.n = 400;
    g.alphabet_size = 3;
    const auto x = generate(g).x;
    std::set<std::int64_t> seen;
    for (const auto c : x.codes()) seen.insert(c);
    CHECK(seen == std::set<std::int64_t>{'a', 'b', 'c'});
}

TEST_CASE("planted_ed(0) is an identical pair") {
    GenSpec g;
    g.seed = 5;
    g.n = 30;
    g.alphabet_size = 4;
    g.kind = GenKind::PlantedEd;
    g.param = 0;
    const auto r = generate(g);
    REQUIRE(r.y.has_value());
    CHECK(exact_ed(r.x, *r.y) == 0);
}

TEST_CASE("planted_ed(k) never exceeds its budget") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        GenSpec g;
        g.seed = s;
        g.n = 1 + static_cast<std::int64_t>(s % 60);
        g.alphabet_size = 2 + static_cast<std::int64_t>(s % 4);
        g.kind = GenKind::PlantedEd;
        g.param = static_cast<std::int64_t>(s % static_cast<std::uint64_t>(g.n + 1));
        const auto r = generate(g);
        REQUIRE(r.y.has_value());
        CHECK(r.annotation == g.param);
        CHECK(exact_ed(r.x, *r.y) <= g.param);
    }
}

TEST_CASE("planted_lis has an increasing run at the reported positions") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        GenSpec g;
        g.seed = s;
        g.n = 200;
        g.kind = GenKind::PlantedLis;
        g.param = 20 + static_cast<std::int64_t>(s);
        const auto r = generate(g);
        CHECK(r.annotation == g.param);
        REQUIRE(static_cast<std::int64_t>(r.positions.size()) == g.param);
        for (std::size_t i = 1; i < r.positions.size(); ++i) {
            CHECK(r.positions[i - 1] < r.positions[i]);
            CHECK(r.x.at(static_cast<std::size_t>(r.positions[i - 1])) < r.x.at(static_cast<std::size_t>(r.positions[i])));
        }
        CHECK(patience_sorting(r.x).length >= g.param);
        auto codes = r.x.codes();
        std::sort(codes.begin(), codes.end());
        for (std::int64_t i = 0; i < g.n; ++i) CHECK(codes[static_cast<std::size_t>(i)] == i + 1);
    }
}

TEST_CASE("planted_lis(n) degenerates to the identity") {
    GenSpec g;
    g.seed = 1;
    g.n = 64;
    g.kind = GenKind::PlantedLis;
    g.param = 64;
    CHECK(generate(g).x == sorted(64));
}

TEST_CASE("permutations shuffle 1..n") {
    const auto x = permutation(77, 500);
    auto codes = x.codes();
    std::sort(codes.begin(), codes.end());
    for (std::int64_t i = 0; i < 500; ++i) CHECK(codes[static_cast<std::size_t>(i)] == i + 1);
}

TEST_CASE("invalid specs are parameter errors") {
    GenSpec g;
    g.n = 10;
    g.alphabet_size = 0;
    CHECK_THROWS_AS(generate(g), ParamError);
    g.alphabet_size = 2;
    g.kind = GenKind::PlantedEd;
    g.param = 11;
    CHECK_THROWS_AS(generate(g), ParamError);
    g.kind = GenKind::PlantedLis;
    CHECK_THROWS_AS(generate(g), ParamError);
    g.n = -1;
    g.kind = GenKind::Random;
    CHECK_THROWS_AS(generate(g), ParamError);
}

TEST_CASE("enumerate_small examples") {
    const auto a = enumerate_small(2, 1);
    REQUIRE(a.size() == 3);
    CHECK(a[0].size() == 0);
    CHECK(a[1] == bytes("a"));
    CHECK(a[2] == bytes("b"));
    CHECK(enumerate_small(2, 2).size() == 7);
    const auto c = enumerate_small(3, 0);
    REQUIRE(c.size() == 1);
    CHECK(c[0].size() == 0);
    CHECK_THROWS_AS(enumerate_small(10, 8), ParamError);
}

TEST_CASE("enumeration is lexicographic within each length and complete") {
    const auto all = enumerate_small(3, 4);
    CHECK(all.size() == 1 + 3 + 9 + 27 + 81);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        seen.insert(all[i].to_bytes());
        if (i > 0 && all[i].size() == all[i - 1].size()) CHECK(all[i - 1].to_bytes() < all[i].to_bytes());
        if (i > 0) CHECK(all[i - 1].size() <= all[i].size());
    }
    CHECK(seen.size() == all.size());
}
