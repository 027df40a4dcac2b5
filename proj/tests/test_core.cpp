#include <doctest.h>

#include <algorithm>
#include <limits>

#include "strmeas/meter.hpp"
#include "strmeas/params.hpp"
#include "strmeas/token.hpp"

using namespace strmeas;

namespace {
std::vector<std::int64_t> v(std::initializer_list<std::int64_t> l) { return l; }
}  // namespace

TEST_CASE("token sentinels order around every symbol") {
    const Token lo = Token::symbol(Token::kMinCode);
    const Token hi = Token::symbol(Token::kMaxCode);
    CHECK(Token::neg_inf() < lo);
    CHECK(hi < Token::pos_inf());
    CHECK(Token::wildcard() != lo);
    CHECK(Token::wildcard() != Token::neg_inf());
    CHECK_THROWS_AS(Token::symbol(std::numeric_limits<std::int64_t>::min()), std::invalid_argument);
    CHECK_THROWS_AS(Token::symbol(std::numeric_limits<std::int64_t>::max()), std::invalid_argument);
    CHECK_THROWS_AS(Token::symbol(std::numeric_limits<std::int64_t>::min() + 1), std::invalid_argument);
}

TEST_CASE("token strings round-trip bytes and ints") {
    const auto s = TokenString::from_bytes("abc");
    CHECK(s.size() == 3);
    CHECK(s.at(1).code() == 'a');
    CHECK(s.to_bytes() == "abc");
    const auto t = TokenString::from_ints({5, -3, 7});
    CHECK(t.codes() == v({5, -3, 7}));
    CHECK_THROWS_AS(s.at(0), IndexError);
    CHECK_THROWS_AS(s.at(4), IndexError);
}

TEST_CASE("token_substring examples") {
    const auto s = TokenString::from_bytes("abcd");
    const auto bc = token_substring(s, Interval{2, 3});
    REQUIRE(bc.size() == 2);
    CHECK(bc.at(1).code() == 'b');
    CHECK(bc.at(2).code() == 'c');
    CHECK(token_substring(s, Interval{2, 1}).size() == 0);
    CHECK_THROWS_AS(token_substring(s, Interval{3, 5}), IndexError);
    CHECK_THROWS_AS(token_substring(s, Interval{0, 1}), IndexError);
}

TEST_CASE("a view of a view equals the direct view") {
    const auto s = TokenString::from_bytes("abcdefghij");
    for (std::int64_t a = 1; a <= 10; ++a) {
        for (std::int64_t b = a - 1; b <= 10; ++b) {
            const auto outer = token_substring(s, Interval{a, b});
            const auto len = static_cast<std::int64_t>(outer.size());
            for (std::int64_t c = 1; c <= len; ++c) {
                for (std::int64_t d = c - 1; d <= len; ++d) {
                    const auto inner = token_substring(outer, Interval{c, d});
                    const auto direct = token_substring(s, Interval{a + c - 1, a + d - 1});
                    REQUIRE(inner.size() == direct.size());
                    for (std::size_t i = 1; i <= inner.size(); ++i) CHECK(inner.at(i) == direct.at(i));
                }
            }
        }
    }
}

TEST_CASE("views are O(1) regardless of length") {
    // Creating a view charges nothing: it only records an offset and a length.
    const TokenString big(std::vector<Token>(100000, Token::symbol(1)));
    SpaceMeter m;
    const auto view = token_substring(big, Interval{10, 99990});
    CHECK(view.size() == 99981);
    CHECK(m.peak() == 0);
    CHECK(sizeof(view) <= 4 * sizeof(void*));
}

TEST_CASE("eps parses exact decimals") {
    CHECK(Eps::parse("0.1").num() == 100000);
    CHECK(Eps::parse("0.05").num() == 50000);
    CHECK(Eps::parse(".5").num() == 500000);
    CHECK(Eps::parse("0.000001").num() == 1);
    CHECK_THROWS_AS(Eps::parse("0.0000001"), ParamError);
    CHECK_THROWS_AS(Eps::parse("1.5"), ParamError);
    CHECK_THROWS_AS(Eps::parse("abc"), ParamError);
    CHECK_THROWS_AS(Eps::parse("0"), ParamError);
    CHECK_THROWS_AS(Eps::parse("1"), ParamError);
    CHECK(Eps::from_double(0.1) == Eps::parse("0.1"));
}

TEST_CASE("eps integer helpers round as documented") {
    const Eps e = Eps::parse("0.1");
    CHECK(e.ceil_mul(25) == 3);
    CHECK(e.floor_mul(25) == 2);
    CHECK(e.ceil_div_by(4) == 40);
    CHECK(e.mul_le(10, 1));
    CHECK_FALSE(e.mul_le(11, 1));
}

TEST_CASE("schedule_values examples") {
    CHECK(schedule_values(Eps::parse("0.5"), 5, true) == v({0, 1, 2, 3, 5}));
    CHECK(schedule_values(Eps::parse("0.5"), 0, true) == v({0}));
    CHECK(schedule_values(Eps::parse("0.1"), 3, false) == v({1, 2, 3}));
    CHECK_THROWS_AS(schedule_values(Eps::from_ratio(0), 5, true), ParamError);
}

TEST_CASE("schedule coverage: every target has a value within a (1+eps) factor") {
    for (const char* text : {"0.05", "0.1", "0.3", "0.5"}) {
        const Eps e = Eps::parse(text);
        const auto s = schedule_values(e, 20000, false);
        for (std::int64_t T = 1; T <= 10000; ++T) {
            const auto it = std::lower_bound(s.begin(), s.end(), T);
            REQUIRE(it != s.end());
            // v <= ceil((1+eps) T)
            CHECK(*it <= T + e.ceil_mul(T));
        }
    }
}

TEST_CASE("schedule_next follows the integer recurrence") {
    const Eps e = Eps::parse("0.5");
    CHECK(schedule_next(e, 1) == 2);
    CHECK(schedule_next(e, 3) == 5);
    CHECK(schedule_next(e, 10) == 15);
}

TEST_CASE("even_picks examples") {
    CHECK(even_picks(10, 5) == v({0, 2, 4, 6, 8, 10}));
    CHECK(even_picks(0, 7) == v({0}));
    CHECK(even_picks(3, 8) == v({0, 1, 2, 3}));
}

TEST_CASE("even_picks gap bound and endpoints") {
    for (std::int64_t k = 0; k <= 100000; k += 997) {
        for (std::int64_t slots = 1; slots <= 1000; slots += 37) {
            const auto p = even_picks(k, slots);
            REQUIRE(!p.empty());
            CHECK(p.front() == 0);
            CHECK(p.back() == k);
            const std::int64_t bound = (k + slots - 1) / slots;
            for (std::size_t i = 1; i < p.size(); ++i) {
                CHECK(p[i] > p[i - 1]);
                CHECK(p[i] - p[i - 1] <= std::max<std::int64_t>(1, bound));
            }
        }
    }
}

TEST_CASE("ceil_sqrt and ceil_log") {
    CHECK(ceil_sqrt(1) == 1);
    CHECK(ceil_sqrt(100) == 10);
    CHECK(ceil_sqrt(101) == 11);
    CHECK(ceil_log(2, 6) == 3);
    CHECK(ceil_log(16, 4096) == 3);
    CHECK(ceil_log(8, 1024) == 4);
    CHECK(ceil_log(8, 512) == 3);
    CHECK(ceil_log(4, 1) == 0);
}

TEST_CASE("approx params validation") {
    CHECK_THROWS_AS(ApproxParams(1, 0.1).validate(100), ParamError);
    CHECK_THROWS_AS(ApproxParams(11, 0.1).validate(100), ParamError);
    CHECK_NOTHROW(ApproxParams(10, 0.1).validate(100));
    ApproxParams loose(16, 0.1);
    loose.enforce_sqrt_bound = false;
    CHECK_NOTHROW(loose.validate(64));
}
