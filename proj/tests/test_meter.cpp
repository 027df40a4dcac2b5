#include <doctest.h>

#include "strmeas/meter.hpp"

using namespace strmeas;

TEST_CASE("meter examples") {
    SpaceMeter fresh;
    CHECK(meter_peak(fresh) == 0);

    SpaceMeter a;
    meter_charge(a, 5);
    meter_charge(a, 3);
    meter_release(a, 8);
    CHECK(a.live() == 0);
    CHECK(a.peak() == 8);

    SpaceMeter b;
    meter_charge(b, 2);
    meter_release(b, 1);
    meter_charge(b, 4);
    CHECK(b.live() == 5);
    CHECK(b.peak() == 5);
}

TEST_CASE("meter rejects negative balances") {
    SpaceMeter m;
    meter_charge(m, 2);
    CHECK_THROWS_AS(meter_release(m, 3), AccountingError);
    CHECK_THROWS_AS(meter_charge(m, -1), AccountingError);
    CHECK_THROWS_AS(meter_release(m, -1), AccountingError);
}

TEST_CASE("scoped charges and frames balance") {
    SpaceMeter m;
    {
        FrameGuard f(m, 4);
        CHECK(m.live() == 4);
        {
            FrameGuard g(m, 6);
            CHECK(m.live() == 10);
        }
        CHECK(m.live() == 4);
    }
    CHECK(m.live() == 0);
    CHECK(m.peak() == 10);
    CHECK(m.max_depth() == 2);
}

TEST_CASE("metered vectors charge their capacity") {
    SpaceMeter m;
    {
        MeteredVec<std::int64_t> v(m);
        for (int i = 0; i < 100; ++i) v.push_back(i);
        CHECK(m.live() >= 100);
        MeteredVec<std::int64_t> copy(v);
        CHECK(m.live() >= 200);
        MeteredVec<std::int64_t> moved(std::move(copy));
        CHECK(m.live() >= 200);
        v.raw().shrink_to_fit();
        v.sync();
    }
    CHECK(m.live() == 0);
}

TEST_CASE("tape examples") {
    const auto x = TokenString::from_bytes("ab");
    const auto y = TokenString::from_bytes("xyz");
    StreamTape t(x, y);
    CHECK(t.passes_started() == 0);
    CHECK(tape_next(t)->code() == 'a');
    CHECK(t.passes_started() == 1);
    CHECK(tape_next(t)->code() == 'b');
    CHECK_FALSE(tape_next(t).has_value());
    t.rewind();
    CHECK(tape_next(t)->code() == 'a');
    CHECK(t.passes_started() == 2);

    CHECK(tape_probe_y(t, 2).code() == 'y');
    tape_probe_y(t, 1);
    CHECK(t.y_probes() == 2);
    CHECK_THROWS_AS(tape_probe_y(t, 0), IndexError);
    CHECK_THROWS_AS(tape_probe_y(t, 4), IndexError);
}

TEST_CASE("tape y view counts every read") {
    const auto x = TokenString::from_bytes("");
    const auto y = TokenString::from_bytes("hello");
    StreamTape t(x, y);
    const TapeY view(t);
    CHECK(view.size() == 5);
    CHECK(view.at(5).code() == 'o');
    CHECK(view.at(1).code() == 'h');
    CHECK(t.y_probes() == 2);
    CHECK(t.passes_started() == 0);
}
