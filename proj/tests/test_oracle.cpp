#include <doctest.h>

#include <random>

#include "digitroot/oracle.hpp"
#include "test_support.hpp"

using namespace digitroot;

namespace {
DecimalNatural n(std::uint64_t v) { return DecimalNatural::from_u64(v); }
} // namespace

TEST_CASE("floor_root spot values") {
    auto r = oracle::floor_root(n(34965783), RootKind::cube);
    CHECK(r.root == n(327));
    CHECK(r.remainder == DecimalNatural{});

    r = oracle::floor_root(n(1), RootKind::square);
    CHECK(r.root == n(1));
    CHECK(r.remainder == DecimalNatural{});

    r = oracle::floor_root(n(6859), RootKind::cube);
    CHECK(r.root == n(19));
    CHECK(oracle::power(n(19), RootKind::cube) == n(6859));

    r = oracle::floor_root(DecimalNatural{}, RootKind::square);
    CHECK(r.root == DecimalNatural{});
    CHECK(r.remainder == DecimalNatural{});

    r = oracle::floor_root(n(5), RootKind::square);
    CHECK(r.root == n(2));
    CHECK(r.remainder == n(1));
}

TEST_CASE("floor_root straddles perfect powers") {
    std::mt19937_64 rng(9001);
    const DecimalNatural one = n(1);
    for (const RootKind kind : {RootKind::square, RootKind::cube}) {
        for (int trial = 0; trial < 150; ++trial) {
            const DecimalNatural r = digitroot::testing::random_natural(rng, 20);
            if (r.is_zero()) {
                continue;
            }
            const DecimalNatural x = oracle::power(r, kind);

            const auto at = oracle::floor_root(x, kind);
            CHECK(at.root == r);
            CHECK(at.remainder == DecimalNatural{});

            const auto below = oracle::floor_root(subtract(x, one), kind);
            CHECK(below.root == subtract(r, one));
            CHECK(add(oracle::power(below.root, kind), below.remainder) == subtract(x, one));
        }
    }
}

TEST_CASE("verify_range agrees on small ranges") {
    auto report = oracle::verify_range(DecimalNatural{}, n(1000), RootKind::square);
    CHECK(report.ok());
    CHECK(report.checked == 1001);

    report = oracle::verify_range(DecimalNatural{}, n(1000), RootKind::cube);
    CHECK(report.ok());
    CHECK(report.checked == 1001);

    report = oracle::verify_range(n(5), n(5), RootKind::square);
    CHECK(report.ok());
    CHECK(report.checked == 1);
}

TEST_CASE("verify_random runs the requested count") {
    const auto report = oracle::verify_random(50, 25, RootKind::cube, 1234);
    CHECK(report.ok());
    CHECK(report.checked == 50);
}

TEST_CASE("verify_range rejects inverted bounds") {
    CHECK_THROWS_AS(oracle::verify_range(n(2), n(1), RootKind::square), InternalError);
}
