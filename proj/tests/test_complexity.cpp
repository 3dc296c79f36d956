#include <doctest.h>

#include <array>
#include <string>

#include "digitroot/complexity.hpp"
#include "digitroot/root_engine.hpp"

using namespace digitroot;

namespace {
DecimalNatural n(std::uint64_t v) { return DecimalNatural::from_u64(v); }
} // namespace

TEST_CASE("predicted_counts applies the per-iteration coefficients") {
    SUBCASE("cube, eight digits, two iterations") {
        const OpCounters c = predicted_counts(8, RootKind::cube);
        CHECK(c.multiplications == 24);
        CHECK(c.additions == 6);
        CHECK(c.divisions == 6);
        CHECK(c.subtractions == 8);
        CHECK(c.lookups == 1);
    }
    SUBCASE("square, eight digits, three iterations") {
        const OpCounters c = predicted_counts(8, RootKind::square);
        CHECK(c.multiplications == 15);
        CHECK(c.additions == 9);
        CHECK(c.divisions == 6);
        CHECK(c.subtractions == 9);
        CHECK(c.lookups == 1);
    }
    SUBCASE("single digit is pure lookup") {
        for (const RootKind kind : {RootKind::square, RootKind::cube}) {
            const OpCounters c = predicted_counts(1, kind);
            CHECK(c.multiplications == 0);
            CHECK(c.additions == 0);
            CHECK(c.divisions == 0);
            CHECK(c.subtractions == 0);
            CHECK(c.lookups == 1);
        }
    }
    SUBCASE("zero digits is a contract violation") {
        CHECK_THROWS_AS(predicted_counts(0, RootKind::cube), InternalError);
    }
}

TEST_CASE("predicted_counts is linear up to the lookup constant") {
    // N=7 gives 2 cube iterations, N=13 gives 4
    const OpCounters two = predicted_counts(7, RootKind::cube);
    const OpCounters four = predicted_counts(13, RootKind::cube);
    CHECK(four.multiplications == 2 * two.multiplications);
    CHECK(four.additions == 2 * two.additions);
    CHECK(four.divisions == 2 * two.divisions);
    CHECK(four.subtractions == 2 * two.subtractions);
    CHECK(four.lookups == two.lookups);
}

TEST_CASE("compare pairs predicted with measured") {
    SUBCASE("worked cube example") {
        const RootResult result = extract_root(n(34965783), RootKind::cube);
        const ComplexityReport report = compare(result, RootKind::cube);
        CHECK(report.digit_count == 8);
        CHECK(report.iterations == 2);
        CHECK(report.adjustments == 0);
        CHECK(report.predicted.multiplications == 24);
        // frozen from the instrumented run: 8M + 4A + 1D + 3S per iteration
        CHECK(report.measured.multiplications == 16);
        CHECK(report.measured.additions == 8);
        CHECK(report.measured.divisions == 2);
        CHECK(report.measured.subtractions == 6);
        CHECK(report.measured.lookups == 1);
        CHECK(report.deltas.multiplications == -8);
        CHECK(report.deltas.lookups == 0);
    }
    SUBCASE("worked square example") {
        const RootResult result = extract_root(n(11943936), RootKind::square);
        const ComplexityReport report = compare(result, RootKind::square);
        CHECK(report.digit_count == 8);
        CHECK(report.iterations == 3);
        CHECK(report.adjustments == 0);
        // frozen from the instrumented run: 4M + 3A + 1D + 2S per iteration
        CHECK(report.measured.multiplications == 12);
        CHECK(report.measured.additions == 9);
        CHECK(report.measured.divisions == 3);
        CHECK(report.measured.subtractions == 6);
        CHECK(report.measured.lookups == 1);
    }
    SUBCASE("adjusted run reports its adjustment") {
        const RootResult result = extract_root(n(256), RootKind::square);
        const ComplexityReport report = compare(result, RootKind::square);
        CHECK(report.adjustments == 1);
    }
    SUBCASE("zero input") {
        const RootResult result = extract_root(DecimalNatural{}, RootKind::square);
        const ComplexityReport report = compare(result, RootKind::square);
        CHECK(report.digit_count == 1);
        CHECK(report.iterations == 0);
        CHECK(report.measured == OpCounters{});
    }
}

TEST_CASE("measured counters grow linearly per iteration on adjustment-free runs") {
    // cubes of roots with 2..8 digits; every run must be adjustment-free for
    // the slope to be meaningful, and is asserted so.
    const std::array<std::uint64_t, 7> roots = {12,     123,     1234,    12345,
                                                123456, 1234567, 12345678};
    std::array<OpCounters, 7> measured{};
    for (std::size_t t = 0; t < roots.size(); ++t) {
        const DecimalNatural x = power_small(n(roots[t]), 3);
        const RootResult result = extract_root(x, RootKind::cube);
        REQUIRE(result.root == n(roots[t]));
        REQUIRE(count_adjustments(result.trace) == 0);
        REQUIRE(result.iterations == t + 1);
        measured[t] = result.counters;
    }
    const auto slope = [&](auto member) {
        return measured[1].*member - measured[0].*member;
    };
    for (std::size_t t = 1; t < roots.size(); ++t) {
        CHECK(measured[t].multiplications - measured[t - 1].multiplications ==
              slope(&OpCounters::multiplications));
        CHECK(measured[t].additions - measured[t - 1].additions == slope(&OpCounters::additions));
        CHECK(measured[t].divisions - measured[t - 1].divisions == slope(&OpCounters::divisions));
        CHECK(measured[t].subtractions - measured[t - 1].subtractions ==
              slope(&OpCounters::subtractions));
        CHECK(measured[t].lookups == measured[t - 1].lookups);
    }
}

TEST_CASE("render_text is deterministic and carries the headline fields") {
    const RootResult result = extract_root(n(34965783), RootKind::cube);
    const ComplexityReport report = compare(result, RootKind::cube);
    const std::string text = render_text(report);
    CHECK(text == render_text(report));
    CHECK(text.find("complexity (k=3, N=8)") != std::string::npos);
    CHECK(text.find("iterations: 2 (nominal N/k = 8/3)") != std::string::npos);
    CHECK(text.find("adjustments: 0") != std::string::npos);
}
