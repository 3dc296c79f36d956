#pragma once

#include <cstdint>
#include <string>

#include "digitroot/root_engine.hpp"

namespace digitroot {

/// Per-counter difference, measured minus predicted.
struct CounterDeltas {
    std::int64_t multiplications = 0;
    std::int64_t additions = 0;
    std::int64_t divisions = 0;
    std::int64_t subtractions = 0;
    std::int64_t lookups = 0;
};

/// Predicted vs. measured primitive-operation totals for one extraction.
/// `iterations` is the count the engine actually uses (one per full digit
/// group below the leading group); the nominal N/k figure is derivable from
/// digit_count and period and is shown by the text renderer for reference.
struct ComplexityReport {
    std::size_t digit_count = 0; // N
    unsigned period = 0;         // k
    std::size_t iterations = 0;
    OpCounters predicted;
    OpCounters measured;
    CounterDeltas deltas;
    std::size_t adjustments = 0; // clamp + decrement events in the trace
};

/// Predicted totals: per-iteration coefficients (12M+3A+3D+4S for cube roots,
/// 5M+3A+2D+3S for square roots) times the iteration count, plus one table
/// lookup for the seed digit.
OpCounters predicted_counts(std::size_t digit_count, RootKind kind);

std::size_t count_adjustments(const std::vector<TraceEvent>& trace);

ComplexityReport compare(const RootResult& result, RootKind kind);

std::string render_text(const ComplexityReport& report);

} // namespace digitroot
