#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "digitroot/decimal_natural.hpp"

namespace digitroot {

/// Which root is being extracted. The grouping period, divisor shape and
/// staged subtrahends all follow from the exponent.
enum class RootKind : unsigned {
    square = 2,
    cube = 3,
};

constexpr unsigned exponent(RootKind kind) { return static_cast<unsigned>(kind); }

/// Classification of the input's digit places. Anchor places are the indices
/// divisible by the grouping period k; the units place is always an anchor.
/// Each iteration of the engine consumes the k digits below an anchor.
struct PlaceMarking {
    std::size_t top_index = 0;      // index of the most significant digit
    unsigned period = 0;            // k
    std::size_t highest_anchor = 0; // largest anchor index <= top_index

    bool is_anchor(std::size_t index) const { return index % period == 0; }
    std::size_t iterations() const { return highest_anchor / period; }
};

enum class TraceEventKind {
    mark_places,
    seed,
    bring_down,
    divide_estimate,
    clamp,
    decrement_adjust,
    subtract,
    accumulate_root,
};

std::string_view trace_event_kind_name(TraceEventKind kind);

/// One recorded engine action. `position` is the global digit place the event
/// is aligned to: for bring-downs and subtractions, the units place of the
/// value involved; for root accumulation, the anchor reached.
struct TraceEvent {
    TraceEventKind kind;
    std::size_t position;
    std::vector<DecimalNatural> operands;
    DecimalNatural result;
};

/// Primitive-operation tallies for one extraction.
struct OpCounters {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;
    std::uint64_t divisions = 0;
    std::uint64_t subtractions = 0;
    std::uint64_t lookups = 0;

    bool operator==(const OpCounters&) const = default;
};

/// Loop state between iterations. Invariant after seeding and after every
/// completed iteration: remainder = prefix - root^k, with
/// 0 <= remainder < (root+1)^k - root^k.
struct RootState {
    DecimalNatural root;      // assembled root so far
    DecimalNatural remainder; // running remainder
    DecimalNatural prefix;    // value of all digits consumed so far
    std::size_t anchor = 0;   // current anchor index
    std::size_t remaining = 0; // iterations left
};

struct RootResult {
    DecimalNatural input;
    DecimalNatural root;
    DecimalNatural remainder;
    std::vector<TraceEvent> trace;
    OpCounters counters;
    std::size_t iterations = 0;
};

/// Classifies the digit places of x. x must be nonzero; callers special-case
/// zero before marking.
PlaceMarking mark_places(const DecimalNatural& x, RootKind kind);

/// The 1..k-digit group above (and including) the highest anchor. At most 999
/// for cube roots, 99 for square roots.
DecimalNatural leading_group_value(const DecimalNatural& x, const PlaceMarking& marking);

/// Seed digit for the leading group: the unique A in 1..9 with
/// A^k <= group < (A+1)^k, found in a 9-entry table of k-th powers.
struct SeedDigit {
    unsigned digit = 0;       // A
    DecimalNatural power;     // A^k
    DecimalNatural remainder; // group - A^k
};

SeedDigit initial_root_digit(const DecimalNatural& group, RootKind kind);

/// Outcome of choosing the next root digit. The trial quotient is the raw
/// division estimate; it never underestimates the selected digit. `rejected`
/// lists each decremented candidate with the power that disqualified it.
struct DigitSelection {
    unsigned digit = 0;        // B
    DecimalNatural dividend;   // l (cube) or y (square)
    DecimalNatural divisor;    // 3R^2 or 2R
    std::uint64_t trial = 0;   // floor(dividend / divisor)
    bool clamped = false;      // trial exceeded 9
    unsigned probes = 0;       // candidate powers evaluated (>= 1)
    std::vector<std::pair<unsigned, DecimalNatural>> rejected;
};

/// Chooses B = max{ b in 0..9 : (10*root + b)^k <= prefix } by decrementing
/// from the clamped trial quotient. `prefix` is the value of all digits
/// consumed through the end of the current group; root must be >= 1.
DigitSelection select_digit(const DecimalNatural& root, RootKind kind,
                            const DecimalNatural& prefix);

/// One engine iteration: consumes the next k digits of x, selects the next
/// root digit and performs the staged subtractions, appending trace events
/// and counter increments to the run's record.
RootState run_iteration(const RootState& state, const DecimalNatural& x, RootKind kind,
                        std::vector<TraceEvent>& trace, OpCounters& counters);

/// Full extraction: root = floor(x^(1/k)), remainder = x - root^k, with the
/// complete trace and operation counts for the run.
RootResult extract_root(const DecimalNatural& x, RootKind kind);

} // namespace digitroot
