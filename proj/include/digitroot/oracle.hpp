#pragma once

#include <cstdint>
#include <optional>

#include "digitroot/decimal_natural.hpp"
#include "digitroot/root_engine.hpp"

namespace digitroot::oracle {

/// Ground-truth floor root. Computed by binary search over binary limbs with
/// plain multiply-and-compare; shares no arithmetic with the digit engine.
struct FloorRoot {
    DecimalNatural root;
    DecimalNatural remainder;
};

FloorRoot floor_root(const DecimalNatural& x, RootKind kind);

/// base^k via the oracle's own multiplication, for use in differential tests.
DecimalNatural power(const DecimalNatural& base, RootKind kind);

struct Mismatch {
    DecimalNatural input;
    DecimalNatural engine_root;
    DecimalNatural engine_remainder;
    DecimalNatural oracle_root;
    DecimalNatural oracle_remainder;
};

struct VerifyReport {
    std::uint64_t checked = 0;
    std::optional<Mismatch> smallest_mismatch;

    bool ok() const { return !smallest_mismatch.has_value(); }
};

/// Runs the engine and the oracle for every value in [lo, hi], comparing root
/// and remainder. Stops at the first (smallest) mismatch.
VerifyReport verify_range(const DecimalNatural& lo, const DecimalNatural& hi, RootKind kind);

/// Differential check on `count` random inputs of up to `max_digits` digits.
/// Reports the smallest mismatching input, if any.
VerifyReport verify_random(std::uint64_t count, std::size_t max_digits, RootKind kind,
                           std::uint64_t seed);

} // namespace digitroot::oracle
