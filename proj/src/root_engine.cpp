#include "digitroot/root_engine.hpp"

#include <array>
#include <utility>

namespace digitroot {

std::string_view trace_event_kind_name(TraceEventKind kind) {
    switch (kind) {
    case TraceEventKind::mark_places: return "mark-places";
    case TraceEventKind::seed: return "seed";
    case TraceEventKind::bring_down: return "bring-down";
    case TraceEventKind::divide_estimate: return "divide-estimate";
    case TraceEventKind::clamp: return "clamp";
    case TraceEventKind::decrement_adjust: return "decrement-adjust";
    case TraceEventKind::subtract: return "subtract";
    case TraceEventKind::accumulate_root: return "accumulate-root";
    }
    throw InternalError("trace_event_kind_name: unknown kind");
}

PlaceMarking mark_places(const DecimalNatural& x, RootKind kind) {
    if (x.is_zero()) {
        throw InternalError("mark_places: zero must be special-cased before marking");
    }
    const unsigned k = exponent(kind);
    const std::size_t top = x.digit_count() - 1;
    return PlaceMarking{top, k, k * (top / k)};
}

DecimalNatural leading_group_value(const DecimalNatural& x, const PlaceMarking& marking) {
    DecimalNatural value;
    for (std::size_t index = marking.top_index + 1; index-- > marking.highest_anchor;) {
        value = add_digit_shifted(value, x.digit_at(index));
    }
    return value;
}

SeedDigit initial_root_digit(const DecimalNatural& group, RootKind kind) {
    if (group.is_zero()) {
        throw InternalError("initial_root_digit: leading group must be nonzero");
    }
    const unsigned k = exponent(kind);
    const std::uint64_t g = to_u64(group);
    if (g > (k == 3 ? 999u : 99u)) {
        throw InternalError("initial_root_digit: group exceeds one digit group");
    }
    // 9-entry table of k-th powers; one lookup resolves the seed digit.
    std::array<std::uint64_t, 10> powers{};
    for (unsigned a = 1; a <= 9; ++a) {
        powers[a] = k == 3 ? static_cast<std::uint64_t>(a) * a * a
                           : static_cast<std::uint64_t>(a) * a;
    }
    unsigned digit = 9;
    while (powers[digit] > g) {
        --digit;
    }
    SeedDigit seed;
    seed.digit = digit;
    seed.power = DecimalNatural::from_u64(powers[digit]);
    seed.remainder = subtract(group, seed.power);
    return seed;
}

DigitSelection select_digit(const DecimalNatural& root, RootKind kind,
                            const DecimalNatural& prefix) {
    if (root.is_zero()) {
        throw InternalError("select_digit: assembled root must be >= 1");
    }
    const unsigned k = exponent(kind);

    // Reconstruct the dividend: the previous remainder (prefix with the new
    // group dropped, minus root^k) with the group's first digit brought down.
    const DecimalNatural consumed_before = shift_right(prefix, k);
    const DecimalNatural prev_remainder = subtract(consumed_before, power_small(root, k));
    DigitSelection sel;
    sel.dividend = add_digit_shifted(prev_remainder, prefix.digit_at(k - 1));
    sel.divisor = kind == RootKind::cube ? multiply_small(power_small(root, 2), 3)
                                         : multiply_small(root, 2);

    // Quotient is bounded by a small constant (the trial never exceeds 27),
    // so a counting scan is enough.
    std::uint64_t trial = 0;
    while (multiply_small(sel.divisor, static_cast<std::uint32_t>(trial) + 1) <= sel.dividend) {
        ++trial;
    }
    sel.trial = trial;
    sel.clamped = trial > 9;

    unsigned candidate = sel.clamped ? 9u : static_cast<unsigned>(trial);
    for (;;) {
        DecimalNatural power = power_small(add_digit_shifted(root, candidate), k);
        sel.probes += 1;
        if (power <= prefix) {
            sel.digit = candidate;
            return sel;
        }
        sel.rejected.emplace_back(candidate, std::move(power));
        if (candidate == 0) {
            throw InternalError("select_digit: no digit preserves the invariant");
        }
        --candidate;
    }
}

namespace {

// Counter discipline: counted call sites are the algorithm's own steps
// (bring-downs, divisor and subtrahend products, the trial division, the
// staged subtractions, root accumulation, one seed lookup). Prefix
// maintenance and the invariant checks are bookkeeping and stay uncounted;
// each candidate probe costs exactly the one power it computes.

DecimalNatural counted_bring_down(const DecimalNatural& remainder, unsigned digit,
                                  std::size_t position, std::vector<TraceEvent>& trace,
                                  OpCounters& counters) {
    DecimalNatural value = add_digit_shifted(remainder, digit);
    counters.additions += 1;
    trace.push_back({TraceEventKind::bring_down,
                     position,
                     {remainder, DecimalNatural::from_u64(digit)},
                     value});
    return value;
}

DecimalNatural counted_subtract(const DecimalNatural& minuend, const DecimalNatural& subtrahend,
                                std::size_t position, std::vector<TraceEvent>& trace,
                                OpCounters& counters) {
    DecimalNatural value = subtract(minuend, subtrahend);
    counters.subtractions += 1;
    trace.push_back({TraceEventKind::subtract, position, {minuend, subtrahend}, value});
    return value;
}

} // namespace

RootState run_iteration(const RootState& state, const DecimalNatural& x, RootKind kind,
                        std::vector<TraceEvent>& trace, OpCounters& counters) {
    const unsigned k = exponent(kind);
    if (state.remaining == 0 || state.anchor < k) {
        throw InternalError("run_iteration: no digit group left to consume");
    }
    const std::size_t i = state.anchor;

    std::array<unsigned, 3> digit{};
    DecimalNatural prefix = state.prefix;
    for (unsigned j = 0; j < k; ++j) {
        digit[j] = x.digit_at(i - 1 - j);
        prefix = add_digit_shifted(prefix, digit[j]);
    }

    const DigitSelection sel = select_digit(state.root, kind, prefix);
    const unsigned b = sel.digit;

    DecimalNatural value = counted_bring_down(state.remainder, digit[0], i - 1, trace, counters);
    if (value != sel.dividend) {
        throw InternalError("run_iteration: dividend disagrees with digit selection");
    }

    // Divisor (3R^2 needs the square and the tripling; 2R a single product),
    // then the trial division and any adjustment probes.
    counters.multiplications += kind == RootKind::cube ? 2 : 1;
    counters.divisions += 1;
    trace.push_back({TraceEventKind::divide_estimate,
                     i - 1,
                     {sel.dividend, sel.divisor},
                     DecimalNatural::from_u64(sel.trial)});
    if (sel.clamped) {
        trace.push_back({TraceEventKind::clamp,
                         i - 1,
                         {DecimalNatural::from_u64(sel.trial)},
                         DecimalNatural::from_u64(9)});
    }
    counters.multiplications += sel.probes;
    for (const auto& [rejected_digit, rejected_power] : sel.rejected) {
        trace.push_back({TraceEventKind::decrement_adjust,
                         i - 1,
                         {DecimalNatural::from_u64(rejected_digit), rejected_power},
                         DecimalNatural::from_u64(rejected_digit - 1)});
    }

    // Staged subtrahends, one per brought-down digit; together they remove
    // (10R+B)^k - (10R)^k, so each stage stays non-negative.
    if (kind == RootKind::cube) {
        DecimalNatural sub1 = multiply_small(sel.divisor, b); // 3R^2 * B
        counters.multiplications += 1;
        value = counted_subtract(value, sub1, i - 1, trace, counters);

        value = counted_bring_down(value, digit[1], i - 2, trace, counters);
        DecimalNatural sub2 =
            multiply_small(multiply_small(multiply_small(state.root, 3), b), b); // 3R * B^2
        counters.multiplications += 3;
        value = counted_subtract(value, sub2, i - 2, trace, counters);

        value = counted_bring_down(value, digit[2], i - 3, trace, counters);
        DecimalNatural sub3 = power_small(DecimalNatural::from_u64(b), 3); // B^3
        counters.multiplications += 1;
        value = counted_subtract(value, sub3, i - 3, trace, counters);
    } else {
        DecimalNatural sub1 = multiply_small(sel.divisor, b); // 2R * B
        counters.multiplications += 1;
        value = counted_subtract(value, sub1, i - 1, trace, counters);

        value = counted_bring_down(value, digit[1], i - 2, trace, counters);
        DecimalNatural sub2 = power_small(DecimalNatural::from_u64(b), 2); // B^2
        counters.multiplications += 1;
        value = counted_subtract(value, sub2, i - 2, trace, counters);
    }

    DecimalNatural new_root = add_digit_shifted(state.root, b);
    counters.additions += 1;
    trace.push_back({TraceEventKind::accumulate_root,
                     i - k,
                     {state.root, DecimalNatural::from_u64(b)},
                     new_root});

    RootState next;
    next.root = std::move(new_root);
    next.remainder = std::move(value);
    next.prefix = std::move(prefix);
    next.anchor = i - k;
    next.remaining = state.remaining - 1;

    // Loop invariant: S = P - R^k (subtract underflows, and therefore throws,
    // if R^k ever exceeds the consumed prefix).
    if (subtract(next.prefix, power_small(next.root, k)) != next.remainder) {
        throw InternalError("run_iteration: loop invariant S = P - R^k violated");
    }
    return next;
}

RootResult extract_root(const DecimalNatural& x, RootKind kind) {
    RootResult result;
    result.input = x;
    if (x.is_zero()) {
        return result;
    }

    const PlaceMarking marking = mark_places(x, kind);
    result.trace.push_back(
        {TraceEventKind::mark_places, marking.highest_anchor, {}, x});

    const DecimalNatural group = leading_group_value(x, marking);
    const SeedDigit seed = initial_root_digit(group, kind);
    result.counters.lookups += 1;
    result.trace.push_back({TraceEventKind::seed,
                            marking.highest_anchor,
                            {group},
                            DecimalNatural::from_u64(seed.digit)});
    result.trace.push_back({TraceEventKind::subtract,
                            marking.highest_anchor,
                            {group, seed.power},
                            seed.remainder});
    DecimalNatural root = DecimalNatural::from_u64(seed.digit);
    result.trace.push_back({TraceEventKind::accumulate_root,
                            marking.highest_anchor,
                            {DecimalNatural{}, root},
                            root});

    RootState state;
    state.root = root;
    state.remainder = seed.remainder;
    state.prefix = group;
    state.anchor = marking.highest_anchor;
    state.remaining = marking.iterations();

    while (state.remaining > 0) {
        state = run_iteration(state, x, kind, result.trace, result.counters);
    }

    if (state.prefix != x) {
        throw InternalError("extract_root: input digits not fully consumed");
    }
    result.root = std::move(state.root);
    result.remainder = std::move(state.remainder);
    result.iterations = marking.iterations();
    return result;
}

} // namespace digitroot
