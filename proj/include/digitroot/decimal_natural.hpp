#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace digitroot {

/// Malformed user input (empty string, non-digit characters).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Contract violation inside the engine (subtraction underflow, broken loop
/// invariant). Never raised by well-formed use; distinct from ParseError so
/// callers cannot confuse the two.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Arbitrary-precision non-negative integer stored as decimal digits,
/// little-endian: digit(0) is the units place. Canonical form has no digit
/// above the most significant nonzero place; zero is the empty sequence.
/// Values are immutable after construction.
class DecimalNatural {
public:
    DecimalNatural() = default; // zero

    static DecimalNatural from_decimal_string(std::string_view text);
    static DecimalNatural from_u64(std::uint64_t value);

    std::string to_string() const;

    bool is_zero() const { return digits_.empty(); }

    /// Number of stored digits; 0 for zero.
    std::size_t digit_count() const { return digits_.size(); }

    /// Digit at place `index`; 0 for any index beyond the top place.
    unsigned digit_at(std::size_t index) const {
        return index < digits_.size() ? digits_[index] : 0u;
    }

    std::strong_ordering operator<=>(const DecimalNatural& rhs) const;
    bool operator==(const DecimalNatural& rhs) const { return digits_ == rhs.digits_; }

private:
    static DecimalNatural from_raw(std::vector<std::uint8_t> digits);

    std::vector<std::uint8_t> digits_;

    friend DecimalNatural add(const DecimalNatural&, const DecimalNatural&);
    friend DecimalNatural subtract(const DecimalNatural&, const DecimalNatural&);
    friend DecimalNatural add_digit_shifted(const DecimalNatural&, unsigned);
    friend DecimalNatural multiply_small(const DecimalNatural&, std::uint32_t);
    friend DecimalNatural power_small(const DecimalNatural&, unsigned);
    friend DecimalNatural shift_left(const DecimalNatural&, std::size_t);
    friend DecimalNatural shift_right(const DecimalNatural&, std::size_t);
};

DecimalNatural add(const DecimalNatural& a, const DecimalNatural& b);

/// Exact difference a - b. Throws InternalError if a < b: the engine
/// guarantees non-negative subtractions, so underflow is a bug, never data.
DecimalNatural subtract(const DecimalNatural& a, const DecimalNatural& b);

/// 10*x + digit: shifts x one place left and sets the units digit.
/// The bring-down / root-accumulation primitive.
DecimalNatural add_digit_shifted(const DecimalNatural& x, unsigned digit);

DecimalNatural multiply_small(const DecimalNatural& x, std::uint32_t factor);

/// x^exponent, exponent in {2, 3}.
DecimalNatural power_small(const DecimalNatural& x, unsigned exponent);

/// x * 10^places.
DecimalNatural shift_left(const DecimalNatural& x, std::size_t places);

/// floor(x / 10^places): drops the low `places` digits.
DecimalNatural shift_right(const DecimalNatural& x, std::size_t places);

/// Narrows to a machine word; throws InternalError if x does not fit.
std::uint64_t to_u64(const DecimalNatural& x);

} // namespace digitroot
