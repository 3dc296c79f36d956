#include "digitroot/decimal_natural.hpp"

#include <algorithm>
#include <limits>

namespace digitroot {

namespace {

void strip_leading_zeros(std::vector<std::uint8_t>& digits) {
    while (!digits.empty() && digits.back() == 0) {
        digits.pop_back();
    }
}

} // namespace

DecimalNatural DecimalNatural::from_raw(std::vector<std::uint8_t> digits) {
    strip_leading_zeros(digits);
    DecimalNatural out;
    out.digits_ = std::move(digits);
    return out;
}

DecimalNatural DecimalNatural::from_decimal_string(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty number");
    }
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
        const char c = *it;
        if (c < '0' || c > '9') {
            throw ParseError(std::string("invalid digit '") + c + "' in number");
        }
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return from_raw(std::move(digits));
}

DecimalNatural DecimalNatural::from_u64(std::uint64_t value) {
    std::vector<std::uint8_t> digits;
    while (value > 0) {
        digits.push_back(static_cast<std::uint8_t>(value % 10));
        value /= 10;
    }
    return from_raw(std::move(digits));
}

std::string DecimalNatural::to_string() const {
    if (digits_.empty()) {
        return "0";
    }
    std::string out;
    out.reserve(digits_.size());
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        out.push_back(static_cast<char>('0' + *it));
    }
    return out;
}

std::strong_ordering DecimalNatural::operator<=>(const DecimalNatural& rhs) const {
    if (digits_.size() != rhs.digits_.size()) {
        return digits_.size() <=> rhs.digits_.size();
    }
    for (std::size_t i = digits_.size(); i-- > 0;) {
        if (digits_[i] != rhs.digits_[i]) {
            return digits_[i] <=> rhs.digits_[i];
        }
    }
    return std::strong_ordering::equal;
}

DecimalNatural add(const DecimalNatural& a, const DecimalNatural& b) {
    const std::size_t n = std::max(a.digits_.size(), b.digits_.size());
    std::vector<std::uint8_t> out;
    out.reserve(n + 1);
    unsigned carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned s = a.digit_at(i) + b.digit_at(i) + carry;
        out.push_back(static_cast<std::uint8_t>(s % 10));
        carry = s / 10;
    }
    if (carry != 0) {
        out.push_back(static_cast<std::uint8_t>(carry));
    }
    return DecimalNatural::from_raw(std::move(out));
}

DecimalNatural subtract(const DecimalNatural& a, const DecimalNatural& b) {
    if (a < b) {
        throw InternalError("subtraction underflow: " + a.to_string() + " - " + b.to_string());
    }
    std::vector<std::uint8_t> out;
    out.reserve(a.digits_.size());
    int borrow = 0;
    for (std::size_t i = 0; i < a.digits_.size(); ++i) {
        int d = static_cast<int>(a.digits_[i]) - static_cast<int>(b.digit_at(i)) - borrow;
        borrow = d < 0 ? 1 : 0;
        if (borrow) {
            d += 10;
        }
        out.push_back(static_cast<std::uint8_t>(d));
    }
    return DecimalNatural::from_raw(std::move(out));
}

DecimalNatural add_digit_shifted(const DecimalNatural& x, unsigned digit) {
    if (digit > 9) {
        throw InternalError("add_digit_shifted: digit out of range");
    }
    if (x.is_zero() && digit == 0) {
        return DecimalNatural{};
    }
    std::vector<std::uint8_t> out;
    out.reserve(x.digits_.size() + 1);
    out.push_back(static_cast<std::uint8_t>(digit));
    out.insert(out.end(), x.digits_.begin(), x.digits_.end());
    return DecimalNatural::from_raw(std::move(out));
}

DecimalNatural multiply_small(const DecimalNatural& x, std::uint32_t factor) {
    if (factor == 0 || x.is_zero()) {
        return DecimalNatural{};
    }
    std::vector<std::uint8_t> out;
    out.reserve(x.digits_.size() + 10);
    std::uint64_t carry = 0;
    for (const std::uint8_t d : x.digits_) {
        const std::uint64_t v = static_cast<std::uint64_t>(d) * factor + carry;
        out.push_back(static_cast<std::uint8_t>(v % 10));
        carry = v / 10;
    }
    while (carry > 0) {
        out.push_back(static_cast<std::uint8_t>(carry % 10));
        carry /= 10;
    }
    return DecimalNatural::from_raw(std::move(out));
}

namespace {

// Schoolbook product on raw digit vectors; power_small is the sole caller.
std::vector<std::uint8_t> multiply_digits(const std::vector<std::uint8_t>& a,
                                          const std::vector<std::uint8_t>& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<std::uint32_t> acc(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint32_t da = a[i];
        if (da == 0) {
            continue;
        }
        std::uint32_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::uint32_t v = acc[i + j] + da * b[j] + carry;
            acc[i + j] = v % 10;
            carry = v / 10;
        }
        std::size_t k = i + b.size();
        while (carry > 0) {
            const std::uint32_t v = acc[k] + carry;
            acc[k] = v % 10;
            carry = v / 10;
            ++k;
        }
    }
    return {acc.begin(), acc.end()};
}

} // namespace

DecimalNatural power_small(const DecimalNatural& x, unsigned exponent) {
    if (exponent != 2 && exponent != 3) {
        throw InternalError("power_small: exponent must be 2 or 3");
    }
    std::vector<std::uint8_t> result = multiply_digits(x.digits_, x.digits_);
    if (exponent == 3) {
        result = multiply_digits(result, x.digits_);
    }
    return DecimalNatural::from_raw(std::move(result));
}

DecimalNatural shift_left(const DecimalNatural& x, std::size_t places) {
    if (x.is_zero() || places == 0) {
        return x;
    }
    std::vector<std::uint8_t> out(places, 0);
    out.insert(out.end(), x.digits_.begin(), x.digits_.end());
    return DecimalNatural::from_raw(std::move(out));
}

DecimalNatural shift_right(const DecimalNatural& x, std::size_t places) {
    if (places >= x.digits_.size()) {
        return DecimalNatural{};
    }
    std::vector<std::uint8_t> out(x.digits_.begin() + static_cast<std::ptrdiff_t>(places),
                                  x.digits_.end());
    return DecimalNatural::from_raw(std::move(out));
}

std::uint64_t to_u64(const DecimalNatural& x) {
    constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t value = 0;
    for (std::size_t i = x.digit_count(); i-- > 0;) {
        const unsigned d = x.digit_at(i);
        if (value > (limit - d) / 10) {
            throw InternalError("to_u64: value does not fit in 64 bits");
        }
        value = value * 10 + d;
    }
    return value;
}

} // namespace digitroot
