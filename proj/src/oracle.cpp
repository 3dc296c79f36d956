#include "digitroot/oracle.hpp"

#include <random>
#include <string>
#include <vector>

namespace digitroot::oracle {

namespace {

// Minimal base-2^32 unsigned integer. The oracle deliberately runs on its own
// arithmetic: different base, different carry logic, nothing borrowed from
// the digit engine it is checking.
struct BigUint {
    std::vector<std::uint32_t> limbs; // little-endian

    bool is_zero() const { return limbs.empty(); }

    void trim() {
        while (!limbs.empty() && limbs.back() == 0) {
            limbs.pop_back();
        }
    }
};

int cmp(const BigUint& a, const BigUint& b) {
    if (a.limbs.size() != b.limbs.size()) {
        return a.limbs.size() < b.limbs.size() ? -1 : 1;
    }
    for (std::size_t i = a.limbs.size(); i-- > 0;) {
        if (a.limbs[i] != b.limbs[i]) {
            return a.limbs[i] < b.limbs[i] ? -1 : 1;
        }
    }
    return 0;
}

BigUint add(const BigUint& a, const BigUint& b) {
    BigUint out;
    const std::size_t n = std::max(a.limbs.size(), b.limbs.size());
    out.limbs.reserve(n + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry;
        if (i < a.limbs.size()) s += a.limbs[i];
        if (i < b.limbs.size()) s += b.limbs[i];
        out.limbs.push_back(static_cast<std::uint32_t>(s));
        carry = s >> 32;
    }
    if (carry) {
        out.limbs.push_back(static_cast<std::uint32_t>(carry));
    }
    return out;
}

// a - b, requires a >= b.
BigUint sub(const BigUint& a, const BigUint& b) {
    BigUint out;
    out.limbs.reserve(a.limbs.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a.limbs[i]) - borrow -
                         (i < b.limbs.size() ? static_cast<std::int64_t>(b.limbs[i]) : 0);
        borrow = d < 0 ? 1 : 0;
        if (borrow) {
            d += (std::int64_t{1} << 32);
        }
        out.limbs.push_back(static_cast<std::uint32_t>(d));
    }
    out.trim();
    return out;
}

BigUint mul(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    BigUint out;
    out.limbs.assign(a.limbs.size() + b.limbs.size(), 0);
    for (std::size_t i = 0; i < a.limbs.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs.size(); ++j) {
            std::uint64_t v = static_cast<std::uint64_t>(a.limbs[i]) * b.limbs[j] +
                              out.limbs[i + j] + carry;
            out.limbs[i + j] = static_cast<std::uint32_t>(v);
            carry = v >> 32;
        }
        out.limbs[i + b.limbs.size()] = static_cast<std::uint32_t>(carry);
    }
    out.trim();
    return out;
}

BigUint shr1(const BigUint& a) {
    BigUint out;
    out.limbs.resize(a.limbs.size());
    std::uint32_t carry = 0;
    for (std::size_t i = a.limbs.size(); i-- > 0;) {
        out.limbs[i] = (a.limbs[i] >> 1) | (carry << 31);
        carry = a.limbs[i] & 1u;
    }
    out.trim();
    return out;
}

BigUint from_u32(std::uint32_t v) {
    BigUint out;
    if (v) {
        out.limbs.push_back(v);
    }
    return out;
}

BigUint pow_k(const BigUint& a, unsigned k) {
    const BigUint square = mul(a, a);
    return k == 2 ? square : mul(square, a);
}

BigUint from_decimal(const std::string& text) {
    BigUint out;
    for (const char c : text) {
        // out = out * 10 + digit, fused into one limb pass
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (std::uint32_t& limb : out.limbs) {
            const std::uint64_t v = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(v);
            carry = v >> 32;
        }
        while (carry) {
            out.limbs.push_back(static_cast<std::uint32_t>(carry));
            carry >>= 32;
        }
    }
    out.trim();
    return out;
}

std::string to_decimal(BigUint value) {
    if (value.is_zero()) {
        return "0";
    }
    constexpr std::uint32_t chunk = 1'000'000'000;
    std::vector<std::uint32_t> chunks;
    while (!value.is_zero()) {
        std::uint64_t rem = 0;
        for (std::size_t i = value.limbs.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | value.limbs[i];
            value.limbs[i] = static_cast<std::uint32_t>(cur / chunk);
            rem = cur % chunk;
        }
        value.trim();
        chunks.push_back(static_cast<std::uint32_t>(rem));
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

BigUint to_big(const DecimalNatural& x) { return from_decimal(x.to_string()); }

DecimalNatural to_decimal_natural(const BigUint& v) {
    return DecimalNatural::from_decimal_string(to_decimal(v));
}

struct RootAndRemainder {
    BigUint root;
    BigUint remainder;
};

RootAndRemainder floor_root_big(const BigUint& x, unsigned k) {
    // Binary search for the largest r with r^k <= x, over [0, 10^ceil(d/k)]
    // where d is the decimal digit count of x.
    const std::size_t digits = to_decimal(x).size();
    std::string bound = "1" + std::string((digits + k - 1) / k, '0');
    BigUint lo;
    BigUint hi = from_decimal(bound);
    while (cmp(lo, hi) < 0) {
        const BigUint mid = shr1(add(add(lo, hi), from_u32(1)));
        if (cmp(pow_k(mid, k), x) <= 0) {
            lo = mid;
        } else {
            hi = sub(mid, from_u32(1));
        }
    }
    return {lo, sub(x, pow_k(lo, k))};
}

} // namespace

FloorRoot floor_root(const DecimalNatural& x, RootKind kind) {
    const RootAndRemainder rr = floor_root_big(to_big(x), exponent(kind));
    return {to_decimal_natural(rr.root), to_decimal_natural(rr.remainder)};
}

DecimalNatural power(const DecimalNatural& base, RootKind kind) {
    return to_decimal_natural(pow_k(to_big(base), exponent(kind)));
}

namespace {

bool check_one(const DecimalNatural& x, RootKind kind, VerifyReport& report) {
    const RootResult engine = extract_root(x, kind);
    const FloorRoot truth = floor_root(x, kind);
    report.checked += 1;
    if (engine.root == truth.root && engine.remainder == truth.remainder) {
        return true;
    }
    if (!report.smallest_mismatch || x < report.smallest_mismatch->input) {
        report.smallest_mismatch =
            Mismatch{x, engine.root, engine.remainder, truth.root, truth.remainder};
    }
    return false;
}

} // namespace

VerifyReport verify_range(const DecimalNatural& lo, const DecimalNatural& hi, RootKind kind) {
    if (hi < lo) {
        throw InternalError("verify_range: lo must not exceed hi");
    }
    VerifyReport report;
    const DecimalNatural one = DecimalNatural::from_u64(1);
    for (DecimalNatural x = lo;; x = add(x, one)) {
        if (!check_one(x, kind, report)) {
            return report; // ascending scan, so the first mismatch is smallest
        }
        if (x == hi) {
            return report;
        }
    }
}

VerifyReport verify_random(std::uint64_t count, std::size_t max_digits, RootKind kind,
                           std::uint64_t seed) {
    if (max_digits == 0) {
        throw InternalError("verify_random: max_digits must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> length_dist(1, max_digits);
    std::uniform_int_distribution<int> lead_dist(1, 9);
    std::uniform_int_distribution<int> digit_dist(0, 9);

    VerifyReport report;
    for (std::uint64_t n = 0; n < count; ++n) {
        const std::size_t length = length_dist(rng);
        std::string text(1, static_cast<char>('0' + lead_dist(rng)));
        for (std::size_t j = 1; j < length; ++j) {
            text.push_back(static_cast<char>('0' + digit_dist(rng)));
        }
        check_one(DecimalNatural::from_decimal_string(text), kind, report);
    }
    return report;
}

} // namespace digitroot::oracle
