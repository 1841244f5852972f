#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace setbits {

/// Unsigned machine word; the atom of every set encoding in this library.
using Word = std::uint32_t;

/// Signed 32-bit word in two's complement.
using SignedWord = std::int32_t;

inline constexpr unsigned kWordBits = 32;

namespace detail {

inline void check_shift(unsigned k) {
    if (k >= kWordBits)
        throw std::domain_error("shift count " + std::to_string(k) + " exceeds word width 32");
}

// |x| is unrepresentable for the most negative value; callers that strip the
// sign must reject it explicitly instead of wrapping.
inline void check_abs_representable(SignedWord x) {
    if (x == std::numeric_limits<SignedWord>::min())
        throw std::domain_error("absolute value of -2^31 is not representable in 32 bits");
}

}  // namespace detail

// Value of bit i (0-based, counted right to left) of the two's-complement
// representation of x.
inline int bit_value(SignedWord x, unsigned i) {
    if (i >= kWordBits)
        throw std::out_of_range("bit index " + std::to_string(i) + " out of range [0,31]");
    return static_cast<int>((static_cast<Word>(x) >> i) & 1u);
}

/// 2^n for n in [0,31].
inline Word pow2(unsigned n) {
    if (n >= kWordBits)
        throw std::domain_error("pow2 exponent " + std::to_string(n) + " out of range [0,31]");
    return Word{1} << n;
}

// x / 2^n truncated toward zero: the sign is stripped, the magnitude is
// shifted, and the sign is restored.
inline SignedWord div_pow2(SignedWord x, unsigned n) {
    detail::check_shift(n);
    detail::check_abs_representable(x);
    SignedWord sign = x < 0 ? -1 : 1;
    x *= sign;
    return (x >> n) * sign;
}

/// x * 2^k mod 2^32: bits move left, the low k bits become zero.
inline Word shl(Word x, unsigned k) {
    detail::check_shift(k);
    return x << k;
}

/// Logical right shift: the vacated high bits are filled with zeros.
inline Word shr_logical(Word x, unsigned k) {
    detail::check_shift(k);
    return x >> k;
}

/// Arithmetic right shift: the vacated high bits copy the sign bit,
/// so the result equals floor(x / 2^k).
inline SignedWord shr_arithmetic(SignedWord x, unsigned k) {
    detail::check_shift(k);
    Word u = static_cast<Word>(x) >> k;
    if (x < 0 && k > 0)
        u |= ~Word{0} << (kWordBits - k);
    return static_cast<SignedWord>(u);
}

/// Two's-complement representation of x as exactly `width` characters of
/// '0'/'1', most significant bit first. Width must be 8, 16 or 32.
inline std::string twos_complement_repr(SignedWord x, unsigned width) {
    if (width != 8 && width != 16 && width != 32)
        throw std::domain_error("representation width must be 8, 16 or 32");
    const std::int64_t lo = -(std::int64_t{1} << (width - 1));
    const std::int64_t hi = (std::int64_t{1} << (width - 1)) - 1;
    if (x < lo || x > hi)
        throw std::out_of_range(std::to_string(x) + " is not representable in " +
                                std::to_string(width) + " bits");
    std::string out(width, '0');
    const Word bits = static_cast<Word>(x);
    for (unsigned i = 0; i < width; ++i)
        if ((bits >> i) & 1u)
            out[width - 1 - i] = '1';
    return out;
}

/// Minimal binary notation: optional '-' for negative x, then the digits of
/// |x| with no leading zeros; zero prints as "0".
inline std::string min_binary_repr(SignedWord x) {
    detail::check_abs_representable(x);
    if (x == 0)
        return "0";
    std::string out;
    if (x < 0)
        out.push_back('-');
    const Word mag = static_cast<Word>(x < 0 ? -x : x);
    for (int d = 31 - std::countl_zero(mag); d >= 0; --d)
        out.push_back(((mag >> d) & 1u) ? '1' : '0');
    return out;
}

/// Number of set bits in the binary representation of |x|.
inline int popcount(SignedWord x) {
    detail::check_abs_representable(x);
    return std::popcount(static_cast<Word>(x < 0 ? -x : x));
}

}  // namespace setbits
