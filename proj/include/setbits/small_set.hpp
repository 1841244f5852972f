#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "setbits/bit_ops.hpp"

namespace setbits {

/// A subset of {1, ..., n} with n <= 32, encoded as a single machine word:
/// bit i-1 of the code is 1 iff element i is in the set. Immutable value
/// type; every operation returns a new set.
///
/// Binary operations require both operands to share the same universe size
/// and throw std::invalid_argument otherwise. Bits at positions >= n are
/// zero by construction, which makes equality-by-XOR sound.
class SmallSet {
public:
    /// Empty set over {1, ..., n}. Code 0.
    static SmallSet empty(unsigned n) { return SmallSet(0, checked_universe(n)); }

    /// Full set over {1, ..., n}. Code 2^n - 1, computed as
    /// ((1 << (n-1)) - 1) * 2 + 1 so that n = 32 does not overflow.
    static SmallSet full(unsigned n) {
        checked_universe(n);
        return SmallSet(((Word{1} << (n - 1)) - 1) * 2 + 1, n);
    }

    /// Singleton {a}. Code 2^(a-1).
    static SmallSet singleton(unsigned a, unsigned n) {
        checked_universe(n);
        check_element(a, n);
        return SmallSet(Word{1} << (a - 1), n);
    }

    /// Set with the given code; requires code < 2^n.
    static SmallSet from_code(Word code, unsigned n) {
        checked_universe(n);
        if (code & ~mask(n))
            throw std::out_of_range("code " + std::to_string(code) +
                                    " out of range for universe " + std::to_string(n));
        return SmallSet(code, n);
    }

    /// Set of the given elements; duplicates are permitted.
    static SmallSet encode(std::span<const unsigned> elements, unsigned n) {
        checked_universe(n);
        Word code = 0;
        for (unsigned e : elements) {
            check_element(e, n);
            code |= Word{1} << (e - 1);
        }
        return SmallSet(code, n);
    }

    static SmallSet encode(std::initializer_list<unsigned> elements, unsigned n) {
        return encode(std::span<const unsigned>(elements.begin(), elements.size()), n);
    }

    Word code() const { return code_; }
    unsigned universe_size() const { return universe_; }

    /// Elements in ascending order.
    std::vector<unsigned> decode() const {
        std::vector<unsigned> out;
        out.reserve(cardinality());
        for (Word w = code_; w != 0; w &= w - 1)
            out.push_back(static_cast<unsigned>(std::countr_zero(w)) + 1);
        return out;
    }

    /// True iff k is an element of the set.
    bool contains(unsigned k) const {
        check_element(k, universe_);
        return (code_ >> (k - 1)) & 1u;
    }

    unsigned cardinality() const { return static_cast<unsigned>(std::popcount(code_)); }

    SmallSet complement() const { return SmallSet(mask(universe_) ^ code_, universe_); }

    SmallSet insert(unsigned k) const {
        check_element(k, universe_);
        return SmallSet(code_ | (Word{1} << (k - 1)), universe_);
    }

    // Clears bit k-1 via XOR-then-AND; if k is absent the set is unchanged.
    SmallSet remove(unsigned k) const {
        check_element(k, universe_);
        Word temp = code_ ^ (Word{1} << (k - 1));
        return SmallSet(code_ & temp, universe_);
    }

    /// Canonical text form: "{2,4,5}"; the empty set prints "{}".
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (unsigned e : decode()) {
            if (!first)
                out += ',';
            out += std::to_string(e);
            first = false;
        }
        out += '}';
        return out;
    }

    // Intersection.
    friend SmallSet operator*(SmallSet a, SmallSet b) {
        check_universes(a, b);
        return SmallSet(a.code_ & b.code_, a.universe_);
    }

    // Union.
    friend SmallSet operator+(SmallSet a, SmallSet b) {
        check_universes(a, b);
        return SmallSet(a.code_ | b.code_, a.universe_);
    }

    friend SmallSet operator+(SmallSet a, unsigned k) { return a.insert(k); }
    friend SmallSet operator+(unsigned k, SmallSet a) { return a.insert(k); }
    friend SmallSet operator-(SmallSet a, unsigned k) { return a.remove(k); }

    // Difference: elements of a not in b, realized as a AND (a XOR b).
    friend SmallSet operator-(SmallSet a, SmallSet b) {
        check_universes(a, b);
        Word temp = a.code_ ^ b.code_;
        return SmallSet(a.code_ & temp, a.universe_);
    }

    // Inclusive containment: a >= a holds.
    friend bool operator>=(SmallSet a, SmallSet b) {
        check_universes(a, b);
        return (a.code_ | b.code_) == a.code_;
    }

    friend bool operator<=(SmallSet a, SmallSet b) {
        check_universes(a, b);
        return (a.code_ | b.code_) == b.code_;
    }

    friend bool operator==(SmallSet a, SmallSet b) {
        check_universes(a, b);
        return (a.code_ ^ b.code_) == 0;
    }

    friend bool operator!=(SmallSet a, SmallSet b) { return !(a == b); }

private:
    SmallSet(Word code, unsigned n) : code_(code), universe_(n) {}

    static Word mask(unsigned n) { return ((Word{1} << (n - 1)) - 1) * 2 + 1; }

    static unsigned checked_universe(unsigned n) {
        if (n < 1 || n > kWordBits)
            throw std::invalid_argument("universe size " + std::to_string(n) +
                                        " out of range [1,32]");
        return n;
    }

    static void check_element(unsigned k, unsigned n) {
        if (k < 1 || k > n)
            throw std::out_of_range("element " + std::to_string(k) +
                                    " out of universe [1," + std::to_string(n) + "]");
    }

    static void check_universes(const SmallSet& a, const SmallSet& b) {
        if (a.universe_ != b.universe_)
            throw std::invalid_argument("universe mismatch: " + std::to_string(a.universe_) +
                                        " vs " + std::to_string(b.universe_));
    }

    Word code_;
    unsigned universe_;
};

}  // namespace setbits
