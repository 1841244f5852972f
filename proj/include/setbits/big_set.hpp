#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setbits/bit_ops.hpp"
#include "setbits/small_set.hpp"

namespace setbits {

/// A subset of {1, ..., m} for any m >= 1, stored as ceil(m/32) machine
/// words. Element i lives at bit (i-1) mod 32 of word (i-1) / 32, so word 0
/// holds elements 1..32 and the value of the whole code is
/// sum(words[t] * 2^(32t)). Bits at positions >= m in the last word are kept
/// zero by every operation, including complement.
///
/// Immutable value type with the same operation suite, operator notation and
/// error taxonomy as SmallSet; for m <= 32 the two agree on all operations.
class BigSet {
public:
    static BigSet empty(unsigned m);
    static BigSet full(unsigned m);
    static BigSet singleton(unsigned a, unsigned m);
    static BigSet encode(std::span<const unsigned> elements, unsigned m);
    static BigSet encode(std::initializer_list<unsigned> elements, unsigned m);
    static BigSet from_small(const SmallSet& s);

    /// Set whose words are exactly `words` (length must be ceil(m/32),
    /// trailing bits zero).
    static BigSet from_words(std::vector<Word> words, unsigned m);

    /// Parses the canonical decimal code form; arbitrary precision.
    /// Rejects codes with bits at positions >= m.
    static BigSet from_code_decimal(std::string_view decimal, unsigned m);

    /// Parses the hexadecimal word-list form "w0:w1:...".
    static BigSet from_words_hex(std::string_view hex, unsigned m);

    const std::vector<Word>& words() const { return words_; }
    unsigned universe_size() const { return universe_; }

    std::vector<unsigned> decode() const;
    bool contains(unsigned k) const;
    unsigned cardinality() const;
    BigSet complement() const;
    BigSet insert(unsigned k) const;
    BigSet remove(unsigned k) const;

    /// Conversion to the single-word representation; requires m <= 32.
    SmallSet to_small() const;

    /// Canonical text form: "{2,4,5}"; the empty set prints "{}".
    std::string to_string() const;

    /// Canonical code form: decimal value of sum(words[t] * 2^(32t)).
    std::string code_decimal() const;

    /// Hexadecimal word-list form "w0:w1:...", eight digits per word.
    std::string words_hex() const;

    /// Exactly m binary digits, most significant bit first.
    std::string binary() const;

    friend BigSet operator*(const BigSet& a, const BigSet& b);  // intersection
    friend BigSet operator+(const BigSet& a, const BigSet& b);  // union
    friend BigSet operator+(const BigSet& a, unsigned k) { return a.insert(k); }
    friend BigSet operator+(unsigned k, const BigSet& a) { return a.insert(k); }
    friend BigSet operator-(const BigSet& a, unsigned k) { return a.remove(k); }
    friend BigSet operator-(const BigSet& a, const BigSet& b);  // difference

    // Inclusive containment, word-wise: holds iff it holds for every word.
    friend bool operator>=(const BigSet& a, const BigSet& b);
    friend bool operator<=(const BigSet& a, const BigSet& b);
    friend bool operator==(const BigSet& a, const BigSet& b);
    friend bool operator!=(const BigSet& a, const BigSet& b) { return !(a == b); }

private:
    BigSet(std::vector<Word> words, unsigned m) : words_(std::move(words)), universe_(m) {}

    static std::size_t word_count(unsigned m) { return (std::size_t{m} + kWordBits - 1) / kWordBits; }
    static unsigned checked_universe(unsigned m);
    void check_element(unsigned k) const;
    static void check_universes(const BigSet& a, const BigSet& b);

    std::vector<Word> words_;
    unsigned universe_;
};

}  // namespace setbits
