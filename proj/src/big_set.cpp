#include "setbits/big_set.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace setbits {

unsigned BigSet::checked_universe(unsigned m) {
    if (m < 1)
        throw std::invalid_argument("universe size must be at least 1");
    return m;
}

void BigSet::check_element(unsigned k) const {
    if (k < 1 || k > universe_)
        throw std::out_of_range("element " + std::to_string(k) + " out of universe [1," +
                                std::to_string(universe_) + "]");
}

void BigSet::check_universes(const BigSet& a, const BigSet& b) {
    if (a.universe_ != b.universe_)
        throw std::invalid_argument("universe mismatch: " + std::to_string(a.universe_) +
                                    " vs " + std::to_string(b.universe_));
}

BigSet BigSet::empty(unsigned m) {
    checked_universe(m);
    return BigSet(std::vector<Word>(word_count(m), 0), m);
}

BigSet BigSet::full(unsigned m) {
    checked_universe(m);
    std::vector<Word> words(word_count(m), ~Word{0});
    const unsigned tail = m % kWordBits;
    if (tail != 0)
        words.back() = (Word{1} << tail) - 1;
    return BigSet(std::move(words), m);
}

BigSet BigSet::singleton(unsigned a, unsigned m) {
    BigSet s = empty(m);
    return s.insert(a);
}

BigSet BigSet::encode(std::span<const unsigned> elements, unsigned m) {
    BigSet s = empty(m);
    for (unsigned e : elements) {
        s.check_element(e);
        s.words_[(e - 1) / kWordBits] |= Word{1} << ((e - 1) % kWordBits);
    }
    return s;
}

BigSet BigSet::encode(std::initializer_list<unsigned> elements, unsigned m) {
    return encode(std::span<const unsigned>(elements.begin(), elements.size()), m);
}

BigSet BigSet::from_small(const SmallSet& s) {
    return BigSet({s.code()}, s.universe_size());
}

BigSet BigSet::from_words(std::vector<Word> words, unsigned m) {
    checked_universe(m);
    if (words.size() != word_count(m))
        throw std::invalid_argument("expected " + std::to_string(word_count(m)) +
                                    " words for universe " + std::to_string(m) + ", got " +
                                    std::to_string(words.size()));
    const unsigned tail = m % kWordBits;
    if (tail != 0 && (words.back() & ~((Word{1} << tail) - 1)))
        throw std::out_of_range("code has bits beyond universe " + std::to_string(m));
    return BigSet(std::move(words), m);
}

BigSet BigSet::from_code_decimal(std::string_view decimal, unsigned m) {
    checked_universe(m);
    if (decimal.empty())
        throw std::invalid_argument("empty decimal code");
    std::vector<Word> words(word_count(m), 0);
    bool overflow = false;
    for (char c : decimal) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string("invalid character '") + c +
                                        "' in decimal code");
        // words = words * 10 + digit, with carry
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (Word& w : words) {
            std::uint64_t cur = std::uint64_t{w} * 10 + carry;
            w = static_cast<Word>(cur);
            carry = cur >> kWordBits;
        }
        if (carry != 0)
            overflow = true;
    }
    const unsigned tail = m % kWordBits;
    if (overflow || (tail != 0 && (words.back() & ~((Word{1} << tail) - 1))))
        throw std::out_of_range("code " + std::string(decimal) + " out of range for universe " +
                                std::to_string(m));
    return BigSet(std::move(words), m);
}

BigSet BigSet::from_words_hex(std::string_view hex, unsigned m) {
    checked_universe(m);
    std::vector<Word> words;
    std::size_t start = 0;
    while (start <= hex.size()) {
        std::size_t colon = hex.find(':', start);
        std::string_view group =
            hex.substr(start, colon == std::string_view::npos ? hex.size() - start : colon - start);
        if (group.empty() || group.size() > 8)
            throw std::invalid_argument("bad hex word group in \"" + std::string(hex) + "\"");
        Word w = 0;
        for (char c : group) {
            int digit;
            if (c >= '0' && c <= '9')
                digit = c - '0';
            else if (c >= 'a' && c <= 'f')
                digit = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                digit = c - 'A' + 10;
            else
                throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
            w = (w << 4) | static_cast<Word>(digit);
        }
        words.push_back(w);
        if (colon == std::string_view::npos)
            break;
        start = colon + 1;
    }
    return from_words(std::move(words), m);
}

std::vector<unsigned> BigSet::decode() const {
    std::vector<unsigned> out;
    out.reserve(cardinality());
    for (std::size_t t = 0; t < words_.size(); ++t) {
        for (Word w = words_[t]; w != 0; w &= w - 1) {
            unsigned bit = static_cast<unsigned>(std::countr_zero(w));
            out.push_back(static_cast<unsigned>(t * kWordBits) + bit + 1);
        }
    }
    return out;
}

bool BigSet::contains(unsigned k) const {
    check_element(k);
    return (words_[(k - 1) / kWordBits] >> ((k - 1) % kWordBits)) & 1u;
}

unsigned BigSet::cardinality() const {
    unsigned total = 0;
    for (Word w : words_)
        total += static_cast<unsigned>(std::popcount(w));
    return total;
}

BigSet BigSet::complement() const {
    std::vector<Word> words(words_.size());
    for (std::size_t t = 0; t < words_.size(); ++t)
        words[t] = ~words_[t];
    const unsigned tail = universe_ % kWordBits;
    if (tail != 0)
        words.back() &= (Word{1} << tail) - 1;
    return BigSet(std::move(words), universe_);
}

BigSet BigSet::insert(unsigned k) const {
    check_element(k);
    BigSet s = *this;
    s.words_[(k - 1) / kWordBits] |= Word{1} << ((k - 1) % kWordBits);
    return s;
}

BigSet BigSet::remove(unsigned k) const {
    check_element(k);
    BigSet s = *this;
    Word& w = s.words_[(k - 1) / kWordBits];
    Word temp = w ^ (Word{1} << ((k - 1) % kWordBits));
    w &= temp;
    return s;
}

SmallSet BigSet::to_small() const {
    if (universe_ > kWordBits)
        throw std::domain_error("universe " + std::to_string(universe_) +
                                " does not fit a single word");
    return SmallSet::from_code(words_[0], universe_);
}

std::string BigSet::to_string() const {
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

std::string BigSet::code_decimal() const {
    std::vector<Word> words = words_;
    std::string digits;
    bool all_zero = false;
    while (!all_zero) {
        // words /= 10, collecting the remainder; most significant word first.
        std::uint64_t rem = 0;
        all_zero = true;
        for (std::size_t t = words.size(); t-- > 0;) {
            std::uint64_t cur = (rem << kWordBits) | words[t];
            words[t] = static_cast<Word>(cur / 10);
            rem = cur % 10;
            if (words[t] != 0)
                all_zero = false;
        }
        digits.push_back(static_cast<char>('0' + rem));
    }
    std::reverse(digits.begin(), digits.end());
    // strip the leading zeros a short value leaves behind
    const std::size_t first = digits.find_first_not_of('0');
    return first == std::string::npos ? "0" : digits.substr(first);
}

std::string BigSet::words_hex() const {
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (std::size_t t = 0; t < words_.size(); ++t) {
        if (t != 0)
            out += ':';
        for (int shift = 28; shift >= 0; shift -= 4)
            out += hex[(words_[t] >> shift) & 0xF];
    }
    return out;
}

std::string BigSet::binary() const {
    std::string out(universe_, '0');
    for (unsigned e : decode())
        out[universe_ - e] = '1';
    return out;
}

BigSet operator*(const BigSet& a, const BigSet& b) {
    BigSet::check_universes(a, b);
    BigSet s = a;
    for (std::size_t t = 0; t < s.words_.size(); ++t)
        s.words_[t] &= b.words_[t];
    return s;
}

BigSet operator+(const BigSet& a, const BigSet& b) {
    BigSet::check_universes(a, b);
    BigSet s = a;
    for (std::size_t t = 0; t < s.words_.size(); ++t)
        s.words_[t] |= b.words_[t];
    return s;
}

BigSet operator-(const BigSet& a, const BigSet& b) {
    BigSet::check_universes(a, b);
    BigSet s = a;
    for (std::size_t t = 0; t < s.words_.size(); ++t) {
        Word temp = s.words_[t] ^ b.words_[t];
        s.words_[t] &= temp;
    }
    return s;
}

bool operator>=(const BigSet& a, const BigSet& b) {
    BigSet::check_universes(a, b);
    for (std::size_t t = 0; t < a.words_.size(); ++t)
        if ((a.words_[t] | b.words_[t]) != a.words_[t])
            return false;
    return true;
}

bool operator<=(const BigSet& a, const BigSet& b) {
    BigSet::check_universes(a, b);
    for (std::size_t t = 0; t < a.words_.size(); ++t)
        if ((a.words_[t] | b.words_[t]) != b.words_[t])
            return false;
    return true;
}

bool operator==(const BigSet& a, const BigSet& b) {
    BigSet::check_universes(a, b);
    for (std::size_t t = 0; t < a.words_.size(); ++t)
        if ((a.words_[t] ^ b.words_[t]) != 0)
            return false;
    return true;
}

}  // namespace setbits
