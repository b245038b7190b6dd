#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "delsub/error.hpp"

namespace delsub {

// A binary word of length 0..64. The first symbol is the most significant bit
// of value(), so for equal lengths numeric order is lexicographic order.
// operator[] is 0-based; the position arguments used by the ball functions are
// 1-based.
class Word {
public:
    static constexpr int kMaxLength = 64;

    constexpr Word() = default;
    Word(int length, std::uint64_t value);

    static Word parse(std::string_view text);
    static Word constant(int length, int symbol);

    int size() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }
    std::uint64_t value() const noexcept { return value_; }

    int operator[](int index) const noexcept {
        return static_cast<int>((value_ >> (length_ - 1 - index)) & 1u);
    }

    Word erased(int index) const;
    Word flipped(int index) const;
    Word inserted(int index, int symbol) const;
    Word slice(int begin, int count) const;
    Word complemented() const;
    Word reversed() const;
    int weight() const noexcept;
    std::string str() const;

    friend Word operator+(const Word& lhs, const Word& rhs);
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
        if (auto c = lhs.length_ <=> rhs.length_; c != 0) return c;
        return lhs.value_ <=> rhs.value_;
    }

private:
    int length_ = 0;
    std::uint64_t value_ = 0;
};

int hamming_distance(const Word& x, const Word& y);

std::ostream& operator<<(std::ostream& os, const Word& w);

// all-ones in the low `bits` bits, valid for bits in [0, 64]
constexpr std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace delsub

template <>
struct std::hash<delsub::Word> {
    std::size_t operator()(const delsub::Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.value() * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(w.size()));
    }
};
