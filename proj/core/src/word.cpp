#include "delsub/word.hpp"

#include <bit>
#include <ostream>

namespace delsub {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
        case ErrorCode::EqualInputs: return "EQUAL_INPUTS";
        case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
        case ErrorCode::EmptyInput: return "EMPTY_INPUT";
        case ErrorCode::NotInBall: return "NOT_IN_BALL";
        case ErrorCode::BallTooSmall: return "BALL_TOO_SMALL";
        case ErrorCode::LimitExceeded: return "LIMIT_EXCEEDED";
        case ErrorCode::ParseError: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

Word::Word(int length, std::uint64_t value) : length_(length), value_(value) {
    if (length < 0 || length > kMaxLength)
        throw Error(ErrorCode::OutOfRange, "word length " + std::to_string(length) + " outside [0,64]");
    if ((value & ~low_mask(length)) != 0)
        throw Error(ErrorCode::InvalidArgument, "value has bits above the word length");
}

Word Word::parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxLength))
        throw Error(ErrorCode::OutOfRange, "word longer than 64 symbols");
    std::uint64_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw Error(ErrorCode::ParseError, "not a binary word: '" + std::string(text) + "'");
        v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return Word(static_cast<int>(text.size()), v);
}

Word Word::constant(int length, int symbol) {
    if (length < 0 || length > kMaxLength)
        throw Error(ErrorCode::OutOfRange, "word length outside [0,64]");
    return Word(length, symbol ? low_mask(length) : 0);
}

Word Word::erased(int index) const {
    if (index < 0 || index >= length_)
        throw Error(ErrorCode::OutOfRange, "erase index out of range");
    const int tail = length_ - 1 - index;
    const std::uint64_t high = index == 0 ? 0 : (value_ >> (tail + 1));
    const std::uint64_t low = value_ & low_mask(tail);
    return Word(length_ - 1, (high << tail) | low);
}

Word Word::flipped(int index) const {
    if (index < 0 || index >= length_)
        throw Error(ErrorCode::OutOfRange, "flip index out of range");
    Word w = *this;
    w.value_ ^= std::uint64_t{1} << (length_ - 1 - index);
    return w;
}

Word Word::inserted(int index, int symbol) const {
    if (index < 0 || index > length_)
        throw Error(ErrorCode::OutOfRange, "insert index out of range");
    if (length_ == kMaxLength)
        throw Error(ErrorCode::OutOfRange, "word would exceed 64 symbols");
    const int tail = length_ - index;
    const std::uint64_t high = tail >= 64 ? 0 : (value_ >> tail);
    const std::uint64_t low = value_ & low_mask(tail);
    std::uint64_t v = (high << 1) | static_cast<std::uint64_t>(symbol & 1);
    v = (v << tail) | low;
    return Word(length_ + 1, v);
}

Word Word::slice(int begin, int count) const {
    if (begin < 0 || count < 0 || begin + count > length_)
        throw Error(ErrorCode::OutOfRange, "slice out of range");
    if (count == 0) return Word();
    const int shift = length_ - begin - count;
    return Word(count, (value_ >> shift) & low_mask(count));
}

Word Word::complemented() const {
    return Word(length_, ~value_ & low_mask(length_));
}

Word Word::reversed() const {
    if (length_ == 0) return *this;
    std::uint64_t v = 0;
    std::uint64_t src = value_;
    for (int i = 0; i < length_; ++i) {
        v = (v << 1) | (src & 1u);
        src >>= 1;
    }
    return Word(length_, v);
}

int Word::weight() const noexcept { return std::popcount(value_); }

std::string Word::str() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i)
        if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Word operator+(const Word& lhs, const Word& rhs) {
    const int len = lhs.length_ + rhs.length_;
    if (len > Word::kMaxLength)
        throw Error(ErrorCode::OutOfRange, "concatenation exceeds 64 symbols");
    const std::uint64_t high = rhs.length_ >= 64 ? 0 : (lhs.value_ << rhs.length_);
    return Word(len, high | rhs.value_);
}

int hamming_distance(const Word& x, const Word& y) {
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch, "hamming distance needs equal lengths");
    return std::popcount(x.value() ^ y.value());
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace delsub
