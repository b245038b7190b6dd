#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "delsub/word.hpp"

namespace delsub {

// Sorted, duplicate-free set of words sharing one length.
class BallSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Word;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Word;

        const_iterator() = default;
        const_iterator(const std::uint64_t* p, int len) : p_(p), len_(len) {}
        Word operator*() const { return Word(len_, *p_); }
        const_iterator& operator++() { ++p_; return *this; }
        const_iterator operator++(int) { auto t = *this; ++p_; return t; }
        bool operator==(const const_iterator& o) const { return p_ == o.p_; }

    private:
        const std::uint64_t* p_ = nullptr;
        int len_ = 0;
    };

    BallSet() = default;
    explicit BallSet(int word_length) : length_(word_length) {}
    BallSet(int word_length, std::vector<std::uint64_t> codes);

    static BallSet from_words(int word_length, const std::vector<Word>& words);

    int word_length() const noexcept { return length_; }
    std::size_t size() const noexcept { return codes_.size(); }
    bool empty() const noexcept { return codes_.empty(); }
    bool contains(const Word& w) const;
    Word operator[](std::size_t i) const { return Word(length_, codes_[i]); }

    std::span<const std::uint64_t> codes() const noexcept { return codes_; }
    std::vector<Word> words() const;
    std::vector<std::string> strings() const;

    const_iterator begin() const { return {codes_.data(), length_}; }
    const_iterator end() const { return {codes_.data() + codes_.size(), length_}; }

    friend bool operator==(const BallSet&, const BallSet&) = default;

private:
    int length_ = 0;
    std::vector<std::uint64_t> codes_;
};

BallSet intersect(const BallSet& a, const BallSet& b);
BallSet unite(const BallSet& a, const BallSet& b);
BallSet subtract(const BallSet& a, const BallSet& b);
std::size_t intersection_size(const BallSet& a, const BallSet& b);

}  // namespace delsub
