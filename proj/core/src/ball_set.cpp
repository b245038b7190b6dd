#include "delsub/ball_set.hpp"

#include <algorithm>

namespace delsub {

namespace {

void require_same_length(const BallSet& a, const BallSet& b) {
    if (a.word_length() != b.word_length() && !a.empty() && !b.empty())
        throw Error(ErrorCode::LengthMismatch, "ball sets hold words of different lengths");
}

int merged_length(const BallSet& a, const BallSet& b) {
    return a.empty() ? b.word_length() : a.word_length();
}

}  // namespace

BallSet::BallSet(int word_length, std::vector<std::uint64_t> codes)
    : length_(word_length), codes_(std::move(codes)) {
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

BallSet BallSet::from_words(int word_length, const std::vector<Word>& words) {
    std::vector<std::uint64_t> codes;
    codes.reserve(words.size());
    for (const Word& w : words) {
        if (w.size() != word_length)
            throw Error(ErrorCode::LengthMismatch, "word length differs from set length");
        codes.push_back(w.value());
    }
    return BallSet(word_length, std::move(codes));
}

bool BallSet::contains(const Word& w) const {
    return w.size() == length_ && std::binary_search(codes_.begin(), codes_.end(), w.value());
}

std::vector<Word> BallSet::words() const {
    return {begin(), end()};
}

std::vector<std::string> BallSet::strings() const {
    std::vector<std::string> out;
    out.reserve(codes_.size());
    for (Word w : *this) out.push_back(w.str());
    return out;
}

BallSet intersect(const BallSet& a, const BallSet& b) {
    require_same_length(a, b);
    std::vector<std::uint64_t> out;
    std::set_intersection(a.codes().begin(), a.codes().end(), b.codes().begin(), b.codes().end(),
                          std::back_inserter(out));
    return BallSet(a.word_length(), std::move(out));
}

BallSet unite(const BallSet& a, const BallSet& b) {
    require_same_length(a, b);
    std::vector<std::uint64_t> out;
    std::set_union(a.codes().begin(), a.codes().end(), b.codes().begin(), b.codes().end(),
                   std::back_inserter(out));
    return BallSet(merged_length(a, b), std::move(out));
}

BallSet subtract(const BallSet& a, const BallSet& b) {
    require_same_length(a, b);
    std::vector<std::uint64_t> out;
    std::set_difference(a.codes().begin(), a.codes().end(), b.codes().begin(), b.codes().end(),
                        std::back_inserter(out));
    return BallSet(a.word_length(), std::move(out));
}

std::size_t intersection_size(const BallSet& a, const BallSet& b) {
    require_same_length(a, b);
    std::size_t count = 0;
    auto i = a.codes().begin();
    auto j = b.codes().begin();
    while (i != a.codes().end() && j != b.codes().end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

}  // namespace delsub
