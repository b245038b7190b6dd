#include "delsub/sequences.hpp"

#include <algorithm>
#include <bit>

namespace delsub {

RunProfile runs(const Word& x) {
    RunProfile p;
    const int n = x.size();
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && x[j + 1] == x[i]) ++j;
        p.boundaries.push_back({i + 1, x[i], j - i + 1});
        i = j + 1;
    }
    p.run_count = static_cast<int>(p.boundaries.size());
    return p;
}

int run_count(const Word& x) noexcept {
    const int n = x.size();
    if (n == 0) return 0;
    // adjacent positions that differ, plus one
    const std::uint64_t v = x.value();
    const std::uint64_t diff = (v ^ (v >> 1)) & low_mask(n - 1);
    return std::popcount(diff) + 1;
}

std::int64_t vt_syndrome(const Word& x, int k) {
    if (k != 1 && k != 2)
        throw Error(ErrorCode::InvalidArgument, "vt_syndrome supports k in {1,2}");
    std::int64_t sum = 0;
    for (int i = 1; i <= x.size(); ++i) {
        if (!x[i - 1]) continue;
        sum += k == 1 ? i : static_cast<std::int64_t>(i) * (i + 1) / 2;
    }
    return sum;
}

std::int64_t inversion_number(const Word& x) noexcept {
    std::int64_t inv = 0;
    std::int64_t ones = 0;
    for (int i = 0; i < x.size(); ++i) {
        if (x[i]) ++ones;
        else inv += ones;
    }
    return inv;
}

Word psi(const Word& x) {
    const std::uint64_t v = x.value();
    return Word(x.size(), v ^ (v >> 1));
}

Word psi_inverse(const Word& y) {
    // prefix XOR from the most significant end
    std::uint64_t v = y.value();
    for (int shift = 1; shift < 64; shift <<= 1) v ^= v >> shift;
    return Word(y.size(), v & low_mask(y.size()));
}

AffixDecomposition common_affixes(const Word& x, const Word& y) {
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch, "common_affixes needs equal lengths");
    if (x == y)
        throw Error(ErrorCode::EqualInputs, "common_affixes needs distinct words");
    const int n = x.size();
    const std::uint64_t diff = x.value() ^ y.value();
    AffixDecomposition d;
    d.hamming = std::popcount(diff);
    // bit n-j holds position j
    d.first_diff = n - (63 - std::countl_zero(diff));
    d.last_diff = n - std::countr_zero(diff);
    d.prefix = x.slice(0, d.first_diff - 1);
    d.suffix = x.slice(d.last_diff, n - d.last_diff);
    return d;
}

int max_le2_periodic_length(const Word& x) noexcept {
    const int n = x.size();
    if (n <= 2) return n;
    int best = 2;
    int len = 2;  // current window ending at position k
    for (int k = 2; k < n; ++k) {
        len = x[k] == x[k - 2] ? len + 1 : 2;
        best = std::max(best, len);
    }
    return best;
}

}  // namespace delsub
