#pragma once

#include <cstdint>
#include <vector>

#include "delsub/word.hpp"

namespace delsub {

struct Run {
    int start;   // 1-based
    int symbol;
    int length;

    friend bool operator==(const Run&, const Run&) = default;
};

struct RunProfile {
    int run_count = 0;
    std::vector<Run> boundaries;
};

RunProfile runs(const Word& x);
int run_count(const Word& x) noexcept;

inline int weight(const Word& x) noexcept { return x.weight(); }
inline Word complement(const Word& x) { return x.complemented(); }
inline Word reverse(const Word& x) { return x.reversed(); }

// Sum of w_k(i) x_i with w_1(i) = i and w_2(i) = i(i+1)/2, no modulus.
std::int64_t vt_syndrome(const Word& x, int k);
std::int64_t inversion_number(const Word& x) noexcept;

Word psi(const Word& x);
Word psi_inverse(const Word& y);

struct AffixDecomposition {
    Word prefix;
    Word suffix;
    int hamming = 0;
    int first_diff = 0;  // j_1, 1-based
    int last_diff = 0;   // j_{d_H}, 1-based
};

AffixDecomposition common_affixes(const Word& x, const Word& y);

// Longest window in which every symbol equals the one two places later.
int max_le2_periodic_length(const Word& x) noexcept;

}  // namespace delsub
