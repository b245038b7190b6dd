#include <gtest/gtest.h>

#include <set>

#include "delsub/sequences.hpp"
#include "oracle/oracle.hpp"

using namespace delsub;

namespace {

Word W(const char* s) { return Word::parse(s); }

}  // namespace

TEST(Word, ParseFormatRoundTrip) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& s : oracle::all_words(n)) EXPECT_EQ(Word::parse(s).str(), s);
    const std::string long_word(64, '1');
    EXPECT_EQ(Word::parse(long_word).str(), long_word);
    EXPECT_EQ(Word::parse("").size(), 0);
}

TEST(Word, NumericOrderIsLexicographic) {
    const auto words = oracle::all_words(6);
    for (std::size_t i = 1; i < words.size(); ++i) EXPECT_LT(W(words[i - 1].c_str()), W(words[i].c_str()));
    EXPECT_EQ(W("0110").value(), 6u);
}

TEST(Word, RejectsBadText) {
    EXPECT_THROW(Word::parse("01a"), Error);
    EXPECT_THROW(Word::parse(std::string(65, '0')), Error);
}

TEST(Sequences, RunExamples) {
    EXPECT_EQ(runs(W("0000")).run_count, 1);
    const RunProfile p = runs(W("0110"));
    EXPECT_EQ(p.run_count, 3);
    const std::vector<delsub::Run> expected{{1, 0, 1}, {2, 1, 2}, {4, 0, 1}};
    EXPECT_EQ(p.boundaries, expected);
    EXPECT_EQ(runs(W("0101")).run_count, 4);
    EXPECT_EQ(run_count(W("")), 0);
}

TEST(Sequences, WeightComplementReverseExamples) {
    EXPECT_EQ(weight(W("0110")), 2);
    EXPECT_EQ(complement(W("010")), W("101"));
    EXPECT_EQ(reverse(W("001")), W("100"));
}

TEST(Sequences, SyndromeExamples) {
    EXPECT_EQ(vt_syndrome(W("0000"), 1), 0);
    EXPECT_EQ(vt_syndrome(W("0101"), 1), 6);
    EXPECT_EQ(vt_syndrome(W("0101"), 2), 13);
    EXPECT_THROW(vt_syndrome(W("0101"), 3), Error);
}

TEST(Sequences, InversionExamples) {
    EXPECT_EQ(inversion_number(W("000")), 0);
    EXPECT_EQ(inversion_number(W("10")), 1);
    EXPECT_EQ(inversion_number(W("1100")), 4);
}

TEST(Sequences, PsiExamples) {
    EXPECT_EQ(psi(W("0000")), W("0000"));
    EXPECT_EQ(psi(W("0110")), W("0101"));
    EXPECT_EQ(psi_inverse(W("1000")), W("1111"));
}

TEST(Sequences, AffixExamples) {
    AffixDecomposition d = common_affixes(W("0110"), W("1010"));
    EXPECT_EQ(d.prefix, W(""));
    EXPECT_EQ(d.suffix, W("10"));
    EXPECT_EQ(d.hamming, 2);
    EXPECT_EQ(d.first_diff, 1);
    EXPECT_EQ(d.last_diff, 2);
    d = common_affixes(W("000"), W("010"));
    EXPECT_EQ(d.prefix, W("0"));
    EXPECT_EQ(d.suffix, W("0"));
    EXPECT_EQ(d.hamming, 1);
    d = common_affixes(W("0"), W("1"));
    EXPECT_TRUE(d.prefix.empty() && d.suffix.empty());
    EXPECT_THROW(common_affixes(W("01"), W("01")), Error);
    EXPECT_THROW(common_affixes(W("01"), W("011")), Error);
}

TEST(Sequences, PeriodicWindowExamples) {
    EXPECT_EQ(max_le2_periodic_length(W("000000")), 6);
    EXPECT_EQ(max_le2_periodic_length(W("001011")), 4);
    EXPECT_EQ(max_le2_periodic_length(W("001100")), 2);
    EXPECT_EQ(max_le2_periodic_length(W("1")), 1);
    EXPECT_EQ(max_le2_periodic_length(W("")), 0);
}

TEST(Sequences, AgreesWithOracleExhaustively) {
    for (int n = 0; n <= 10; ++n) {
        for (const auto& s : oracle::all_words(n)) {
            const Word x = Word::parse(s);
            ASSERT_EQ(run_count(x), oracle::run_count(s)) << s;
            ASSERT_EQ(weight(x), oracle::weight(s)) << s;
            ASSERT_EQ(vt_syndrome(x, 1), oracle::vt(s, 1)) << s;
            ASSERT_EQ(vt_syndrome(x, 2), oracle::vt(s, 2)) << s;
            ASSERT_EQ(inversion_number(x), oracle::inversions(s)) << s;
            ASSERT_EQ(psi(x).str(), oracle::psi(s)) << s;
            ASSERT_EQ(psi_inverse(x).str(), oracle::psi_inverse(s)) << s;
            ASSERT_EQ(max_le2_periodic_length(x), oracle::max_le2_periodic(s)) << s;
        }
    }
}

TEST(Sequences, AffixInvariants) {
    const auto words = oracle::all_words(7);
    for (const auto& sx : words)
        for (const auto& sy : words) {
            if (sx == sy) continue;
            const Word x = Word::parse(sx), y = Word::parse(sy);
            const AffixDecomposition d = common_affixes(x, y);
            ASSERT_EQ(d.hamming, oracle::hamming(sx, sy));
            ASSERT_EQ(d.prefix.str(), sx.substr(0, d.first_diff - 1));
            ASSERT_EQ(d.prefix.str(), sy.substr(0, d.first_diff - 1));
            ASSERT_EQ(d.suffix.str(), sx.substr(d.last_diff));
            ASSERT_EQ(d.suffix.str(), sy.substr(d.last_diff));
            ASSERT_LE(d.prefix.size() + d.suffix.size(), 6);
        }
}

TEST(SequencesProperty, RunCountSymmetries) {
    for (int n = 0; n <= 12; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word x(n, v);
            ASSERT_EQ(run_count(complement(x)), run_count(x));
            ASSERT_EQ(run_count(reverse(x)), run_count(x));
        }
}

TEST(SequencesProperty, InversionsOfWordAndReverse) {
    for (int n = 0; n <= 12; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word x(n, v);
            const std::int64_t w = weight(x);
            ASSERT_EQ(inversion_number(x) + inversion_number(reverse(x)), w * (n - w));
        }
}

TEST(SequencesProperty, PsiIsABijection) {
    for (int n = 0; n <= 14; ++n) {
        std::vector<bool> hit(std::size_t{1} << n, false);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word x(n, v);
            const Word y = psi(x);
            ASSERT_FALSE(hit[y.value()]);
            hit[y.value()] = true;
            ASSERT_EQ(psi_inverse(y), x);
        }
    }
}

TEST(SequencesProperty, WindowMatchesPsiRuns) {
    // a window [l, r] of length >= 3 is <=2-periodic iff psi is constant on [l+1, r]
    for (int n = 3; n <= 10; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word x(n, v);
            const Word y = psi(x);
            for (int l = 0; l + 2 < n; ++l)
                for (int r = l + 2; r < n; ++r) {
                    bool periodic = true, constant = true;
                    for (int k = l; k + 2 <= r; ++k) periodic = periodic && x[k] == x[k + 2];
                    for (int k = l + 2; k <= r; ++k) constant = constant && y[k] == y[l + 1];
                    ASSERT_EQ(periodic, constant) << x.str() << " [" << l << "," << r << "]";
                }
        }
}

TEST(SequencesProperty, WordOperations) {
    const Word x = W("0110");
    EXPECT_EQ(x.erased(0), W("110"));
    EXPECT_EQ(x.flipped(3), W("0111"));
    EXPECT_EQ(x.inserted(4, 1), W("01101"));
    EXPECT_EQ(x.slice(1, 2), W("11"));
    EXPECT_EQ(W("01") + W("10"), x);
    EXPECT_EQ(hamming_distance(W("0110"), W("1010")), 2);
}
