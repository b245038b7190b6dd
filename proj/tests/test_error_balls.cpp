#include <gtest/gtest.h>

#include <algorithm>

#include "delsub/error_balls.hpp"
#include "oracle/oracle.hpp"

using namespace delsub;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

oracle::Set as_set(const BallSet& b) {
    const auto v = b.strings();
    return {v.begin(), v.end()};
}

std::vector<std::string> strings(std::initializer_list<const char*> l) { return {l.begin(), l.end()}; }

}  // namespace

TEST(BallSet, SortedDeduplicatedAndSetAlgebra) {
    const BallSet a(3, {5, 1, 5, 3});
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(a.strings(), strings({"001", "011", "101"}));
    const BallSet b(3, {3, 7});
    EXPECT_EQ(intersect(a, b).strings(), strings({"011"}));
    EXPECT_EQ(unite(a, b).size(), 4u);
    EXPECT_EQ(subtract(a, b).strings(), strings({"001", "101"}));
    EXPECT_EQ(intersection_size(a, b), 1u);
    EXPECT_TRUE(a.contains(W("101")));
    EXPECT_FALSE(a.contains(W("111")));
}

TEST(Balls, DeletionExamples) {
    EXPECT_EQ(deletion_ball(W("000")).strings(), strings({"00"}));
    EXPECT_EQ(deletion_ball(W("0110")).strings(), strings({"010", "011", "110"}));
    EXPECT_EQ(deletion_ball(W("0101")).size(), 4u);
    EXPECT_THROW(deletion_ball(W("")), Error);
}

TEST(Balls, SubstitutionExamples) {
    EXPECT_EQ(substitution_ball(W("0")).strings(), strings({"0", "1"}));
    EXPECT_EQ(substitution_ball(W("01")).strings(), strings({"00", "01", "11"}));
    EXPECT_EQ(substitution_ball(W("010011010110")).size(), 13u);
}

TEST(Balls, DsExamples) {
    EXPECT_EQ(ds_ball(W("00")).strings(), strings({"0", "1"}));
    EXPECT_EQ(ds_ball(W("010")).strings(), strings({"00", "01", "10", "11"}));
    EXPECT_EQ(ds_ball(W("0000")), substitution_ball(W("000")));
}

TEST(Balls, ApplyDelSubExamples) {
    EXPECT_EQ(apply_del_sub(W("0110"), 1, 2), W("100"));
    EXPECT_EQ(apply_del_sub(W("0110"), 4, std::nullopt), W("011"));
    EXPECT_EQ(apply_del_sub(W("00"), 2, 1), W("1"));
    EXPECT_THROW(apply_del_sub(W("0110"), 5, std::nullopt), Error);
    EXPECT_THROW(apply_del_sub(W("0110"), 1, 4), Error);
}

TEST(Balls, IntersectionExamples) {
    EXPECT_EQ(ball_intersection(W("0110"), W("1010"), BallKind::Del).strings(), strings({"010", "110"}));
    EXPECT_EQ(ball_intersection(W("0110"), W("1010"), BallKind::Sub).strings(), strings({"0010", "1110"}));
    EXPECT_TRUE(ball_intersection(W("0011"), W("1100"), BallKind::Sub).empty());
    EXPECT_THROW(ball_intersection(W("0110"), W("0110"), BallKind::DS), Error);
}

TEST(Balls, AgreeWithOracle) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& s : oracle::all_words(n)) {
            const Word x = W(s);
            ASSERT_EQ(as_set(deletion_ball(x)), oracle::del_ball(s)) << s;
            ASSERT_EQ(as_set(substitution_ball(x)), oracle::sub_ball(s)) << s;
            ASSERT_EQ(as_set(ds_ball(x)), oracle::ds_ball(s)) << s;
        }
}

TEST(Balls, SizesMatchRunsAndLength) {
    for (int n = 1; n <= 12; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word x(n, v);
            ASSERT_EQ(deletion_ball(x).size(), static_cast<std::size_t>(run_count(x)));
            ASSERT_EQ(substitution_ball(x).size(), static_cast<std::size_t>(n + 1));
            ASSERT_LE(ds_ball(x).size(), static_cast<std::size_t>(run_count(x) * n));
        }
}

TEST(Balls, DeletionsByRunAreSpacedByRunIndex) {
    for (int n = 1; n <= 10; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const auto d = deletions_by_run(Word(n, v));
            for (std::size_t i = 0; i < d.size(); ++i)
                for (std::size_t j = i + 1; j < d.size(); ++j)
                    ASSERT_EQ(hamming_distance(d[i], d[j]), static_cast<int>(j - i));
        }
}

TEST(Classify, Examples) {
    PairClassification c = classify_pair(W("0110"), W("1010"));
    EXPECT_EQ(c.d, 2);
    EXPECT_EQ(c.s, 2);
    EXPECT_EQ(c.case_tag, CaseTag::AdjacentTransposition);
    EXPECT_TRUE(c.a.empty());
    EXPECT_EQ(c.alpha, 0);
    EXPECT_EQ(c.b, W("10"));

    c = classify_pair(W("0000"), W("0100"));
    EXPECT_EQ(c.d, 1);
    EXPECT_EQ(c.s, 2);
    EXPECT_EQ(c.case_tag, CaseTag::SingleFlip);

    c = classify_pair(W("0011"), W("1100"));
    EXPECT_EQ(c.d, 0);
    EXPECT_EQ(c.s, 0);
    EXPECT_EQ(c.case_tag, CaseTag::Generic);

    EXPECT_THROW(classify_pair(W("01"), W("01")), Error);
}

TEST(Classify, MatchesDirectIntersectionsAndRoundTrips) {
    for (int n = 1; n <= 8; ++n) {
        const auto words = oracle::all_words(n);
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                const auto& sx = words[i];
                const auto& sy = words[j];
                const PairClassification c = classify_pair(W(sx), W(sy));
                const int d = static_cast<int>(oracle::meet(oracle::del_ball(sx), oracle::del_ball(sy)).size());
                const int s = static_cast<int>(oracle::meet(oracle::sub_ball(sx), oracle::sub_ball(sy)).size());
                ASSERT_EQ(c.d, d) << sx << " " << sy;
                ASSERT_EQ(c.s, s) << sx << " " << sy;
                ASSERT_TRUE(d <= 2 && (s == 0 || s == 2));
                ASSERT_TRUE(c.shape_matches) << sx << " " << sy;
                const auto [rx, ry] = reconstruct_pair(c);
                ASSERT_EQ(rx.str(), sx);
                ASSERT_EQ(ry.str(), sy);

                const int dh = oracle::hamming(sx, sy);
                CaseTag expected = CaseTag::Generic;
                if (d == 2 && s == 2) expected = CaseTag::AdjacentTransposition;
                else if (d == 1 && s == 2) expected = dh == 1 ? CaseTag::SingleFlip : CaseTag::RunShift;
                else if (d == 2) expected = CaseTag::AlternatingBlock;
                else if (s == 2) expected = CaseTag::TwoFlips;
                else if (d == 1) expected = CaseTag::ShiftedPair;
                ASSERT_EQ(c.case_tag, expected) << sx << " " << sy;
            }
    }
}

TEST(Decompose, Examples) {
    IntersectionDecomposition d = decompose_intersection(W("0110"), W("1010"));
    EXPECT_EQ(d.size_S, 6u);
    EXPECT_EQ(d.size_D, 5u);
    EXPECT_EQ(d.size_overlap, 4u);
    EXPECT_EQ(d.size_B_extra, 0u);
    EXPECT_EQ(d.total, 7u);
    EXPECT_EQ(decompose_intersection(W("010101"), W("100101")).total, 15u);
    d = decompose_intersection(W("00000000"), W("11111111"));
    EXPECT_EQ(d.total + d.size_S + d.size_D + d.size_overlap + d.size_B_extra, 0u);
}

TEST(Decompose, AgreesWithOracleAndIdentity) {
    for (int n = 1; n <= 7; ++n) {
        const auto words = oracle::all_words(n);
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                const auto& sx = words[i];
                const auto& sy = words[j];
                const DecompositionSets sets = decompose_sets(W(sx), W(sy));
                const oracle::Decomposition ref = oracle::decompose(sx, sy);
                ASSERT_EQ(as_set(sets.S), ref.S);
                ASSERT_EQ(as_set(sets.D), ref.D);
                ASSERT_EQ(as_set(sets.B), ref.B);
                ASSERT_EQ(as_set(sets.B_extra), ref.B_extra);
                const IntersectionDecomposition d = decompose_intersection(W(sx), W(sy));
                ASSERT_EQ(d.total, d.size_B_extra + d.size_D + d.size_S - d.size_overlap);
                ASSERT_EQ(d.total, ref.B.size());
            }
    }
}

TEST(Witnesses, Examples) {
    using V = std::vector<Witness>;
    auto sorted = [](V v) {
        std::sort(v.begin(), v.end(), [](const Witness& a, const Witness& b) {
            return std::pair(a.del_pos, a.sub_pos.value_or(0)) < std::pair(b.del_pos, b.sub_pos.value_or(0));
        });
        return v;
    };
    EXPECT_EQ(sorted(witnesses(W("00"), W("1"))), sorted(V{{1, 1}, {2, 1}}));
    EXPECT_EQ(sorted(witnesses(W("00"), W("0"))), sorted(V{{1, std::nullopt}, {2, std::nullopt}}));
    EXPECT_EQ(sorted(witnesses(W("010"), W("00"))), sorted(V{{1, 1}, {2, std::nullopt}, {3, 2}}));
    EXPECT_THROW(witnesses(W("010"), W("0")), Error);
}

TEST(Witnesses, AgreeWithOracle) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& sx : oracle::all_words(n))
            for (const auto& sz : oracle::all_words(n - 1)) {
                std::vector<std::pair<int, int>> got;
                for (const Witness& w : witnesses(W(sx), W(sz))) {
                    ASSERT_EQ(apply_del_sub(W(sx), w.del_pos, w.sub_pos).str(), sz);
                    got.emplace_back(w.del_pos, w.sub_pos.value_or(0));
                }
                std::sort(got.begin(), got.end());
                ASSERT_EQ(got, oracle::witnesses(sx, sz)) << sx << " " << sz;
            }
}

TEST(BadTest, RequiresCommonElement) {
    EXPECT_THROW(is_bad(W("0000"), W("1111"), W("000")), Error);
}

TEST(BadTest, AgreesWithOracleUnderEveryConvention) {
    const int n = 6;
    const auto words = oracle::all_words(n);
    for (bool pre : {true, false})
        for (bool none_inside : {true, false}) {
            const WitnessConvention conv{pre ? FlipIndex::PreDeletion : FlipIndex::PostDeletion, none_inside};
            for (std::size_t i = 0; i < words.size(); i += 3)
                for (std::size_t j = i + 1; j < words.size(); j += 2)
                    for (const auto& z : oracle::meet(oracle::ds_ball(words[i]), oracle::ds_ball(words[j])))
                        ASSERT_EQ(is_bad(W(words[i]), W(words[j]), W(z), conv),
                                  oracle::is_bad(words[i], words[j], z, pre, none_inside))
                            << words[i] << " " << words[j] << " " << z;
        }
}

TEST(BadTest, GenericPairsHaveGoodAndBadElements) {
    // scan for concrete (0,0) pairs illustrating both outcomes
    bool seen_good = false, seen_bad = false;
    const auto words = oracle::all_words(6);
    for (std::size_t i = 0; i < words.size() && !(seen_good && seen_bad); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const Word x = W(words[i]), y = W(words[j]);
            if (classify_pair(x, y).case_tag != CaseTag::Generic) continue;
            for (Word z : ball_intersection(x, y, BallKind::DS)) (is_bad(x, y, z) ? seen_bad : seen_good) = true;
        }
    EXPECT_TRUE(seen_good);
    EXPECT_TRUE(seen_bad);
}

TEST(Preimage, Examples) {
    const BallSet p = preimage_ball(W("00"), 3);
    EXPECT_EQ(p.size(), 7u);
    EXPECT_FALSE(p.contains(W("111")));
    EXPECT_EQ(preimage_ball(W("0"), 2).size(), 4u);
    EXPECT_THROW(preimage_ball(W("00"), 4), Error);
}

TEST(Preimage, DualToBallMembership) {
    for (int n = 2; n <= 10; ++n) {
        std::vector<BallSet> balls;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) balls.push_back(ds_ball(Word(n, v)));
        for (std::uint64_t zv = 0; zv < (std::uint64_t{1} << (n - 1)); ++zv) {
            const Word z(n - 1, zv);
            const BallSet pre = preimage_ball(z, n);
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
                ASSERT_EQ(pre.contains(Word(n, v)), balls[v].contains(z));
        }
    }
    EXPECT_EQ(as_set(preimage_ball(W("0110"), 5)), oracle::preimage("0110"));
}

TEST(Constrained, Examples) {
    EXPECT_EQ(constrained_deletion_matches(W("00"), W("010")).strings(), strings({"00", "01", "10"}));
    EXPECT_TRUE(constrained_deletion_matches(W("11"), W("000")).empty());
    EXPECT_EQ(constrained_deletion_matches(W("0"), W("01")).strings(), strings({"0", "1"}));
    EXPECT_THROW(constrained_deletion_matches(W("0"), W("0")), Error);
}

TEST(Constrained, AtMostThreeAndContainsU) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& u : oracle::all_words(n))
            for (const auto& v : oracle::all_words(n + 1)) {
                const BallSet f = constrained_deletion_matches(W(u), W(v));
                ASSERT_EQ(as_set(f), oracle::constrained(u, v));
                ASSERT_LE(f.size(), 3u);
                if (f.size() == 3) ASSERT_TRUE(f.contains(W(u)));
            }
}
