#include "delsub/error_balls.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace delsub {

namespace {

void require_nonempty(const Word& x, const char* what) {
    if (x.empty()) throw Error(ErrorCode::EmptyInput, std::string(what) + " needs a nonempty word");
}

void require_pair(const Word& x, const Word& y) {
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch, "words have different lengths");
    if (x == y) throw Error(ErrorCode::EqualInputs, "words must be distinct");
}

Word sym(int bit) { return Word(1, static_cast<std::uint64_t>(bit & 1)); }

void push_with_flips(std::vector<std::uint64_t>& out, std::uint64_t v, int len) {
    out.push_back(v);
    for (int k = 0; k < len; ++k) out.push_back(v ^ (std::uint64_t{1} << k));
}

bool is_alternating(const Word& c) { return run_count(c) == c.size(); }

}  // namespace

std::vector<Word> deletions_by_run(const Word& x) {
    require_nonempty(x, "deletion ball");
    std::vector<Word> out;
    for (const Run& r : runs(x).boundaries) out.push_back(x.erased(r.start - 1));
    return out;
}

BallSet deletion_ball(const Word& x) {
    return BallSet::from_words(x.size() - (x.empty() ? 0 : 1), deletions_by_run(x));
}

BallSet substitution_ball(const Word& x) {
    std::vector<std::uint64_t> codes;
    codes.reserve(static_cast<std::size_t>(x.size()) + 1);
    push_with_flips(codes, x.value(), x.size());
    return BallSet(x.size(), std::move(codes));
}

BallSet ds_ball(const Word& x) {
    require_nonempty(x, "ds ball");
    const int n = x.size();
    std::vector<std::uint64_t> codes;
    codes.reserve(static_cast<std::size_t>(run_count(x)) * static_cast<std::size_t>(n));
    for (const Run& r : runs(x).boundaries)
        push_with_flips(codes, x.erased(r.start - 1).value(), n - 1);
    return BallSet(n - 1, std::move(codes));
}

Word apply_del_sub(const Word& x, int i, std::optional<int> sub) {
    const int n = x.size();
    if (i < 1 || i > n)
        throw Error(ErrorCode::OutOfRange, "deletion position " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
    Word w = x.erased(i - 1);
    if (sub) {
        if (*sub < 1 || *sub > n - 1)
            throw Error(ErrorCode::OutOfRange, "substitution position " + std::to_string(*sub) + " outside [1," + std::to_string(n - 1) + "]");
        w = w.flipped(*sub - 1);
    }
    return w;
}

BallSet ball_intersection(const Word& x, const Word& y, BallKind kind) {
    require_pair(x, y);
    switch (kind) {
        case BallKind::Del: return intersect(deletion_ball(x), deletion_ball(y));
        case BallKind::Sub: return intersect(substitution_ball(x), substitution_ball(y));
        case BallKind::DS: return intersect(ds_ball(x), ds_ball(y));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown ball kind");
}

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::AdjacentTransposition: return "ADJACENT_TRANSPOSITION";
        case CaseTag::SingleFlip: return "SINGLE_FLIP";
        case CaseTag::RunShift: return "RUN_SHIFT";
        case CaseTag::AlternatingBlock: return "ALTERNATING_BLOCK";
        case CaseTag::TwoFlips: return "TWO_FLIPS";
        case CaseTag::ShiftedPair: return "SHIFTED_PAIR";
        case CaseTag::Generic: return "GENERIC";
    }
    return "UNKNOWN";
}

std::string_view to_string(FlipIndex index) {
    return index == FlipIndex::PostDeletion ? "post-deletion" : "pre-deletion";
}

PairClassification classify_pair(const Word& x, const Word& y) {
    require_pair(x, y);
    PairClassification c;
    c.d = static_cast<int>(intersection_size(deletion_ball(x), deletion_ball(y)));
    c.s = static_cast<int>(intersection_size(substitution_ball(x), substitution_ball(y)));

    const AffixDecomposition af = common_affixes(x, y);
    c.hamming = af.hamming;
    c.a = af.prefix;
    c.b = af.suffix;
    const int L = af.last_diff - af.first_diff + 1;
    const Word mx = x.slice(af.first_diff - 1, L);
    const Word my = y.slice(af.first_diff - 1, L);
    c.alpha = mx[0];
    c.beta = mx[L - 1];

    const auto inner = [](const Word& w) { return w.size() >= 2 ? w.slice(1, w.size() - 2) : Word(); };

    if (c.d == 2 && c.s == 2) {
        c.case_tag = CaseTag::AdjacentTransposition;
        c.shape_matches = L == 2 && mx[0] != mx[1];
    } else if (c.d == 1 && c.s == 2 && c.hamming == 1) {
        c.case_tag = CaseTag::SingleFlip;
    } else if (c.d == 1 && c.s == 2) {
        c.case_tag = CaseTag::RunShift;
        c.swapped = L >= 2 && mx[0] != mx[1];
        const Word& run_first = c.swapped ? my : mx;
        c.alpha = run_first[0];
        c.ell = L - 1;
        const Word u = Word::constant(c.ell, c.alpha) + sym(1 - c.alpha);
        const Word v = sym(1 - c.alpha) + Word::constant(c.ell, c.alpha);
        c.shape_matches = c.hamming == 2 && c.ell >= 2 &&
                          (c.swapped ? (mx == v && my == u) : (mx == u && my == v));
    } else if (c.d == 2 && c.s == 0) {
        c.case_tag = CaseTag::AlternatingBlock;
        c.c = mx;
        c.shape_matches = L >= 3 && c.hamming == L && is_alternating(mx);
    } else if (c.d == 0 && c.s == 2) {
        c.case_tag = CaseTag::TwoFlips;
        c.c = inner(mx);
        c.shape_matches = c.hamming == 2;
    } else if (c.d == 1 && c.s == 0) {
        c.case_tag = CaseTag::ShiftedPair;
        c.shape_matches = false;
        if (L >= 3) {
            for (bool swapped : {false, true}) {
                const Word& p = swapped ? my : mx;
                const Word& q = swapped ? mx : my;
                if (p.slice(1, L - 1) == q.slice(0, L - 1)) {
                    c.swapped = swapped;
                    c.alpha = p[1];
                    c.beta = p[L - 1];
                    c.c = p.slice(2, L - 3);
                    c.shape_matches = true;
                    break;
                }
            }
        }
    } else if (c.d == 0 && c.s == 0) {
        c.case_tag = CaseTag::Generic;
        c.c = inner(mx);
        c.c2 = inner(my);
        c.shape_matches = L >= 3;
    } else {
        c.case_tag = CaseTag::Generic;
        c.shape_matches = false;
    }
    return c;
}

std::pair<Word, Word> reconstruct_pair(const PairClassification& c) {
    const Word al = sym(c.alpha);
    const Word na = sym(1 - c.alpha);
    const Word be = sym(c.beta);
    const Word nb = sym(1 - c.beta);
    Word u;
    Word v;
    switch (c.case_tag) {
        case CaseTag::AdjacentTransposition: u = al + na; v = na + al; break;
        case CaseTag::SingleFlip: u = al; v = na; break;
        case CaseTag::RunShift:
            u = Word::constant(c.ell, c.alpha) + na;
            v = na + Word::constant(c.ell, c.alpha);
            break;
        case CaseTag::AlternatingBlock: u = c.c; v = c.c.complemented(); break;
        case CaseTag::TwoFlips: u = al + c.c + be; v = na + c.c + nb; break;
        case CaseTag::ShiftedPair: u = na + al + c.c + be; v = al + c.c + be + nb; break;
        case CaseTag::Generic: u = al + c.c + be; v = na + c.c2 + nb; break;
    }
    if (c.swapped) std::swap(u, v);
    return {c.a + u + c.b, c.a + v + c.b};
}

DecompositionSets decompose_sets(const Word& x, const Word& y) {
    require_pair(x, y);
    require_nonempty(x, "decomposition");
    const int n = x.size();
    DecompositionSets out;
    std::vector<std::uint64_t> s_codes;
    for (Word z : intersect(deletion_ball(x), deletion_ball(y)))
        push_with_flips(s_codes, z.value(), n - 1);
    out.S = BallSet(n - 1, std::move(s_codes));

    std::vector<Word> d_words;
    for (Word z : intersect(substitution_ball(x), substitution_ball(y)))
        for (const Word& w : deletions_by_run(z)) d_words.push_back(w);
    out.D = BallSet::from_words(n - 1, d_words);

    out.B = intersect(ds_ball(x), ds_ball(y));
    out.B_extra = subtract(out.B, unite(out.D, out.S));
    return out;
}

IntersectionDecomposition decompose_intersection(const Word& x, const Word& y) {
    const DecompositionSets sets = decompose_sets(x, y);
    IntersectionDecomposition d;
    d.size_S = sets.S.size();
    d.size_D = sets.D.size();
    d.size_overlap = intersection_size(sets.D, sets.S);
    d.size_B_extra = sets.B_extra.size();
    d.total = sets.B.size();
    return d;
}

std::vector<Witness> witnesses(const Word& x, const Word& z) {
    if (z.size() + 1 != x.size())
        throw Error(ErrorCode::LengthMismatch, "witness target must be one symbol shorter");
    std::vector<Witness> out;
    const int m = z.size();
    for (int i = 1; i <= x.size(); ++i) {
        const std::uint64_t diff = x.erased(i - 1).value() ^ z.value();
        if (diff == 0) out.push_back({i, std::nullopt});
        else if (std::has_single_bit(diff)) out.push_back({i, m - std::countr_zero(diff)});
    }
    return out;
}

bool bad_from_witnesses(const std::vector<Witness>& wx, const std::vector<Witness>& wy,
                        WitnessConvention convention) {
    const auto outside = [&](const Witness& w, int lo, int hi) {
        if (!w.sub_pos) return !convention.none_inside;
        int p = *w.sub_pos;
        if (convention.index == FlipIndex::PreDeletion && p >= w.del_pos) ++p;
        return p < lo || p > hi;
    };
    for (const Witness& a : wx) {
        for (const Witness& b : wy) {
            const int lo = std::min(a.del_pos, b.del_pos);
            const int hi = std::max(a.del_pos, b.del_pos);
            if (outside(a, lo, hi) || outside(b, lo, hi)) return false;
        }
    }
    return true;
}

bool is_bad(const Word& x, const Word& y, const Word& z, WitnessConvention convention) {
    require_pair(x, y);
    const std::vector<Witness> wx = witnesses(x, z);
    const std::vector<Witness> wy = witnesses(y, z);
    if (wx.empty() || wy.empty())
        throw Error(ErrorCode::NotInBall, "z = " + z.str() + " is not in B(x) and B(y)");
    return bad_from_witnesses(wx, wy, convention);
}

BallSet preimage_ball(const Word& z, int n) {
    if (z.size() + 1 != n)
        throw Error(ErrorCode::LengthMismatch, "preimage target must have length n-1");
    std::vector<std::uint64_t> codes;
    codes.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * n));
    for (Word s : substitution_ball(z))
        for (int pos = 0; pos <= s.size(); ++pos)
            for (int bit = 0; bit < 2; ++bit) codes.push_back(s.inserted(pos, bit).value());
    return BallSet(n, std::move(codes));
}

BallSet constrained_deletion_matches(const Word& u, const Word& v) {
    if (v.size() != u.size() + 1)
        throw Error(ErrorCode::LengthMismatch, "constrained deletion needs |v| = |u| + 1");
    std::vector<std::uint64_t> codes;
    for (const Word& z : deletions_by_run(v))
        if (std::popcount(z.value() ^ u.value()) <= 1) codes.push_back(z.value());
    return BallSet(u.size(), std::move(codes));
}

}  // namespace delsub
