#include "delsub/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "verify_common.hpp"

namespace delsub {

using detail::Clock;
using detail::num;
using detail::Tally;

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

const DetailValue* VerificationReport::detail(std::string_view key) const {
    for (const auto& [k, v] : details)
        if (k == key) return &v;
    return nullptr;
}

void VerificationReport::set_detail(std::string key, DetailValue value) {
    for (auto& [k, v] : details) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    details.emplace_back(std::move(key), std::move(value));
}

VerificationReport combine_reports(std::string target, const std::vector<VerificationReport>& parts,
                                   std::size_t max_counterexamples) {
    VerificationReport out;
    out.target = std::move(target);
    if (parts.empty()) {
        out.verdict = Verdict::Skipped;
        return out;
    }
    out.n_min = parts.front().n_min;
    out.n_max = parts.front().n_max;
    bool all_skipped = true;
    bool any_fail = false;
    bool distinct_n = false;
    for (const auto& p : parts)
        if (p.n_min != parts.front().n_min || p.n_max != parts.front().n_max) distinct_n = true;
    for (const auto& p : parts) {
        out.n_min = std::min(out.n_min, p.n_min);
        out.n_max = std::max(out.n_max, p.n_max);
        out.pairs_checked += p.pairs_checked;
        out.equality_cases += p.equality_cases;
        out.counterexamples_total += p.counterexamples_total;
        out.elapsed += p.elapsed;
        if (p.verdict != Verdict::Skipped) {
            if (all_skipped) {
                out.extremal_observed = p.extremal_observed;
                out.bound = p.bound;
            } else {
                out.extremal_observed = std::max(out.extremal_observed, p.extremal_observed);
                out.bound = std::max(out.bound, p.bound);
            }
            all_skipped = false;
        }
        any_fail = any_fail || p.verdict == Verdict::Fail;
        for (const auto& c : p.counterexamples) {
            if (out.counterexamples.size() >= max_counterexamples) break;
            out.counterexamples.push_back(c);
        }
        const std::string prefix = distinct_n ? "n=" + std::to_string(p.n_max) + "." : std::string();
        out.details.emplace_back(prefix + "verdict", std::string(to_string(p.verdict)));
        for (const auto& [k, v] : p.details) out.details.emplace_back(prefix + k, v);
    }
    out.verdict = any_fail ? Verdict::Fail : all_skipped ? Verdict::Skipped : Verdict::Pass;
    return out;
}

// ---------------------------------------------------------------------------
// PairEngine

namespace {

std::vector<std::uint64_t> all_codes(int n) {
    std::vector<std::uint64_t> v(std::size_t{1} << n);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

}  // namespace

PairEngine::PairEngine(int n) : PairEngine(n, (n >= 1 && n <= kExhaustiveLimit) ? all_codes(n) : std::vector<std::uint64_t>{}) {}

PairEngine::PairEngine(int n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {
    if (n < 1 || n > kExhaustiveLimit)
        throw Error(ErrorCode::LimitExceeded,
                    "pair engine supports 1 <= n <= " + std::to_string(kExhaustiveLimit) + ", got " + std::to_string(n));
    const std::uint64_t universe = std::uint64_t{1} << (n - 1);
    stride_ = static_cast<std::size_t>((universe + 63) / 64);
    bits_.assign(stride_ * words_.size(), 0);
    runs_.resize(words_.size());
    del_offsets_.assign(words_.size() + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const Word x(n, words_[i]);
        const BallSet dels = deletion_ball(x);
        runs_[i] = delsub::run_count(x);
        std::uint64_t* row = bits_.data() + i * stride_;
        for (std::uint64_t z : dels.codes()) {
            dels_.push_back(z);
            row[z >> 6] |= std::uint64_t{1} << (z & 63);
            for (int k = 0; k < n - 1; ++k) {
                const std::uint64_t f = z ^ (std::uint64_t{1} << k);
                row[f >> 6] |= std::uint64_t{1} << (f & 63);
            }
        }
        del_offsets_[i + 1] = static_cast<std::uint32_t>(dels_.size());
    }
}

std::size_t PairEngine::total(std::size_t i, std::size_t j) const noexcept {
    const std::uint64_t* a = bits_.data() + i * stride_;
    const std::uint64_t* b = bits_.data() + j * stride_;
    std::size_t c = 0;
    for (std::size_t k = 0; k < stride_; ++k) c += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
    return c;
}

std::size_t PairEngine::triple_total(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    const std::uint64_t* a = bits_.data() + i * stride_;
    const std::uint64_t* b = bits_.data() + j * stride_;
    const std::uint64_t* c = bits_.data() + k * stride_;
    std::size_t t = 0;
    for (std::size_t w = 0; w < stride_; ++w) t += static_cast<std::size_t>(std::popcount(a[w] & b[w] & c[w]));
    return t;
}

int PairEngine::deletion_overlap(std::size_t i, std::size_t j) const noexcept {
    const std::uint64_t* p = dels_.data() + del_offsets_[i];
    const std::uint64_t* pe = dels_.data() + del_offsets_[i + 1];
    const std::uint64_t* q = dels_.data() + del_offsets_[j];
    const std::uint64_t* qe = dels_.data() + del_offsets_[j + 1];
    int c = 0;
    while (p != pe && q != qe) {
        if (*p < *q) ++p;
        else if (*q < *p) ++q;
        else { ++c; ++p; ++q; }
    }
    return c;
}

int PairEngine::substitution_overlap(std::size_t i, std::size_t j) const noexcept {
    const int dh = std::popcount(words_[i] ^ words_[j]);
    if (dh == 0) return n_ + 1;
    return dh <= 2 ? 2 : 0;
}

void PairEngine::for_each_common(std::size_t i, std::size_t j, const std::function<void(std::uint64_t)>& visit) const {
    const std::uint64_t* a = bits_.data() + i * stride_;
    const std::uint64_t* b = bits_.data() + j * stride_;
    for (std::size_t k = 0; k < stride_; ++k) {
        std::uint64_t m = a[k] & b[k];
        while (m) {
            visit(k * 64 + static_cast<std::uint64_t>(std::countr_zero(m)));
            m &= m - 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

Word sym(int bit) { return Word(1, static_cast<std::uint64_t>(bit & 1)); }

bool has_symbol(const Word& w, int s) { return s ? w.weight() > 0 : w.weight() < w.size(); }

std::int64_t ceil_log2(std::int64_t n) {
    std::int64_t k = 0;
    while ((std::int64_t{1} << k) < n) ++k;
    return k;
}

const char* case_key(CaseTag t) {
    switch (t) {
        case CaseTag::AdjacentTransposition: return "adjacent";
        case CaseTag::SingleFlip: return "single_flip";
        case CaseTag::RunShift: return "run_shift";
        case CaseTag::AlternatingBlock: return "alternating";
        case CaseTag::TwoFlips: return "two_flips";
        case CaseTag::ShiftedPair: return "shifted";
        case CaseTag::Generic: return "generic";
    }
    return "?";
}

std::string set_str(const BallSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& w : s.strings()) {
        if (!first) out += ",";
        out += w;
        first = false;
    }
    return out + "}";
}

// Ceiling and equality checks for one classified pair. `total` is |B(x,y)|.
void check_case(Tally& t, int n, const Word& x, const Word& y, const PairClassification& c, std::int64_t total) {
    const std::string key = case_key(c.case_tag);
    t.add("count." + key);
    t.max("max_total." + key, total);
    const std::int64_t rx = run_count(x);
    const std::int64_t ry = run_count(y);
    const std::int64_t ra = run_count(c.a);
    const std::int64_t rb = run_count(c.b);
    const auto bound = [&](std::int64_t limit, const std::string& what) {
        t.check(total <= limit, x, y, key + ": |B(x,y)| = " + num(total) + " exceeds " + what + " = " + num(limit));
    };
    switch (c.case_tag) {
        case CaseTag::AdjacentTransposition: {
            bound(4 * n - 9, "4n-9");
            const bool characterized = (ra == 0 && rb == n - 2) || (ra == n - 2 && rb == 0);
            if (characterized) t.add("characterized.adjacent");
            if (total == 4 * n - 9) t.add("equality.adjacent");
            t.check((total == 4 * n - 9) == characterized, x, y,
                    "adjacent: |B(x,y)| = " + num(total) + " with (r(a),r(b)) = (" + num(ra) + "," + num(rb) +
                        ") breaks the 4n-9 equality characterization");
            break;
        }
        case CaseTag::SingleFlip: {
            bound(3 * n - 5, "3n-5");
            if (n >= 4) bound(rx + ry + n - 1, "r(x)+r(y)+n-1");
            const bool characterized = (ra == 0 && rb == n - 1) || (ra == n - 1 && rb == 0);
            if (characterized) t.add("characterized.single_flip");
            if (total == 3 * n - 5) t.add("equality.single_flip");
            if (n >= 4)
                t.check((total == 3 * n - 5) == characterized, x, y,
                        "single_flip: |B(x,y)| = " + num(total) + " with (r(a),r(b)) = (" + num(ra) + "," + num(rb) +
                            ") breaks the 3n-5 equality characterization");
            break;
        }
        case CaseTag::RunShift:
            if (n >= 6) {
                bound(3 * n - 7, "3n-7");
                bound(rx + ry + n - 2, "r(x)+r(y)+n-2");
            }
            break;
        case CaseTag::AlternatingBlock: bound(2 * n + 8, "2n+8"); break;
        case CaseTag::TwoFlips:
            bound(2 * n + 4, "2n+4");
            bound(rx + ry + 8, "r(x)+r(y)+8");
            break;
        case CaseTag::ShiftedPair: bound(n + 20, "n+20"); break;
        case CaseTag::Generic: bound(30, "30"); break;
    }
}

// ----- structured shape enumeration -----

// Calls fn(a, b) for every split |a| + |b| = len with |a| = la.
template <class Fn>
void for_each_affix(int la, int lb, Fn fn) {
    for (std::uint64_t av = 0; av < (std::uint64_t{1} << la); ++av)
        for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << lb); ++bv) fn(Word(la, av), Word(lb, bv));
}

struct Shape {
    CaseTag tag;
    Word a;
    Word b;
    int alpha = 0;
    int ell = 0;
    Word c;
    Word x;
    Word y;
};

// Every unordered pair of the family at length n, one representative each;
// work is split by |a| so that chunks are deterministic.
template <class Fn>
void for_each_shape(CaseTag tag, int n, int la, Fn fn) {
    switch (tag) {
        case CaseTag::AdjacentTransposition:
            if (la > n - 2) return;
            for_each_affix(la, n - 2 - la, [&](const Word& a, const Word& b) {
                fn(Shape{tag, a, b, 0, 0, {}, a + sym(0) + sym(1) + b, a + sym(1) + sym(0) + b});
            });
            break;
        case CaseTag::SingleFlip:
            if (la > n - 1) return;
            for_each_affix(la, n - 1 - la, [&](const Word& a, const Word& b) {
                fn(Shape{tag, a, b, 0, 0, {}, a + sym(0) + b, a + sym(1) + b});
            });
            break;
        case CaseTag::RunShift:
            for (int ell = 2; ell + 1 + la <= n; ++ell) {
                for (int alpha = 0; alpha < 2; ++alpha) {
                    const Word run = Word::constant(ell, alpha);
                    for_each_affix(la, n - ell - 1 - la, [&](const Word& a, const Word& b) {
                        fn(Shape{tag, a, b, alpha, ell, {}, a + run + sym(1 - alpha) + b,
                                 a + sym(1 - alpha) + run + b});
                    });
                }
            }
            break;
        case CaseTag::AlternatingBlock:
            for (int L = 3; L + la <= n; ++L) {
                std::uint64_t cv = 0;
                for (int k = 0; k < L; ++k) cv = (cv << 1) | static_cast<std::uint64_t>(k & 1);
                const Word c(L, cv);
                for_each_affix(la, n - L - la, [&](const Word& a, const Word& b) {
                    fn(Shape{tag, a, b, 0, 0, c, a + c + b, a + c.complemented() + b});
                });
            }
            break;
        default: break;
    }
}

int shape_threshold(CaseTag tag) {
    switch (tag) {
        case CaseTag::AdjacentTransposition: return 5;
        case CaseTag::SingleFlip: return 4;
        case CaseTag::RunShift: return 6;
        case CaseTag::AlternatingBlock: return 3;
        default: return 1;
    }
}

constexpr std::array<CaseTag, 4> kStructuredTags = {CaseTag::AdjacentTransposition, CaseTag::SingleFlip,
                                                    CaseTag::RunShift, CaseTag::AlternatingBlock};

}  // namespace

// ---------------------------------------------------------------------------
// Single-word lemmas

VerificationReport verify_ball_sizes(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 1) return detail::skipped("ball-sizes", n, n, "needs n >= 1");
    if (n > 24) throw Error(ErrorCode::LimitExceeded, "ball-sizes supports n <= 24");
    Tally t = detail::for_each_index_chunked(std::size_t{1} << n, opt, [&](Tally& t, std::size_t v) {
        const Word x(n, v);
        const auto d = static_cast<std::int64_t>(deletion_ball(x).size());
        const auto s = static_cast<std::int64_t>(substitution_ball(x).size());
        const std::int64_t r = run_count(x);
        ++t.checked;
        t.observe(d);
        if (d == n) ++t.equality;
        if (d != r) t.fail(x, "|D(x)| = " + num(d) + " but r(x) = " + num(r));
        if (s != n + 1) t.fail(x, "|S(x)| = " + num(s) + " but n+1 = " + num(n + 1));
        t.max("max_ds_ball", static_cast<std::int64_t>(ds_ball(x).size()));
    });
    return detail::finish("ball-sizes", n, n, std::move(t), n, start);
}

VerificationReport verify_del_positions(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 1) return detail::skipped("del-positions", n, n, "needs n >= 1");
    if (n > 24) throw Error(ErrorCode::LimitExceeded, "del-positions supports n <= 24");
    Tally t = detail::for_each_index_chunked(std::size_t{1} << n, opt, [&](Tally& t, std::size_t v) {
        const Word x(n, v);
        const std::vector<Word> dels = deletions_by_run(x);
        ++t.checked;
        for (std::size_t i = 0; i < dels.size(); ++i) {
            for (std::size_t j = i + 1; j < dels.size(); ++j) {
                const int dh = hamming_distance(dels[i], dels[j]);
                t.observe(dh);
                if (dh != static_cast<int>(j - i))
                    t.fail(x, "d_H(x[" + num(i + 1) + "], x[" + num(j + 1) + "]) = " + num(dh));
            }
        }
    });
    return detail::finish("del-positions", n, n, std::move(t), n - 1, start);
}

VerificationReport verify_constrained_deletion(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 0) return detail::skipped("constrained-deletion", n, n, "needs n >= 0");
    if (2 * n + 1 > 30) throw Error(ErrorCode::LimitExceeded, "constrained-deletion supports n <= 14");
    Tally t = detail::for_each_index_chunked(std::size_t{1} << n, opt, [&](Tally& t, std::size_t uv) {
        const Word u(n, uv);
        for (std::uint64_t vv = 0; vv < (std::uint64_t{1} << (n + 1)); ++vv) {
            const Word v(n + 1, vv);
            const BallSet F = constrained_deletion_matches(u, v);
            const auto f = static_cast<std::int64_t>(F.size());
            ++t.checked;
            t.observe(f);
            if (f > 3) t.fail(u, v, "|F| = " + num(f));
            if (f == 3) {
                ++t.equality;
                if (!F.contains(u)) t.fail(u, v, "|F| = 3 without u in F");
            }
        }
    });
    return detail::finish("constrained-deletion", n, n, std::move(t), 3, start);
}

// ---------------------------------------------------------------------------
// Pair structure: intersection sizes and their explicit shapes

VerificationReport verify_pair_structure(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 1) return detail::skipped("pair-structure", n, n, "needs n >= 1");
    if (n > kExhaustiveLimit) throw Error(ErrorCode::LimitExceeded, "pair-structure supports n <= 14");
    Tally t = detail::for_each_pair_chunked(std::size_t{1} << n, opt, [&](Tally& t, std::size_t i, std::size_t j) {
        const Word x(n, i);
        const Word y(n, j);
        ++t.checked;
        const BallSet Dxy = ball_intersection(x, y, BallKind::Del);
        const BallSet Sxy = ball_intersection(x, y, BallKind::Sub);
        const auto d = static_cast<int>(Dxy.size());
        const auto s = static_cast<int>(Sxy.size());
        t.observe(d + s);
        t.add("count.d" + num(d) + "_s" + num(s));
        t.check(s == 0 || s == 2, x, y, "|S(x,y)| = " + num(s));
        t.check(d <= 2, x, y, "|D(x,y)| = " + num(d));

        const AffixDecomposition af = common_affixes(x, y);
        const int j1 = af.first_diff;
        const int jh = af.last_diff;

        // substitution intersection in closed form
        std::vector<std::uint64_t> expect_s;
        if (af.hamming == 1) expect_s = {x.value(), y.value()};
        if (af.hamming == 2) expect_s = {x.flipped(j1 - 1).value(), x.flipped(jh - 1).value()};
        const BallSet es(n, expect_s);
        t.check(Sxy == es, x, y, "S(x,y) = " + set_str(Sxy) + ", closed form gives " + set_str(es));

        // |D(x,y)| = 2 exactly for complementary alternating middles
        const int L = jh - j1 + 1;
        const Word mx = x.slice(j1 - 1, L);
        const Word my = y.slice(j1 - 1, L);
        const bool alt = L >= 2 && af.hamming == L && run_count(mx) == L;
        t.check((d == 2) == alt, x, y, "|D(x,y)| = " + num(d) + " disagrees with the alternating-block test");
        if (d == 2 && alt) {
            const BallSet ed = BallSet::from_words(
                n - 1, {af.prefix + mx.slice(1, L - 1) + af.suffix, af.prefix + my.slice(1, L - 1) + af.suffix});
            t.check(Dxy == ed, x, y, "D(x,y) = " + set_str(Dxy) + ", expected " + set_str(ed));
        }
        if (d == 1) {
            const Word z = Dxy[0];
            const bool first = x.erased(j1 - 1) == z && y.erased(jh - 1) == z;
            const bool second = x.erased(jh - 1) == z && y.erased(j1 - 1) == z;
            t.check(first || second, x, y, "D(x,y) = {" + z.str() + "} matches neither single-deletion pattern");
        }

        const PairClassification c = classify_pair(x, y);
        t.check(c.d == d && c.s == s, x, y, "classify_pair reports (" + num(c.d) + "," + num(c.s) + ")");
        t.check(c.shape_matches, x, y, std::string("no ") + case_key(c.case_tag) + " shape");
        if (c.shape_matches) {
            const auto [rx, ry] = reconstruct_pair(c);
            t.check(rx == x && ry == y, x, y, "structural fields rebuild " + rx.str() + "/" + ry.str());
        }
    });
    return detail::finish("pair-structure", n, n, std::move(t), 4, start);
}

// ---------------------------------------------------------------------------
// Decomposition identity

VerificationReport verify_decomposition(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 1) return detail::skipped("decomposition", n, n, "needs n >= 1");
    const PairEngine engine(n);
    Tally t = detail::for_each_pair_chunked(engine.word_count(), opt, [&](Tally& t, std::size_t i, std::size_t j) {
        const Word x(n, engine.word(i));
        const Word y(n, engine.word(j));
        ++t.checked;
        const DecompositionSets s = decompose_sets(x, y);
        const auto total = static_cast<std::int64_t>(s.B.size());
        const auto overlap = static_cast<std::int64_t>(intersection_size(s.D, s.S));
        const auto rhs = static_cast<std::int64_t>(s.B_extra.size() + s.D.size() + s.S.size()) - overlap;
        t.observe(total);
        t.check(total == rhs, x, y, "|B| = " + num(total) + " but B_extra + D + S - overlap = " + num(rhs));
        t.check(unite(s.B_extra, unite(s.D, s.S)) == s.B, x, y, "B(x,y) differs from B_extra + D + S");
        t.check(total == static_cast<std::int64_t>(engine.total(i, j)), x, y,
                "bitset intersection gives " + num(static_cast<std::int64_t>(engine.total(i, j))));
    });
    const std::int64_t bound = n >= 6 ? 4 * n - 9 : (std::int64_t{1} << (n - 1));
    return detail::finish("decomposition", n, n, std::move(t), bound, start);
}

// ---------------------------------------------------------------------------
// Intersection bounds

namespace {

VerificationReport intersection_bounds_structured(int n, const VerifyOptions& opt, Clock::time_point start) {
    std::vector<std::pair<CaseTag, int>> tasks;
    for (CaseTag tag : kStructuredTags)
        if (n >= shape_threshold(tag))
            for (int la = 0; la <= n; ++la) tasks.emplace_back(tag, la);
    auto parts = detail::run_chunks<Tally>(tasks.size(), opt.jobs, [&](std::size_t k) {
        Tally t(opt.max_counterexamples);
        for_each_shape(tasks[k].first, n, tasks[k].second, [&](const Shape& sh) {
            ++t.checked;
            const PairClassification c = classify_pair(sh.x, sh.y);
            t.check(c.case_tag == sh.tag && c.shape_matches, sh.x, sh.y,
                    std::string("classified as ") + case_key(c.case_tag) + ", built as " + case_key(sh.tag));
            const auto total = static_cast<std::int64_t>(intersection_size(ds_ball(sh.x), ds_ball(sh.y)));
            t.observe(total);
            check_case(t, n, sh.x, sh.y, c, total);
        });
        return t;
    });
    Tally t = detail::merge_all(std::move(parts), opt.max_counterexamples);
    t.equality = static_cast<std::uint64_t>(t.stat("equality.adjacent"));
    VerificationReport r = detail::finish("intersection-bounds", n, n, std::move(t), 4 * n - 9, start);
    r.set_detail("mode", std::string("structured"));
    return r;
}

}  // namespace

// Below this length alternating-block pairs can exceed 4n-9 (2n+8 > 4n-9).
constexpr int kGlobalBoundFrom = 6;

VerificationReport verify_intersection_bounds(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < kGlobalBoundFrom)
        return detail::skipped("intersection-bounds", n, n, "needs n >= 6: alternating-block pairs exceed 4n-9 below");
    if (opt.structured) {
        if (n > kStructuredLimit)
            throw Error(ErrorCode::LimitExceeded, "structured mode supports n <= " + std::to_string(kStructuredLimit));
        return intersection_bounds_structured(n, opt, start);
    }
    if (n > kExhaustiveLimit)
        throw Error(ErrorCode::LimitExceeded, "exhaustive mode supports n <= " + std::to_string(kExhaustiveLimit) +
                                                  "; use structured mode beyond");
    const PairEngine engine(n);
    const std::int64_t global = 4 * n - 9;
    Tally t = detail::for_each_pair_chunked(engine.word_count(), opt, [&](Tally& t, std::size_t i, std::size_t j) {
        ++t.checked;
        const auto total = static_cast<std::int64_t>(engine.total(i, j));
        const int d = engine.deletion_overlap(i, j);
        const int s = engine.substitution_overlap(i, j);
        t.observe(total);
        if (total == global) t.add("pairs_at_4n_minus_9");
        if (total > global) {
            t.add("pairs_above_4n_minus_9");
            t.fail(Word(n, engine.word(i)), Word(n, engine.word(j)), "|B(x,y)| = " + num(total) + " > 4n-9");
        }
        if (d == 0 && s == 0) {
            t.add("count.generic");
            t.max("max_total.generic", total);
            if (total > 30) t.fail(Word(n, engine.word(i)), Word(n, engine.word(j)), "generic: |B(x,y)| = " + num(total) + " > 30");
            return;
        }
        const Word x(n, engine.word(i));
        const Word y(n, engine.word(j));
        const PairClassification c = classify_pair(x, y);
        t.check(c.d == d && c.s == s, x, y,
                "classify_pair (" + num(c.d) + "," + num(c.s) + ") vs engine (" + num(d) + "," + num(s) + ")");
        t.check(c.shape_matches, x, y, std::string("no ") + case_key(c.case_tag) + " shape");
        check_case(t, n, x, y, c, total);
    });
    for (const char* k : {"pairs_at_4n_minus_9", "pairs_above_4n_minus_9", "equality.adjacent", "characterized.adjacent",
                          "equality.single_flip", "characterized.single_flip"})
        t.add(k, 0);
    t.check(t.extremal == global, Word(), Word(),
            "global maximum " + num(t.extremal) + " differs from 4n-9 = " + num(global));
    // the equality set of the (2,2) case, compared as sets via the per-pair test above
    t.equality = static_cast<std::uint64_t>(t.stat("equality.adjacent"));
    t.check(t.stat("equality.adjacent") == t.stat("characterized.adjacent"), Word(), Word(),
            "(2,2) pairs at 4n-9: " + num(t.stat("equality.adjacent")) + ", characterized family: " +
                num(t.stat("characterized.adjacent")));
    t.check(t.stat("equality.single_flip") == t.stat("characterized.single_flip"), Word(), Word(),
            "single-flip pairs at 3n-5: " + num(t.stat("equality.single_flip")) + ", characterized family: " +
                num(t.stat("characterized.single_flip")));
    VerificationReport r = detail::finish("intersection-bounds", n, n, std::move(t), global, start);
    r.set_detail("mode", std::string("exhaustive"));
    return r;
}

// ---------------------------------------------------------------------------
// Claim tables

namespace {

enum class Edge { Empty, Same, Other };
enum class Runs { Zero, One, Many };
enum class Sym { Any, Same, Other };

struct OffsetRow {
    Edge a_end;
    Edge b_start;
    int first;
    int second;
};

struct OverlapRow {
    Runs ra;
    Runs rb;
    Sym a_sym;
    Sym b_sym;
    int first;
    int second;
};

// (|D(aααb)| - R, |D(aᾱᾱb)| - R) with R = r(a) + r(b)
constexpr OffsetRow kAdjacentOffsets[] = {
    {Edge::Empty, Edge::Same, 0, 1},   {Edge::Empty, Edge::Other, 1, 0}, {Edge::Same, Edge::Same, -1, 1},
    {Edge::Same, Edge::Other, 0, 0},   {Edge::Same, Edge::Empty, 0, 1},  {Edge::Other, Edge::Same, 0, 0},
    {Edge::Other, Edge::Other, 1, -1}, {Edge::Other, Edge::Empty, 1, 0},
};

// (|D(aα^{ℓ+1}b)| - R, |D(aᾱα^{ℓ-1}ᾱb)| - R)
constexpr OffsetRow kRunShiftOffsets[] = {
    {Edge::Empty, Edge::Empty, 1, 3}, {Edge::Empty, Edge::Same, 0, 3},  {Edge::Empty, Edge::Other, 1, 2},
    {Edge::Same, Edge::Same, -1, 3},  {Edge::Same, Edge::Other, 0, 2},  {Edge::Same, Edge::Empty, 0, 3},
    {Edge::Other, Edge::Same, 0, 2},  {Edge::Other, Edge::Other, 1, 1}, {Edge::Other, Edge::Empty, 1, 2},
};

// Two overlap counts indexed by the run regimes of a and b; "Same" means the
// single run of that affix consists of α.
constexpr OverlapRow kOverlapRows[] = {
    {Runs::Zero, Runs::One, Sym::Any, Sym::Same, 1, 2},   {Runs::Zero, Runs::One, Sym::Any, Sym::Other, 2, 1},
    {Runs::Zero, Runs::Many, Sym::Any, Sym::Any, 2, 2},   {Runs::One, Runs::Zero, Sym::Same, Sym::Any, 1, 2},
    {Runs::One, Runs::Zero, Sym::Other, Sym::Any, 2, 1},  {Runs::One, Runs::One, Sym::Same, Sym::Same, 1, 3},
    {Runs::One, Runs::One, Sym::Same, Sym::Other, 2, 2},  {Runs::One, Runs::One, Sym::Other, Sym::Same, 2, 2},
    {Runs::One, Runs::One, Sym::Other, Sym::Other, 3, 1}, {Runs::One, Runs::Many, Sym::Same, Sym::Any, 2, 3},
    {Runs::One, Runs::Many, Sym::Other, Sym::Any, 3, 2},  {Runs::Many, Runs::Zero, Sym::Any, Sym::Any, 2, 2},
    {Runs::Many, Runs::One, Sym::Any, Sym::Same, 2, 3},   {Runs::Many, Runs::One, Sym::Any, Sym::Other, 3, 2},
    {Runs::Many, Runs::Many, Sym::Any, Sym::Any, 3, 3},
};

Edge last_edge(const Word& a, int alpha) {
    if (a.empty()) return Edge::Empty;
    return a[a.size() - 1] == alpha ? Edge::Same : Edge::Other;
}

Edge first_edge(const Word& b, int alpha) {
    if (b.empty()) return Edge::Empty;
    return b[0] == alpha ? Edge::Same : Edge::Other;
}

Runs regime(const Word& w) {
    const int r = run_count(w);
    return r == 0 ? Runs::Zero : r == 1 ? Runs::One : Runs::Many;
}

bool sym_matches(Sym s, const Word& w, int alpha) {
    if (s == Sym::Any) return true;
    return (w[0] == alpha) == (s == Sym::Same);
}

template <std::size_t K>
int find_offset_row(const OffsetRow (&rows)[K], const Word& a, const Word& b, int alpha) {
    const Edge ea = last_edge(a, alpha);
    const Edge eb = first_edge(b, alpha);
    for (std::size_t k = 0; k < K; ++k)
        if (rows[k].a_end == ea && rows[k].b_start == eb) return static_cast<int>(k);
    return -1;
}

int find_overlap_row(const Word& a, const Word& b, int alpha) {
    const Runs ra = regime(a);
    const Runs rb = regime(b);
    for (std::size_t k = 0; k < std::size(kOverlapRows); ++k) {
        const OverlapRow& row = kOverlapRows[k];
        if (row.ra == ra && row.rb == rb && sym_matches(row.a_sym, a, alpha) && sym_matches(row.b_sym, b, alpha))
            return static_cast<int>(k);
    }
    return -1;
}

int clamp_runs(int r) { return std::min(r, 2); }

// |D ∩ S| for the adjacent family by (min(r(a),2), min(r(b),2))
int adjacent_overlap_claim(int ra, int rb) {
    const int a = clamp_runs(ra);
    const int b = clamp_runs(rb);
    if ((a == 0 && b == 1) || (a == 1 && b == 0)) return 3;
    if ((a == 0 && b == 2) || (a == 2 && b == 0) || (a == 1 && b == 1)) return 4;
    if ((a == 1 && b == 2) || (a == 2 && b == 1)) return 5;
    if (a == 2 && b == 2) return 6;
    return -1;
}

// |B_extra|; `same` tells whether single-run affixes share their symbol
int adjacent_extra_claim(int ra, int rb, bool same) {
    const int a = clamp_runs(ra);
    const int b = clamp_runs(rb);
    if (a == 0 || b == 0) return 0;
    if (a == 1 && b == 1) return same ? 1 : 0;
    if (a == 2 && b == 2) return 2;
    return 1;
}

int single_flip_extra_claim(int ra, int rb, bool same) {
    const int a = clamp_runs(ra);
    const int b = clamp_runs(rb);
    if (a == 0 || b == 0) return 0;
    if (a == 1 && b == 1) return same ? 0 : 1;
    if (a == 2 && b == 2) return 2;
    return 1;
}

const char* edge_name(Edge e) { return e == Edge::Empty ? "e" : e == Edge::Same ? "a" : "A"; }

struct ClaimContext {
    Tally& t;
    int n;
    const Word& x;
    const Word& y;
    std::string family;

    void expect(bool ok, const std::string& what) { t.check(ok, x, y, family + ": " + what); }
    void expect_eq(std::int64_t got, std::int64_t want, const std::string& what) {
        t.check(got == want, x, y, family + ": " + what + " = " + num(got) + ", expected " + num(want));
    }
};

BallSet union_of_deletions(std::initializer_list<Word> ws, int len) {
    std::vector<std::uint64_t> codes;
    for (const Word& w : ws) {
        const BallSet ball = deletion_ball(w);
        codes.insert(codes.end(), ball.codes().begin(), ball.codes().end());
    }
    return BallSet(len, std::move(codes));
}

BallSet union_of_substitutions(std::initializer_list<Word> ws, int len) {
    std::vector<std::uint64_t> codes;
    for (const Word& w : ws) {
        const BallSet ball = substitution_ball(w);
        codes.insert(codes.end(), ball.codes().begin(), ball.codes().end());
    }
    return BallSet(len, std::move(codes));
}

void check_adjacent(Tally& t, int n, const Shape& sh) {
    ClaimContext ctx{t, n, sh.x, sh.y, "adjacent"};
    const Word& a = sh.a;
    const Word& b = sh.b;
    const int al = sh.alpha;
    const Word A = sym(al);
    const Word nA = sym(1 - al);
    const int ra = run_count(a);
    const int rb = run_count(b);
    const int R = ra + rb;
    const Word p = a + A + A + b;
    const Word q = a + nA + nA + b;
    const Word u = a + A + b;
    const Word v = a + nA + b;

    const DecompositionSets s = decompose_sets(sh.x, sh.y);
    const auto total = static_cast<std::int64_t>(s.B.size());
    const auto overlap = static_cast<std::int64_t>(intersection_size(s.D, s.S));
    t.observe(total);
    t.max("max_total.adjacent", total);
    if (total == 4 * n - 9) t.add("equality.adjacent");

    ctx.expect(ball_intersection(sh.x, sh.y, BallKind::Sub) == BallSet::from_words(n, {p, q}), "S(x,y) != {aααb, aᾱᾱb}");
    ctx.expect(ball_intersection(sh.x, sh.y, BallKind::Del) == BallSet::from_words(n - 1, {u, v}), "D(x,y) != {aαb, aᾱb}");
    ctx.expect(s.D == union_of_deletions({p, q}, n - 1), "D != D(aααb) ∪ D(aᾱᾱb)");
    ctx.expect(s.S == union_of_substitutions({u, v}, n - 1), "S != S(aαb) ∪ S(aᾱb)");
    ctx.expect_eq(static_cast<std::int64_t>(s.S.size()), 2 * n - 2, "|S|");
    ctx.expect_eq(static_cast<std::int64_t>(s.D.size()), (ra == 0 || rb == 0) ? 2 * R + 1 : 2 * R, "|D|");

    const BallSet Dp = deletion_ball(p);
    const BallSet Dq = deletion_ball(q);
    const int orow = find_offset_row(kAdjacentOffsets, a, b, al);
    if (orow < 0) {
        ctx.expect(false, "no offset row");
    } else {
        t.add("adjacent.offset_row." + num(orow));
        ctx.expect_eq(static_cast<std::int64_t>(Dp.size()) - R, kAdjacentOffsets[orow].first,
                      std::string("|D(aααb)|-R, row ") + edge_name(kAdjacentOffsets[orow].a_end) +
                          edge_name(kAdjacentOffsets[orow].b_start));
        ctx.expect_eq(static_cast<std::int64_t>(Dq.size()) - R, kAdjacentOffsets[orow].second,
                      std::string("|D(aᾱᾱb)|-R, row ") + edge_name(kAdjacentOffsets[orow].a_end) +
                          edge_name(kAdjacentOffsets[orow].b_start));
    }

    const auto p1 = static_cast<std::int64_t>(intersection_size(Dp, substitution_ball(u)));
    const auto p2 = static_cast<std::int64_t>(intersection_size(Dq, substitution_ball(v)));
    const int vrow = find_overlap_row(a, b, al);
    if (vrow < 0) {
        ctx.expect(false, "no overlap row");
    } else {
        t.add("adjacent.overlap_row." + num(vrow));
        ctx.expect_eq(p1, kOverlapRows[vrow].first, "|D(aααb) ∩ S(aαb)|");
        ctx.expect_eq(p2, kOverlapRows[vrow].second, "|D(aᾱᾱb) ∩ S(aᾱb)|");
        ctx.expect_eq(overlap, kOverlapRows[vrow].first + kOverlapRows[vrow].second, "|D ∩ S| vs row sum");
    }
    ctx.expect_eq(overlap, adjacent_overlap_claim(ra, rb), "|D ∩ S|");
    const bool same = ra == 1 && rb == 1 && a[0] == b[0];
    ctx.expect_eq(static_cast<std::int64_t>(s.B_extra.size()), adjacent_extra_claim(ra, rb, same), "|B_extra|");
}

void check_single_flip(Tally& t, int n, const Shape& sh) {
    ClaimContext ctx{t, n, sh.x, sh.y, "single_flip"};
    const Word& a = sh.a;
    const Word& b = sh.b;
    const int al = sh.alpha;
    const int ra = run_count(a);
    const int rb = run_count(b);
    const int R = ra + rb;
    const Word ab = a + b;

    const DecompositionSets s = decompose_sets(sh.x, sh.y);
    const auto total = static_cast<std::int64_t>(s.B.size());
    const auto overlap = static_cast<std::int64_t>(intersection_size(s.D, s.S));
    t.observe(total);
    t.max("max_total.single_flip", total);
    if (total == 3 * n - 5) t.add("equality.single_flip");

    ctx.expect(ball_intersection(sh.x, sh.y, BallKind::Sub) == BallSet::from_words(n, {sh.x, sh.y}), "S(x,y) != {x, y}");
    ctx.expect(ball_intersection(sh.x, sh.y, BallKind::Del) == BallSet::from_words(n - 1, {ab}), "D(x,y) != {ab}");
    ctx.expect(s.D == union_of_deletions({sh.x, sh.y}, n - 1), "D != D(aαb) ∪ D(aᾱb)");
    ctx.expect(s.S == substitution_ball(ab), "S != S(ab)");
    ctx.expect_eq(static_cast<std::int64_t>(s.S.size()), n, "|S|");
    ctx.expect_eq(static_cast<std::int64_t>(s.D.size()), run_count(sh.x) + run_count(sh.y) - 1, "|D| vs r(x)+r(y)-1");
    ctx.expect_eq(static_cast<std::int64_t>(s.D.size()), (ra == 0 || rb == 0) ? 2 * R : 2 * R - 1, "|D|");

    const BallSet Sab = substitution_ball(ab);
    const auto p1 = static_cast<std::int64_t>(intersection_size(deletion_ball(sh.x), Sab));
    const auto p2 = static_cast<std::int64_t>(intersection_size(deletion_ball(sh.y), Sab));
    const int vrow = find_overlap_row(a, b, al);
    if (vrow < 0) {
        ctx.expect(false, "no overlap row");
    } else {
        t.add("single_flip.overlap_row." + num(vrow));
        ctx.expect_eq(p1, kOverlapRows[vrow].first, "|D(aαb) ∩ S(ab)|");
        ctx.expect_eq(p2, kOverlapRows[vrow].second, "|D(aᾱb) ∩ S(ab)|");
        ctx.expect_eq(overlap, kOverlapRows[vrow].first + kOverlapRows[vrow].second - 1, "|D ∩ S| vs row sum - 1");
    }
    ctx.expect_eq(overlap, adjacent_overlap_claim(ra, rb) - 1, "|D ∩ S|");
    const bool same = ra == 1 && rb == 1 && a[0] == b[0];
    ctx.expect_eq(static_cast<std::int64_t>(s.B_extra.size()), single_flip_extra_claim(ra, rb, same), "|B_extra|");
}

void check_run_shift(Tally& t, int n, const Shape& sh) {
    ClaimContext ctx{t, n, sh.x, sh.y, "run_shift"};
    const Word& a = sh.a;
    const Word& b = sh.b;
    const int al = sh.alpha;
    const int ell = sh.ell;
    const Word nA = sym(1 - al);
    const int ra = run_count(a);
    const int rb = run_count(b);
    const int R = ra + rb;
    const Word p = a + Word::constant(ell + 1, al) + b;
    const Word q = a + nA + Word::constant(ell - 1, al) + nA + b;
    const Word m = a + Word::constant(ell, al) + b;

    const DecompositionSets s = decompose_sets(sh.x, sh.y);
    const auto total = static_cast<std::int64_t>(s.B.size());
    const auto overlap = static_cast<std::int64_t>(intersection_size(s.D, s.S));
    t.observe(total);
    t.max("max_total.run_shift", total);

    ctx.expect(ball_intersection(sh.x, sh.y, BallKind::Sub) == BallSet::from_words(n, {p, q}),
               "S(x,y) != {aα^{l+1}b, aᾱα^{l-1}ᾱb}");
    ctx.expect(ball_intersection(sh.x, sh.y, BallKind::Del) == BallSet::from_words(n - 1, {m}), "D(x,y) != {aα^l b}");
    ctx.expect(s.D == union_of_deletions({p, q}, n - 1), "D != D(aα^{l+1}b) ∪ D(aᾱα^{l-1}ᾱb)");
    ctx.expect(s.S == substitution_ball(m), "S != S(aα^l b)");
    ctx.expect_eq(static_cast<std::int64_t>(s.S.size()), n, "|S|");
    ctx.expect_eq(static_cast<std::int64_t>(s.D.size()), run_count(sh.x) + run_count(sh.y), "|D| vs r(x)+r(y)");

    const BallSet Dp = deletion_ball(p);
    const BallSet Dq = deletion_ball(q);
    const int orow = find_offset_row(kRunShiftOffsets, a, b, al);
    if (orow < 0) {
        ctx.expect(false, "no offset row");
    } else {
        t.add("run_shift.offset_row." + num(orow));
        ctx.expect_eq(static_cast<std::int64_t>(Dp.size()) - R, kRunShiftOffsets[orow].first,
                      std::string("|D(aα^{l+1}b)|-R, row ") + edge_name(kRunShiftOffsets[orow].a_end) +
                          edge_name(kRunShiftOffsets[orow].b_start));
        ctx.expect_eq(static_cast<std::int64_t>(Dq.size()) - R, kRunShiftOffsets[orow].second,
                      std::string("|D(aᾱα^{l-1}ᾱb)|-R, row ") + edge_name(kRunShiftOffsets[orow].a_end) +
                          edge_name(kRunShiftOffsets[orow].b_start));
    }

    const BallSet Sm = substitution_ball(m);
    const auto p1 = static_cast<std::int64_t>(intersection_size(Dp, Sm));
    const auto p2 = static_cast<std::int64_t>(intersection_size(Dq, Sm));
    ctx.expect(p1 >= 1 && p1 <= 3, "|D(aα^{l+1}b) ∩ S| = " + num(p1) + " outside [1,3]");
    ctx.expect_eq(p2, 2, "|D(aᾱα^{l-1}ᾱb) ∩ S|");
    ctx.expect(overlap >= 3 && overlap <= 5, "|D ∩ S| = " + num(overlap) + " outside [3,5]");
    t.min("run_shift.min_overlap", overlap);
    t.max("run_shift.max_overlap", overlap);
    if (ra >= 2 || rb >= 2) {
        t.min("run_shift.min_overlap_many_runs", overlap);
        t.min("run_shift.min_union_many_runs", static_cast<std::int64_t>(unite(s.D, s.S).size()));
        ctx.expect(overlap >= 4, "|D ∩ S| = " + num(overlap) + " < 4 with r(a) >= 2 or r(b) >= 2");
    }
    const auto extra = static_cast<std::int64_t>(s.B_extra.size());
    ctx.expect(extra <= 1, "|B_extra| = " + num(extra) + " > 1");
    const bool both = has_symbol(a, al) && has_symbol(b, al);
    ctx.expect((extra == 1) == both, "|B_extra| = " + num(extra) + " but a, b contain α: " + (both ? "yes" : "no"));
}

void check_alternating(Tally& t, int n, const Shape& sh) {
    ClaimContext ctx{t, n, sh.x, sh.y, "alternating"};
    const Word& c = sh.c;
    const int L = c.size();
    const DecompositionSets s = decompose_sets(sh.x, sh.y);
    const auto total = static_cast<std::int64_t>(s.B.size());
    t.observe(total);
    t.max("max_total.alternating", total);

    const BallSet expect_d = BallSet::from_words(
        n - 1, {sh.a + c.slice(1, L - 1) + sh.b, sh.a + c.complemented().slice(1, L - 1) + sh.b});
    ctx.expect(ball_intersection(sh.x, sh.y, BallKind::Del) == expect_d, "D(x,y) != {a c[2..] b, a c̄[2..] b}");
    ctx.expect(s.D.empty(), "D not empty");
    ctx.expect_eq(static_cast<std::int64_t>(s.S.size()), L >= 4 ? 2 * n : 2 * n - 2, "|S|");
    ctx.expect(s.B_extra.size() <= 8, "|B_extra| = " + num(static_cast<std::int64_t>(s.B_extra.size())) + " > 8");
    ctx.expect(total <= 2 * n + 8, "|B(x,y)| = " + num(total) + " > 2n+8");
}

// (0,2), (1,0) and (0,0) pairs, found exhaustively
void check_exhaustive_claims(Tally& t, int n, const PairEngine& engine, std::size_t i, std::size_t j) {
    const int d = engine.deletion_overlap(i, j);
    const int s = engine.substitution_overlap(i, j);
    const Word x(n, engine.word(i));
    const Word y(n, engine.word(j));
    if (d == 0 && s == 2) {
        ClaimContext ctx{t, n, x, y, "two_flips"};
        ++t.checked;
        const AffixDecomposition af = common_affixes(x, y);
        const Word u = x.flipped(af.first_diff - 1);
        const Word v = x.flipped(af.last_diff - 1);
        const DecompositionSets sets = decompose_sets(x, y);
        const auto total = static_cast<std::int64_t>(sets.B.size());
        t.max("max_total.two_flips", total);
        ctx.expect(ball_intersection(x, y, BallKind::Sub) == BallSet::from_words(n, {u, v}), "S(x,y) != {aᾱvβb, aαvβ̄b}");
        ctx.expect(sets.S.empty(), "S not empty");
        ctx.expect(sets.D == union_of_deletions({u, v}, n - 1), "D != D(aᾱvβb) ∪ D(aαvβ̄b)");
        const auto dsize = static_cast<std::int64_t>(sets.D.size());
        ctx.expect(dsize <= 2 * n, "|D| = " + num(dsize) + " > 2n");
        ctx.expect(dsize <= run_count(x) + run_count(y) + 4, "|D| = " + num(dsize) + " > r(x)+r(y)+4");
        ctx.expect(sets.B_extra.size() <= 4, "|B_extra| = " + num(static_cast<std::int64_t>(sets.B_extra.size())) + " > 4");
        t.max("two_flips.max_extra", static_cast<std::int64_t>(sets.B_extra.size()));
    } else if (d == 1 && s == 0) {
        ClaimContext ctx{t, n, x, y, "shifted"};
        ++t.checked;
        const PairClassification c = classify_pair(x, y);
        ctx.expect(c.case_tag == CaseTag::ShiftedPair && c.shape_matches, "not a shifted pair");
        const Word z = c.a + sym(c.alpha) + c.c + sym(c.beta) + c.b;
        const DecompositionSets sets = decompose_sets(x, y);
        t.max("max_total.shifted", static_cast<std::int64_t>(sets.B.size()));
        ctx.expect(ball_intersection(x, y, BallKind::Del) == BallSet::from_words(n - 1, {z}), "D(x,y) != {aαcβb}");
        ctx.expect(sets.D.empty(), "D not empty");
        ctx.expect_eq(static_cast<std::int64_t>(sets.S.size()), n, "|S|");
        ctx.expect(sets.B_extra.size() <= 20, "|B_extra| = " + num(static_cast<std::int64_t>(sets.B_extra.size())) + " > 20");
        t.max("shifted.max_extra", static_cast<std::int64_t>(sets.B_extra.size()));
    } else if (d == 0 && s == 0) {
        ++t.checked;
        const auto total = static_cast<std::int64_t>(engine.total(i, j));
        t.max("max_total.generic", total);
        t.check(total <= 30, x, y, "generic: |B_extra| = " + num(total) + " > 30");
    }
}

VerificationReport claim_tables_at(int n, const VerifyOptions& opt, int exhaustive_limit) {
    const auto start = Clock::now();
    std::vector<std::pair<CaseTag, int>> tasks;
    for (CaseTag tag : kStructuredTags)
        if (n >= shape_threshold(tag))
            for (int la = 0; la <= n; ++la) tasks.emplace_back(tag, la);
    auto parts = detail::run_chunks<Tally>(tasks.size(), opt.jobs, [&](std::size_t k) {
        Tally t(opt.max_counterexamples);
        for_each_shape(tasks[k].first, n, tasks[k].second, [&](const Shape& sh) {
            ++t.checked;
            switch (sh.tag) {
                case CaseTag::AdjacentTransposition: check_adjacent(t, n, sh); break;
                case CaseTag::SingleFlip: check_single_flip(t, n, sh); break;
                case CaseTag::RunShift: check_run_shift(t, n, sh); break;
                case CaseTag::AlternatingBlock: check_alternating(t, n, sh); break;
                default: break;
            }
        });
        return t;
    });
    Tally t = detail::merge_all(std::move(parts), opt.max_counterexamples);
    if (n >= 4 && n <= exhaustive_limit) {
        const PairEngine engine(n);
        t.merge(detail::for_each_pair_chunked(engine.word_count(), opt, [&](Tally& t, std::size_t i, std::size_t j) {
            check_exhaustive_claims(t, n, engine, i, j);
        }));
    }
    t.equality = static_cast<std::uint64_t>(t.stat("equality.adjacent"));
    return detail::finish("claim-tables", n, n, std::move(t), n >= 5 ? 4 * n - 9 : t.extremal, start);
}

}  // namespace

VerificationReport verify_claim_tables(int n_max, const VerifyOptions& opt) {
    const auto start = Clock::now();
    constexpr int kFirst = 3;
    constexpr int kExhaustiveClaims = 10;
    if (n_max < kFirst) return detail::skipped("claim-tables", n_max, n_max, "needs n >= 3");
    if (n_max > kStructuredLimit)
        throw Error(ErrorCode::LimitExceeded, "claim-tables supports n <= " + std::to_string(kStructuredLimit));
    std::vector<VerificationReport> parts;
    for (int n = kFirst; n <= n_max; ++n) parts.push_back(claim_tables_at(n, opt, kExhaustiveClaims));
    VerificationReport r = combine_reports("claim-tables", parts, opt.max_counterexamples);

    // every table row must have been exercised somewhere in the range
    std::int64_t unused = 0;
    const auto row_seen = [&](const std::string& key) {
        for (const auto& p : parts)
            if (const DetailValue* v = p.detail(key)) return std::get<std::int64_t>(*v) > 0;
        return false;
    };
    if (n_max >= 8) {
        for (std::size_t k = 0; k < std::size(kAdjacentOffsets); ++k)
            if (!row_seen("adjacent.offset_row." + std::to_string(k))) ++unused;
        for (std::size_t k = 0; k < std::size(kRunShiftOffsets); ++k)
            if (!row_seen("run_shift.offset_row." + std::to_string(k))) ++unused;
        for (std::size_t k = 0; k < std::size(kOverlapRows); ++k) {
            if (!row_seen("adjacent.overlap_row." + std::to_string(k))) ++unused;
            if (!row_seen("single_flip.overlap_row." + std::to_string(k))) ++unused;
        }
        if (unused > 0) {
            ++r.counterexamples_total;
            if (r.counterexamples.size() < opt.max_counterexamples)
                r.counterexamples.push_back({"", "", num(unused) + " table rows never exercised"});
            r.verdict = Verdict::Fail;
        }
    }
    r.set_detail("unexercised_rows", unused);
    r.elapsed = detail::seconds_since(start);
    return r;
}

// ---------------------------------------------------------------------------
// Bad-sequence count

namespace {

struct NamedConvention {
    const char* name;
    WitnessConvention conv;
};

constexpr NamedConvention kConventions[] = {
    {"pre.none_inside", {FlipIndex::PreDeletion, true}},
    {"pre.none_outside", {FlipIndex::PreDeletion, false}},
    {"post.none_inside", {FlipIndex::PostDeletion, true}},
    {"post.none_outside", {FlipIndex::PostDeletion, false}},
};

std::string convention_name(const WitnessConvention& c) {
    for (const auto& nc : kConventions)
        if (nc.conv == c) return nc.name;
    return "?";
}

}  // namespace

VerificationReport verify_bad_count(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 2) return detail::skipped("bad-count", n, n, "needs n >= 2");
    const PairEngine engine(n);
    const std::string declared = convention_name(opt.convention);
    Tally t = detail::for_each_pair_chunked(engine.word_count(), opt, [&](Tally& t, std::size_t i, std::size_t j) {
        if (engine.deletion_overlap(i, j) != 0 || engine.substitution_overlap(i, j) != 0) return;
        ++t.checked;
        const Word x(n, engine.word(i));
        const Word y(n, engine.word(j));
        const auto total = static_cast<std::int64_t>(engine.total(i, j));
        t.max("max_total", total);
        t.check(total <= 30, x, y, "|B(x,y)| = " + num(total) + " > 30");
        std::array<std::int64_t, std::size(kConventions)> bad{};
        engine.for_each_common(i, j, [&](std::uint64_t code) {
            const Word z(n - 1, code);
            const auto wx = witnesses(x, z);
            const auto wy = witnesses(y, z);
            for (std::size_t k = 0; k < bad.size(); ++k)
                if (bad_from_witnesses(wx, wy, kConventions[k].conv)) ++bad[k];
        });
        for (std::size_t k = 0; k < bad.size(); ++k) {
            const std::string name = kConventions[k].name;
            t.max("max_bad." + name, bad[k]);
            if (bad[k] > 6) t.add("pairs_over_6." + name);
            if (name == declared) {
                t.observe(bad[k]);
                if (bad[k] == 6) ++t.equality;
                t.check(bad[k] <= 6, x, y, "bad count " + num(bad[k]) + " > 6 under " + name);
            }
        }
    });
    for (const auto& nc : kConventions) {
        t.max(std::string("max_bad.") + nc.name, 0);
        t.add(std::string("pairs_over_6.") + nc.name, 0);
    }
    VerificationReport r = detail::finish("bad-count", n, n, std::move(t), 6, start);
    r.set_detail("convention", declared);
    return r;
}

// ---------------------------------------------------------------------------
// Run-length constraints

VerificationReport verify_rll(int n, int P, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 1) return detail::skipped("rll", n, n, "needs n >= 1");
    if (n > kEnumerationLimit) throw Error(ErrorCode::LimitExceeded, "rll supports n <= 24");
    std::vector<int> periods;
    if (P > 0) periods.push_back(P);
    else
        for (int p = 1; p <= n + 1; ++p) periods.push_back(p);
    const std::int64_t threshold = ceil_log2(n) + 3;

    Tally t = detail::for_each_index_chunked(std::size_t{1} << n, opt, [&](Tally& t, std::size_t v) {
        const Word x(n, v);
        ++t.checked;
        const int direct = max_le2_periodic_length(x);
        // longest constant stretch of psi over positions 2..n
        const Word ps = psi(x);
        int longest = 0;
        int full_longest = n > 0 ? 1 : 0;
        int cur = 0;
        int full_cur = 0;
        for (int k = 0; k < n; ++k) {
            full_cur = (k > 0 && ps[k] == ps[k - 1]) ? full_cur + 1 : 1;
            full_longest = std::max(full_longest, full_cur);
            if (k == 0) continue;
            cur = (k > 1 && ps[k] == ps[k - 1]) ? cur + 1 : 1;
            longest = std::max(longest, cur);
        }
        const int via_psi = n <= 2 ? n : std::max(2, 1 + longest);
        t.check(direct == via_psi, x, Word(), "window scan " + num(direct) + " vs psi runs " + num(via_psi));
        for (int p : periods) {
            const bool member = contains(CodeSpec::rll(n, p), x);
            t.check(member == (via_psi <= p), x, Word(), "RLL(" + num(p) + ") membership disagrees with psi");
            if (full_longest <= p - 1) {
                t.check(member, x, Word(), "psi runs <= P-1 but not in RLL(" + num(p) + ")");
            } else if (member) {
                t.add("sufficient_condition_slack.P" + num(p));
            }
            if (member) t.add("size.P" + num(p));
        }
    });
    for (int p : periods) {
        t.add("size.P" + num(p), 0);
        if (p >= threshold) {
            const std::int64_t sz = t.stat("size.P" + num(p));
            const std::int64_t lower = 3 * (std::int64_t{1} << n) / 4;
            t.check(4 * sz >= 3 * (std::int64_t{1} << n), Word(), Word(),
                    "|R(" + num(n) + "," + num(p) + ")| = " + num(sz) + " < 3*2^(n-2) = " + num(lower));
        }
    }
    VerificationReport r = detail::finish("rll", n, n, std::move(t), 0, start);
    r.set_detail("size_bound_period_threshold", threshold);
    return r;
}

VerificationReport verify_run_bounded(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 1) return detail::skipped("run-bounded", n, n, "needs n >= 1");
    if (n > kEnumerationLimit) throw Error(ErrorCode::LimitExceeded, "run-bounded supports n <= 24");
    const int cap = (n + 1) / 2;
    Tally t = detail::for_each_index_chunked(std::size_t{1} << n, opt, [&](Tally& t, std::size_t v) {
        const Word x(n, v);
        ++t.checked;
        const bool member = contains(CodeSpec::run_bounded(n), x);
        t.check(member == (run_count(x) <= cap), x, Word(), "membership disagrees with r(x) <= ceil(n/2)");
        if (member) t.add("size");
    });
    t.add("size", 0);
    const std::int64_t sz = t.stat("size");
    const auto formula = static_cast<std::int64_t>(run_bounded_size_formula(n));
    t.check(sz == formula, Word(), Word(), "enumerated size " + num(sz) + " vs closed form " + num(formula));
    t.check(sz >= (std::int64_t{1} << (n - 1)), Word(), Word(), "size " + num(sz) + " < 2^(n-1)");
    t.observe(sz);
    VerificationReport r = detail::finish("run-bounded", n, n, std::move(t), std::int64_t{1} << n, start);
    r.set_detail("closed_form", formula);
    r.set_detail("half_space", std::int64_t{1} << (n - 1));
    return r;
}

}  // namespace delsub
