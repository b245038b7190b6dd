#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <string>

#include "delsub/verify.hpp"
#include "verify_common.hpp"

namespace delsub {

using detail::Clock;
using detail::num;
using detail::Tally;

namespace {

using CosetKey = std::array<std::int64_t, 4>;

CosetKey key_of(const CodeParams& p) { return {p.a, p.a0, p.a1, p.a2}; }

struct Coset {
    CodeSpec spec;
    std::vector<std::size_t> members;  // indices into Σⁿ (value order)
};

// All nonempty cosets of a residue family, in lexicographic parameter order.
std::vector<Coset> group_cosets(CodeFamily family, int n, const CodeParams& fixed) {
    std::map<CosetKey, Coset> groups;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        auto spec = coset_of(family, n, fixed, Word(n, v));
        if (!spec) continue;
        auto [it, fresh] = groups.try_emplace(key_of(spec->params));
        if (fresh) it->second.spec = *spec;
        it->second.members.push_back(static_cast<std::size_t>(v));
    }
    std::vector<Coset> out;
    out.reserve(groups.size());
    for (auto& [k, g] : groups) out.push_back(std::move(g));
    return out;
}

// Visits every pair inside every coset; chunks are whole cosets or row
// blocks of one large coset, fixed independently of the job count.
template <class Fn>
Tally for_each_coset_pair(const std::vector<Coset>& cosets, const VerifyOptions& opt, Fn visit) {
    struct Task {
        std::size_t coset;
        std::size_t lo;
        std::size_t hi;
    };
    std::vector<Task> tasks;
    for (std::size_t g = 0; g < cosets.size(); ++g) {
        const std::size_t m = cosets[g].members.size();
        const std::size_t blocks = std::clamp<std::size_t>(m / 64, 1, detail::kPairChunks);
        for (std::size_t b = 0; b < blocks; ++b) tasks.push_back({g, m * b / blocks, m * (b + 1) / blocks});
    }
    auto parts = detail::run_chunks<Tally>(tasks.size(), opt.jobs, [&](std::size_t k) {
        Tally t(opt.max_counterexamples);
        const Task& task = tasks[k];
        const auto& mem = cosets[task.coset].members;
        for (std::size_t i = task.lo; i < task.hi; ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j) visit(t, task.coset, mem[i], mem[j]);
        return t;
    });
    return detail::merge_all(std::move(parts), opt.max_counterexamples);
}

struct TheoremInfo {
    const char* name;
    CodeFamily family;
    CodeParams fixed;
    int n_threshold;
    std::int64_t N;           // reconstruction parameter; pairs must stay below it
    double redundancy_bound;
};

TheoremInfo theorem_info(TheoremId id, int n) {
    const double lg = std::log2(static_cast<double>(n));
    switch (id) {
        case TheoremId::Thm1: return {"thm1", CodeFamily::Full, {}, 5, 4 * n - 8, 0.0};
        case TheoremId::Thm2: return {"thm2", CodeFamily::Inv, CodeParams{.m = 2}, 6, 3 * n - 4, 1.0};
        case TheoremId::Thm3: return {"thm3", CodeFamily::C2n9, CodeParams{.m = 2}, 6, 2 * n + 9, 2.0};
        case TheoremId::Thm4: return {"thm4", CodeFamily::Cn21, {}, 6, n + 21, std::log2(lg) + 3.0};
        case TheoremId::Thm5: return {"thm5", CodeFamily::Vt, {}, 3, 31, lg + 1.0};
        case TheoremId::Thm6: return {"thm6", CodeFamily::Cl, {}, 3, 7, 3.0 * lg + 4.0};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown theorem");
}

constexpr double kRedundancyTolerance = 1e-9;

struct Locality {
    std::int64_t violations_pre = 0;
    std::int64_t violations_post = 0;
};

// Counts witness combinations whose flips leave the deletion interval.
void locality_check(Tally& t, const Word& x, const Word& y, const PairEngine& engine, std::size_t i, std::size_t j) {
    const int n = x.size();
    engine.for_each_common(i, j, [&](std::uint64_t code) {
        const Word z(n - 1, code);
        const auto wx = witnesses(x, z);
        const auto wy = witnesses(y, z);
        bool bad_pre = false;
        bool bad_post = false;
        for (const Witness& a : wx) {
            for (const Witness& b : wy) {
                const int lo = std::min(a.del_pos, b.del_pos);
                const int hi = std::max(a.del_pos, b.del_pos);
                for (const Witness* w : {&a, &b}) {
                    if (!w->sub_pos) continue;
                    const int post = *w->sub_pos;
                    const int pre = post >= w->del_pos ? post + 1 : post;
                    if (post < lo || post > hi) bad_post = true;
                    if (pre < lo || pre > hi) bad_pre = true;
                }
            }
        }
        if (bad_pre) t.add("locality_violations.pre");
        if (bad_post) t.add("locality_violations.post");
        t.add("locality_elements");
    });
}

}  // namespace

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::Thm1: return "thm1";
        case TheoremId::Thm2: return "thm2";
        case TheoremId::Thm3: return "thm3";
        case TheoremId::Thm4: return "thm4";
        case TheoremId::Thm5: return "thm5";
        case TheoremId::Thm6: return "thm6";
    }
    return "?";
}

TheoremId parse_theorem(std::string_view text) {
    std::string s;
    for (char ch : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (s.rfind("thm", 0) == 0) s = s.substr(3);
    if (s.size() == 1 && s[0] >= '1' && s[0] <= '6') return static_cast<TheoremId>(s[0] - '1');
    throw Error(ErrorCode::InvalidArgument, "unknown theorem '" + std::string(text) + "' (expected thm1..thm6)");
}

VerificationReport verify_code_theorem(TheoremId id, int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    const TheoremInfo info = theorem_info(id, n);
    const std::string target = info.name;
    if (n < info.n_threshold) return detail::skipped(target, n, n, "needs n >= " + std::to_string(info.n_threshold));
    if (n > kExhaustiveLimit) throw Error(ErrorCode::LimitExceeded, target + " supports n <= 14");

    std::vector<Coset> cosets;
    if (info.family == CodeFamily::Full) {
        Coset all{CodeSpec::full(n), {}};
        for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) all.members.push_back(v);
        cosets.push_back(std::move(all));
    } else {
        cosets = group_cosets(info.family, n, info.fixed);
    }
    const PairEngine engine(n);
    const std::int64_t limit = info.N - 1;
    const bool triples = id == TheoremId::Thm6;

    Tally t = for_each_coset_pair(cosets, opt, [&](Tally& t, std::size_t g, std::size_t i, std::size_t j) {
        ++t.checked;
        const auto total = static_cast<std::int64_t>(engine.total(i, j));
        t.observe(total);
        if (total == limit) ++t.equality;
        if (total > limit)
            t.fail(Word(n, i), Word(n, j), "|B(x,y)| = " + num(total) + " >= N = " + num(info.N) + " in " + cosets[g].spec.describe());
        if (triples && total > 0) {
            const auto& mem = cosets[g].members;
            for (auto it = std::upper_bound(mem.begin(), mem.end(), j); it != mem.end(); ++it) {
                t.add("triples_checked");
                const auto tt = static_cast<std::int64_t>(engine.triple_total(i, j, *it));
                if (tt != 0)
                    t.fail(Word(n, i), Word(n, j), "B(x) ∩ B(y) ∩ B(" + Word(n, *it).str() + ") has " + num(tt) + " words");
            }
        }
    });
    t.add("triples_checked", 0);

    // redundancy of the best coset, found independently by best_coset()
    CodeSpec best = info.family == CodeFamily::Full ? CodeSpec::full(n) : best_coset(info.family, n, info.fixed);
    const std::uint64_t best_size = size(best);
    std::size_t largest = 0;
    for (const auto& c : cosets) largest = std::max(largest, c.members.size());
    t.check(best_size == largest, Word(), Word(),
            "best_coset size " + num(static_cast<std::int64_t>(best_size)) + " but largest grouped coset has " +
                num(static_cast<std::int64_t>(largest)));
    const double red = n - std::log2(static_cast<double>(best_size));
    t.check(red <= info.redundancy_bound + kRedundancyTolerance, Word(), Word(),
            "best-coset redundancy " + std::to_string(red) + " exceeds " + std::to_string(info.redundancy_bound));

    VerificationReport r = detail::finish(target, n, n, std::move(t), limit, start);
    r.set_detail("N", info.N);
    r.set_detail("cosets_nonempty", static_cast<std::int64_t>(cosets.size()));
    if (info.family != CodeFamily::Full)
        r.set_detail("cosets_total", static_cast<std::int64_t>(coset_count(info.family, n, info.fixed)));
    r.set_detail("best_coset", best.describe());
    r.set_detail("best_size", static_cast<std::int64_t>(best_size));
    r.set_detail("redundancy", red);
    r.set_detail("redundancy_bound", info.redundancy_bound);
    if (id == TheoremId::Thm6) {
        const double alt = std::log2(3.0 * n) + 4.0;
        r.set_detail("redundancy_bound_alt", alt);
        r.set_detail("within_alt_bound", red <= alt + kRedundancyTolerance);
    }
    return r;
}

VerificationReport verify_list_decoding(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 3) return detail::skipped("list-decoding", n, n, "needs n >= 3");
    if (n > kExhaustiveLimit) throw Error(ErrorCode::LimitExceeded, "list-decoding supports n <= 14");
    const std::vector<Coset> cosets = group_cosets(CodeFamily::Cl, n, {});
    const PairEngine engine(n);
    Tally t = for_each_coset_pair(cosets, opt, [&](Tally& t, std::size_t g, std::size_t i, std::size_t j) {
        ++t.checked;
        const auto total = static_cast<std::int64_t>(engine.total(i, j));
        t.observe(total);
        if (total == 0) return;
        const auto& mem = cosets[g].members;
        for (auto it = std::upper_bound(mem.begin(), mem.end(), j); it != mem.end(); ++it) {
            t.add("triples_checked");
            if (engine.triple_total(i, j, *it) != 0)
                t.fail(Word(n, i), Word(n, j), "triple intersection with " + Word(n, *it).str() + " is nonempty");
        }
        locality_check(t, Word(n, i), Word(n, j), engine, i, j);
    });
    for (const char* k : {"triples_checked", "locality_violations.pre", "locality_violations.post", "locality_elements"})
        t.add(k, 0);
    const bool pre_ok = t.stat("locality_violations.pre") == 0;
    const bool post_ok = t.stat("locality_violations.post") == 0;
    t.check(pre_ok || post_ok, Word(), Word(), "flip locality fails under both index conventions");
    VerificationReport r = detail::finish("list-decoding", n, n, std::move(t), 6, start);
    r.set_detail("locality_convention", std::string(pre_ok && post_ok ? "both" : pre_ok ? "pre" : post_ok ? "post" : "none"));
    return r;
}

VerificationReport verify_vt_lemma(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 1) return detail::skipped("vt-lemma", n, n, "needs n >= 1");
    if (n > kExhaustiveLimit) throw Error(ErrorCode::LimitExceeded, "vt-lemma supports n <= 14");
    const std::vector<Coset> cosets = group_cosets(CodeFamily::Vt, n, {});
    const PairEngine engine(n);
    Tally t = for_each_coset_pair(cosets, opt, [&](Tally& t, std::size_t, std::size_t i, std::size_t j) {
        ++t.checked;
        const int d = engine.deletion_overlap(i, j);
        const int s = engine.substitution_overlap(i, j);
        t.observe(d + s);
        if (d != 0 || s != 0) t.fail(Word(n, i), Word(n, j), "(d,s) = (" + num(d) + "," + num(s) + ")");
    });
    VerificationReport r = detail::finish("vt-lemma", n, n, std::move(t), 0, start);
    r.set_detail("cosets_nonempty", static_cast<std::int64_t>(cosets.size()));
    return r;
}

VerificationReport verify_cp_lemma(int n, const VerifyOptions& opt) {
    const auto start = Clock::now();
    if (n < 1) return detail::skipped("cp-lemma", n, n, "needs n >= 1");
    if (n > kExhaustiveLimit) throw Error(ErrorCode::LimitExceeded, "cp-lemma supports n <= 14");
    const std::int64_t P = opt.P > 0 ? opt.P : default_rll_period(n);
    const std::vector<Coset> cosets = group_cosets(CodeFamily::Cp, n, CodeParams{.P = P});
    const PairEngine engine(n);
    Tally t = for_each_coset_pair(cosets, opt, [&](Tally& t, std::size_t, std::size_t i, std::size_t j) {
        ++t.checked;
        const int d = engine.deletion_overlap(i, j);
        t.observe(d);
        if (d == 1) ++t.equality;
        if (d > 1) t.fail(Word(n, i), Word(n, j), "|D(x,y)| = " + num(d));
    });
    VerificationReport r = detail::finish("cp-lemma", n, n, std::move(t), 1, start);
    r.set_detail("P", P);
    r.set_detail("cosets_nonempty", static_cast<std::int64_t>(cosets.size()));
    return r;
}

// ---------------------------------------------------------------------------
// Reconstruction round trip

VerificationReport verify_reconstruction(const CodeSpec& spec, int N, int trials, std::uint64_t seed,
                                         const VerifyOptions& opt) {
    const auto start = Clock::now();
    spec.validate();
    const int n = spec.n;
    const std::string target = "reconstruction";
    if (n < 2) return detail::skipped(target, n, n, "needs n >= 2");
    if (N < 1) throw Error(ErrorCode::InvalidArgument, "parameter N=" + std::to_string(N) + " must be positive");
    Tally t(opt.max_counterexamples);

    const std::vector<Word> code = members(spec);
    std::vector<Word> eligible;
    for (const Word& x : code) {
        if (ds_ball(x).size() >= static_cast<std::size_t>(N)) eligible.push_back(x);
        else t.add("excluded_small_ball");
    }
    t.add("excluded_small_ball", 0);
    t.add("code_size", static_cast<std::int64_t>(code.size()));
    if (eligible.empty()) {
        VerificationReport r = detail::skipped(target, n, n, "no codeword has a ball of size >= N");
        r.set_detail("spec", spec.describe());
        return r;
    }

    const bool scan_oracle = n <= 10;
    SplitMix64 rng(seed);
    for (int k = 0; k < trials; ++k) {
        const Word x = eligible[rng.below(eligible.size())];
        const ReadBundle bundle = collect_reads(x, N, rng.next());
        const DecodeResult res = decode(spec, N, bundle);
        ++t.checked;
        t.add("trials");
        const bool ok = res.status == DecodeStatus::Unique && res.candidates.size() == 1 && res.candidates[0] == x;
        if (!ok) t.fail(x, "channel trial " + num(k) + " decoded " + std::string(to_string(res.status)));
        if (scan_oracle) {
            const DecodeResult alt = decode_by_code_scan(spec, bundle);
            t.check(alt.status == res.status && alt.candidates == res.candidates, x, Word(),
                    "code-scan decoder disagrees on trial " + num(k));
        }
    }
    t.add("trials", 0);

    // sampled N-subsets of individual balls; short codes borrow words from
    // the next-largest cosets, each decoded against its own coset
    std::vector<std::pair<Word, CodeSpec>> subjects;
    for (const Word& x : eligible) {
        if (static_cast<int>(subjects.size()) >= opt.subset_words) break;
        subjects.emplace_back(x, spec);
    }
    t.add("subset_words_from_spec", static_cast<std::int64_t>(subjects.size()));
    if (static_cast<int>(subjects.size()) < opt.subset_words && has_residue_parameters(spec.family)) {
        std::vector<Coset> cosets = group_cosets(spec.family, n, spec.params);
        std::stable_sort(cosets.begin(), cosets.end(),
                         [](const Coset& a, const Coset& b) { return a.members.size() > b.members.size(); });
        std::int64_t borrowed = 0;
        for (const Coset& c : cosets) {
            if (c.spec == spec) continue;
            for (std::size_t v : c.members) {
                if (static_cast<int>(subjects.size()) >= opt.subset_words) break;
                const Word x(n, v);
                if (ds_ball(x).size() < static_cast<std::size_t>(N)) continue;
                subjects.emplace_back(x, c.spec);
                ++borrowed;
            }
            if (static_cast<int>(subjects.size()) >= opt.subset_words) break;
        }
        t.add("subset_words_from_other_cosets", borrowed);
    }
    t.add("subset_words_from_other_cosets", 0);

    SplitMix64 pick(seed ^ 0x5DEECE66Dull);
    for (const auto& [x, own] : subjects) {
        const BallSet ball = ds_ball(x);
        std::vector<std::uint64_t> pool(ball.codes().begin(), ball.codes().end());
        for (int s = 0; s < opt.subsets_per_word; ++s) {
            for (int k = 0; k < N; ++k) {
                const std::size_t r = k + static_cast<std::size_t>(pick.below(pool.size() - k));
                std::swap(pool[k], pool[r]);
            }
            ReadBundle bundle{n, BallSet(n - 1, std::vector<std::uint64_t>(pool.begin(), pool.begin() + N))};
            const DecodeResult res = decode(own, N, bundle);
            ++t.checked;
            t.add("subsets");
            const bool ok = res.status == DecodeStatus::Unique && res.candidates.size() == 1 && res.candidates[0] == x;
            if (!ok) t.fail(x, "subset " + num(s) + " decoded " + std::string(to_string(res.status)) + " in " + own.describe());
        }
    }
    t.add("subsets", 0);

    VerificationReport r = detail::finish(target, n, n, std::move(t), N - 1, start);
    r.set_detail("spec", spec.describe());
    r.set_detail("N", static_cast<std::int64_t>(N));
    r.set_detail("seed", std::to_string(seed));
    return r;
}

// ---------------------------------------------------------------------------
// Registry

const std::vector<VerifyTarget>& verify_targets() {
    static const std::vector<VerifyTarget> targets = [] {
        std::vector<VerifyTarget> v;
        v.push_back({"ball-sizes", "|D(x)| = r(x) and |S(x)| = n+1", 1, 12, verify_ball_sizes});
        v.push_back({"del-positions", "run-indexed deletions are at Hamming distance j-i", 1, 12, verify_del_positions});
        v.push_back({"constrained-deletion", "|F| <= 3 and |F| = 3 implies u in F", 0, 8, verify_constrained_deletion});
        v.push_back({"pair-structure", "|D(x,y)|, |S(x,y)| and their explicit shapes", 2, 11, verify_pair_structure});
        v.push_back({"decomposition", "B = B_extra + D + S - (D ∩ S) on all pairs", 1, 10, verify_decomposition});
        v.push_back({"intersection-bounds", "per-(d,s) ceilings, global 4n-9 and equality sets", 6, 12,
                     verify_intersection_bounds});
        v.push_back({"claim-tables", "structured table rows and claims up to n", 16, 16, verify_claim_tables});
        v.push_back({"bad-count", "at most 6 bad words for (0,0) pairs", 4, 10, verify_bad_count});
        for (int k = 1; k <= 6; ++k) {
            const auto id = static_cast<TheoremId>(k - 1);
            const int lo = id == TheoremId::Thm4 ? 10 : id == TheoremId::Thm1 ? 5 : 8;
            v.push_back({std::string(to_string(id)), "pairwise |B(x,y)| below N and best-coset redundancy", lo, 12,
                         [id](int n, const VerifyOptions& o) { return verify_code_theorem(id, n, o); }});
        }
        v.push_back({"list-decoding", "triple intersections empty and flip locality in C_L", 8, 10, verify_list_decoding});
        v.push_back({"rll", "window scan vs psi runs and the 3*2^(n-2) size bound", 1, 14,
                     [](int n, const VerifyOptions& o) { return verify_rll(n, o.P, o); }});
        v.push_back({"run-bounded", "closed-form size and the 2^(n-1) bound", 1, 16, verify_run_bounded});
        v.push_back({"vt-lemma", "VT cosets have empty D(x,y) and S(x,y)", 2, 12, verify_vt_lemma});
        v.push_back({"cp-lemma", "C_P cosets have |D(x,y)| <= 1", 4, 12, verify_cp_lemma});
        v.push_back({"reconstruction", "seeded channel and sampled-subset round trips", 10, 10,
                     [](int n, const VerifyOptions& o) {
                         const CodeSpec spec = o.spec ? *o.spec : best_coset(CodeFamily::Cl, n);
                         if (spec.n != n)
                             throw Error(ErrorCode::LengthMismatch, "code length differs from --n");
                         return verify_reconstruction(spec, o.N, o.trials, o.seed, o);
                     }});
        return v;
    }();
    return targets;
}

const VerifyTarget& find_verify_target(std::string_view name) {
    for (const auto& t : verify_targets())
        if (t.name == name) return t;
    throw Error(ErrorCode::InvalidArgument, "unknown verification target '" + std::string(name) + "'");
}

}  // namespace delsub
