#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "delsub/verify.hpp"
#include "parallel.hpp"

namespace delsub::detail {

enum class Fold { Max, Min, Sum };

struct Stat {
    std::int64_t value = 0;
    Fold fold = Fold::Sum;
};

// Per-chunk accumulator; chunks are merged in index order.
struct Tally {
    std::size_t cap = 20;
    std::uint64_t checked = 0;
    std::int64_t extremal = 0;
    std::uint64_t equality = 0;
    std::vector<Counterexample> counterexamples;
    std::uint64_t failures = 0;
    std::map<std::string, Stat> stats;

    explicit Tally(std::size_t cap_ = 20) : cap(cap_) {}

    void fail(std::string x, std::string y, std::string reason) {
        ++failures;
        if (counterexamples.size() < cap)
            counterexamples.push_back({std::move(x), std::move(y), std::move(reason)});
    }
    void fail(const Word& x, const Word& y, std::string reason) { fail(x.str(), y.str(), std::move(reason)); }
    void fail(const Word& x, std::string reason) { fail(x.str(), std::string(), std::move(reason)); }

    // false when the check fails
    bool check(bool ok, const Word& x, const Word& y, const std::string& reason) {
        if (!ok) fail(x, y, reason);
        return ok;
    }

    void observe(std::int64_t v) { extremal = std::max(extremal, v); }

    void fold(const std::string& key, std::int64_t v, Fold f) {
        auto [it, fresh] = stats.try_emplace(key, Stat{v, f});
        if (fresh) return;
        switch (f) {
            case Fold::Max: it->second.value = std::max(it->second.value, v); break;
            case Fold::Min: it->second.value = std::min(it->second.value, v); break;
            case Fold::Sum: it->second.value += v; break;
        }
    }
    void max(const std::string& key, std::int64_t v) { fold(key, v, Fold::Max); }
    void min(const std::string& key, std::int64_t v) { fold(key, v, Fold::Min); }
    void add(const std::string& key, std::int64_t v = 1) { fold(key, v, Fold::Sum); }

    std::int64_t stat(const std::string& key, std::int64_t fallback = 0) const {
        auto it = stats.find(key);
        return it == stats.end() ? fallback : it->second.value;
    }

    void merge(Tally&& o) {
        checked += o.checked;
        extremal = std::max(extremal, o.extremal);
        equality += o.equality;
        failures += o.failures;
        for (auto& c : o.counterexamples) {
            if (counterexamples.size() >= cap) break;
            counterexamples.push_back(std::move(c));
        }
        for (auto& [k, s] : o.stats) fold(k, s.value, s.fold);
    }
};

inline Tally merge_all(std::vector<Tally>&& parts, std::size_t cap) {
    Tally out(cap);
    for (auto& p : parts) out.merge(std::move(p));
    return out;
}

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

inline VerificationReport finish(std::string target, int n_min, int n_max, Tally&& t, std::int64_t bound,
                                 Clock::time_point start) {
    VerificationReport r;
    r.target = std::move(target);
    r.n_min = n_min;
    r.n_max = n_max;
    r.pairs_checked = t.checked;
    r.extremal_observed = t.extremal;
    r.bound = bound;
    r.equality_cases = t.equality;
    r.counterexamples = std::move(t.counterexamples);
    r.counterexamples_total = t.failures;
    r.verdict = t.failures == 0 ? Verdict::Pass : Verdict::Fail;
    for (auto& [k, s] : t.stats) r.details.emplace_back(k, s.value);
    r.elapsed = seconds_since(start);
    return r;
}

inline VerificationReport skipped(std::string target, int n_min, int n_max, std::string why) {
    VerificationReport r;
    r.target = std::move(target);
    r.n_min = n_min;
    r.n_max = n_max;
    r.verdict = Verdict::Skipped;
    r.details.emplace_back("skipped", std::move(why));
    return r;
}

// Splits the pair triangle {(i, j) : i < j < count} into fixed row blocks.
constexpr std::size_t kPairChunks = 256;

template <class Fn>
Tally for_each_pair_chunked(std::size_t count, const VerifyOptions& opt, Fn visit_pair) {
    const std::size_t chunks = std::min<std::size_t>(kPairChunks, count == 0 ? 1 : count);
    auto parts = run_chunks<Tally>(chunks, opt.jobs, [&](std::size_t c) {
        Tally t(opt.max_counterexamples);
        const std::size_t lo = count * c / chunks;
        const std::size_t hi = count * (c + 1) / chunks;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < count; ++j) visit_pair(t, i, j);
        return t;
    });
    return merge_all(std::move(parts), opt.max_counterexamples);
}

template <class Fn>
Tally for_each_index_chunked(std::size_t count, const VerifyOptions& opt, Fn visit) {
    const std::size_t chunks = std::min<std::size_t>(kPairChunks, count == 0 ? 1 : count);
    auto parts = run_chunks<Tally>(chunks, opt.jobs, [&](std::size_t c) {
        Tally t(opt.max_counterexamples);
        const std::size_t lo = count * c / chunks;
        const std::size_t hi = count * (c + 1) / chunks;
        for (std::size_t i = lo; i < hi; ++i) visit(t, i);
        return t;
    });
    return merge_all(std::move(parts), opt.max_counterexamples);
}

inline std::string num(std::int64_t v) { return std::to_string(v); }

}  // namespace delsub::detail
