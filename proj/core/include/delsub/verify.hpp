#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "delsub/codes.hpp"
#include "delsub/error_balls.hpp"
#include "delsub/reconstruct.hpp"

namespace delsub {

enum class Verdict { Pass, Fail, Skipped };

std::string_view to_string(Verdict v);

struct Counterexample {
    std::string x;
    std::string y;  // empty when the check concerns a single word
    std::string reason;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

using DetailValue = std::variant<std::int64_t, double, std::string, bool>;

struct VerificationReport {
    std::string target;
    int n_min = 0;
    int n_max = 0;
    Verdict verdict = Verdict::Pass;
    std::uint64_t pairs_checked = 0;
    std::int64_t extremal_observed = 0;
    std::int64_t bound = 0;
    std::uint64_t equality_cases = 0;
    std::vector<Counterexample> counterexamples;
    std::uint64_t counterexamples_total = 0;
    std::vector<std::pair<std::string, DetailValue>> details;
    double elapsed = 0.0;  // seconds; rendered only on request

    const DetailValue* detail(std::string_view key) const;
    void set_detail(std::string key, DetailValue value);
};

// Folds per-n reports into one: sums counts, takes maxima of extremal and
// bound, concatenates counterexamples (capped), FAIL dominates, all-SKIPPED
// stays SKIPPED. Details are prefixed with "n=<n>." when several n differ.
VerificationReport combine_reports(std::string target, const std::vector<VerificationReport>& parts,
                                   std::size_t max_counterexamples = 20);

struct VerifyOptions {
    int jobs = 1;
    std::size_t max_counterexamples = 20;
    // intersection-bounds: enumerate the lemma shapes instead of all pairs
    bool structured = false;
    WitnessConvention convention{FlipIndex::PreDeletion, true};
    std::uint64_t seed = kDefaultSeed;
    // rll / cp-lemma period; 0 selects the default
    int P = 0;
    // reconstruction
    int N = 7;
    int trials = 1000;
    int subset_words = 20;
    int subsets_per_word = 100;
    std::optional<CodeSpec> spec;
};

constexpr int kExhaustiveLimit = 14;
constexpr int kStructuredLimit = 20;

VerificationReport verify_ball_sizes(int n, const VerifyOptions& opt = {});
VerificationReport verify_del_positions(int n, const VerifyOptions& opt = {});
VerificationReport verify_constrained_deletion(int n, const VerifyOptions& opt = {});
VerificationReport verify_pair_structure(int n, const VerifyOptions& opt = {});
VerificationReport verify_decomposition(int n, const VerifyOptions& opt = {});
VerificationReport verify_intersection_bounds(int n, const VerifyOptions& opt = {});
VerificationReport verify_claim_tables(int n_max, const VerifyOptions& opt = {});
VerificationReport verify_bad_count(int n, const VerifyOptions& opt = {});
VerificationReport verify_rll(int n, int P, const VerifyOptions& opt = {});
VerificationReport verify_run_bounded(int n, const VerifyOptions& opt = {});
VerificationReport verify_vt_lemma(int n, const VerifyOptions& opt = {});
VerificationReport verify_cp_lemma(int n, const VerifyOptions& opt = {});
VerificationReport verify_list_decoding(int n, const VerifyOptions& opt = {});

enum class TheoremId { Thm1, Thm2, Thm3, Thm4, Thm5, Thm6 };

std::string_view to_string(TheoremId id);
TheoremId parse_theorem(std::string_view text);

VerificationReport verify_code_theorem(TheoremId id, int n, const VerifyOptions& opt = {});
VerificationReport verify_reconstruction(const CodeSpec& spec, int N, int trials, std::uint64_t seed,
                                         const VerifyOptions& opt = {});

// Named entry points used by the CLI and the acceptance suite.
struct VerifyTarget {
    std::string name;
    std::string description;
    int default_n_min;
    int default_n_max;
    std::function<VerificationReport(int n, const VerifyOptions&)> run;
};

const std::vector<VerifyTarget>& verify_targets();
const VerifyTarget& find_verify_target(std::string_view name);

// Exhaustive pair engine: per-word B(x) bitsets, D(x) lists and run counts
// over a fixed word list, so a pair costs one AND-popcount.
class PairEngine {
public:
    explicit PairEngine(int n);
    PairEngine(int n, std::vector<std::uint64_t> words);

    int n() const noexcept { return n_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }
    int run_count(std::size_t i) const noexcept { return runs_[i]; }

    std::size_t total(std::size_t i, std::size_t j) const noexcept;
    int deletion_overlap(std::size_t i, std::size_t j) const noexcept;
    int substitution_overlap(std::size_t i, std::size_t j) const noexcept;
    // calls visit(code) for every member of B(x_i) ∩ B(x_j)
    void for_each_common(std::size_t i, std::size_t j, const std::function<void(std::uint64_t)>& visit) const;
    // |B(x_i) ∩ B(x_j) ∩ B(x_k)|
    std::size_t triple_total(std::size_t i, std::size_t j, std::size_t k) const noexcept;

private:
    int n_;
    std::size_t stride_;
    std::vector<std::uint64_t> words_;
    std::vector<int> runs_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> del_offsets_;
    std::vector<std::uint64_t> dels_;
};

}  // namespace delsub
