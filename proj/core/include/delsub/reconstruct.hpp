#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "delsub/ball_set.hpp"
#include "delsub/codes.hpp"
#include "delsub/rng.hpp"
#include "delsub/word.hpp"

namespace delsub {

constexpr std::uint64_t kDefaultSeed = 20240607;

// One deletion then one flip-or-nothing, (i, î) uniform over [n] x ([n-1] + NONE).
class Channel {
public:
    explicit Channel(std::uint64_t seed) : rng_(seed) {}
    Word sample(const Word& x);

private:
    SplitMix64 rng_;
};

Word channel_sample(const Word& x, std::uint64_t seed);

struct ReadBundle {
    int n = 0;
    BallSet reads;
};

ReadBundle collect_reads(const Word& x, int N, std::uint64_t seed);

enum class DecodeStatus { Unique, Ambiguous, Inconsistent };

std::string_view to_string(DecodeStatus status);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Inconsistent;
    std::vector<Word> candidates;
};

DecodeResult decode(const CodeSpec& spec, int N, const ReadBundle& bundle);
// Scans every codeword; used to cross-check decode() on small n.
DecodeResult decode_by_code_scan(const CodeSpec& spec, const ReadBundle& bundle);

struct ReadBundleFile {
    int N = 0;
    ReadBundle bundle;
};

void write_read_bundle(std::ostream& os, const ReadBundle& bundle, int N);
ReadBundleFile read_read_bundle(std::istream& is);

}  // namespace delsub
