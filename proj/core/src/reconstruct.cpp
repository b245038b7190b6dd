#include "delsub/reconstruct.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "delsub/error_balls.hpp"

namespace delsub {

namespace {

DecodeResult finish(std::vector<Word> candidates) {
    DecodeResult r;
    r.candidates = std::move(candidates);
    if (r.candidates.empty()) r.status = DecodeStatus::Inconsistent;
    else if (r.candidates.size() == 1) r.status = DecodeStatus::Unique;
    else r.status = DecodeStatus::Ambiguous;
    return r;
}

void check_bundle(const CodeSpec& spec, const ReadBundle& bundle) {
    spec.validate();
    if (bundle.n != spec.n)
        throw Error(ErrorCode::LengthMismatch, "bundle n=" + std::to_string(bundle.n) + " differs from code n=" + std::to_string(spec.n));
    if (!bundle.reads.empty() && bundle.reads.word_length() != spec.n - 1)
        throw Error(ErrorCode::LengthMismatch, "reads must have length n-1");
}

}  // namespace

Word Channel::sample(const Word& x) {
    const int n = x.size();
    if (n < 1) throw Error(ErrorCode::EmptyInput, "channel input must be nonempty");
    const int i = static_cast<int>(rng_.below(static_cast<std::uint64_t>(n))) + 1;
    const int s = static_cast<int>(rng_.below(static_cast<std::uint64_t>(n)));
    // s == n-1 encodes the identity substitution
    return apply_del_sub(x, i, s == n - 1 ? std::nullopt : std::optional<int>(s + 1));
}

Word channel_sample(const Word& x, std::uint64_t seed) { return Channel(seed).sample(x); }

ReadBundle collect_reads(const Word& x, int N, std::uint64_t seed) {
    if (N < 0) throw Error(ErrorCode::InvalidArgument, "N must be non-negative");
    if (x.empty()) throw Error(ErrorCode::EmptyInput, "channel input must be nonempty");
    const std::size_t ball = ds_ball(x).size();
    if (ball < static_cast<std::size_t>(N))
        throw Error(ErrorCode::BallTooSmall,
                    "ball of " + x.str() + " has " + std::to_string(ball) + " elements, fewer than N=" + std::to_string(N));
    Channel channel(seed);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> reads;
    while (reads.size() < static_cast<std::size_t>(N)) {
        const Word z = channel.sample(x);
        if (seen.insert(z.value()).second) reads.push_back(z.value());
    }
    return {x.size(), BallSet(x.size() - 1, std::move(reads))};
}

std::string_view to_string(DecodeStatus status) {
    switch (status) {
        case DecodeStatus::Unique: return "UNIQUE";
        case DecodeStatus::Ambiguous: return "AMBIGUOUS";
        case DecodeStatus::Inconsistent: return "INCONSISTENT";
    }
    return "UNKNOWN";
}

DecodeResult decode(const CodeSpec& spec, int N, const ReadBundle& bundle) {
    if (N < 0) throw Error(ErrorCode::InvalidArgument, "N must be non-negative");
    check_bundle(spec, bundle);
    if (bundle.reads.empty()) return finish(members(spec));

    BallSet pool;
    bool first = true;
    for (Word z : bundle.reads) {
        const BallSet pre = preimage_ball(z, spec.n);
        pool = first ? pre : intersect(pool, pre);
        first = false;
        if (pool.empty()) break;
    }
    std::vector<Word> candidates;
    for (Word c : pool)
        if (contains(spec, c)) candidates.push_back(c);
    return finish(std::move(candidates));
}

DecodeResult decode_by_code_scan(const CodeSpec& spec, const ReadBundle& bundle) {
    check_bundle(spec, bundle);
    std::vector<Word> candidates;
    enumerate(spec, [&](const Word& c) {
        if (c.empty()) return;
        const BallSet ball = ds_ball(c);
        for (Word z : bundle.reads)
            if (!ball.contains(z)) return;
        candidates.push_back(c);
    });
    return finish(std::move(candidates));
}

void write_read_bundle(std::ostream& os, const ReadBundle& bundle, int N) {
    os << "# n=" << bundle.n << " N=" << N << '\n';
    for (Word z : bundle.reads) os << z.str() << '\n';
}

ReadBundleFile read_read_bundle(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.empty() || line[0] != '#')
        throw Error(ErrorCode::ParseError, "read bundle must start with '# n=<n> N=<N>'");
    ReadBundleFile file;
    bool have_n = false;
    bool have_N = false;
    std::istringstream header(line.substr(1));
    std::string token;
    while (header >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "bad header token '" + token + "'");
        const std::string key = token.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(token.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad header value in '" + token + "'");
        }
        if (key == "n") { file.bundle.n = value; have_n = true; }
        else if (key == "N") { file.N = value; have_N = true; }
        else throw Error(ErrorCode::ParseError, "unknown header key '" + key + "'");
    }
    if (!have_n || !have_N) throw Error(ErrorCode::ParseError, "read bundle header needs n= and N=");
    std::vector<Word> reads;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Word z = Word::parse(line);
        if (z.size() != file.bundle.n - 1)
            throw Error(ErrorCode::LengthMismatch, "read '" + line + "' does not have length n-1");
        reads.push_back(z);
    }
    const std::size_t count = reads.size();
    file.bundle.reads = BallSet::from_words(file.bundle.n - 1, reads);
    if (file.bundle.reads.size() != count) throw Error(ErrorCode::ParseError, "read bundle contains duplicate reads");
    return file;
}

}  // namespace delsub
