#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "delsub/codes.hpp"
#include "delsub/error_balls.hpp"
#include "delsub/reconstruct.hpp"
#include "delsub/report.hpp"
#include "delsub/sequences.hpp"
#include "delsub/verify.hpp"

namespace delsub::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void usage(const std::string& flag, const std::string& what) {
    throw UsageError(flag + ": " + what);
}

// Runs fn, turning library errors into a usage error attributed to `flag`.
template <class Fn>
auto attributed(const std::string& flag, Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        usage(flag, e.what());
    }
}

Word parse_word(const std::string& flag, const std::string& text) {
    return attributed(flag, [&] { return Word::parse(text); });
}

Json words_json(const std::vector<Word>& words) {
    Json j = Json::array();
    for (const auto& w : words) j.push_back(w.str());
    return j;
}

Json words_json(const BallSet& set) { return words_json(set.words()); }

Json witness_json(const std::vector<Witness>& ws) {
    Json j = Json::array();
    for (const auto& w : ws) {
        Json e;
        e["del"] = w.del_pos;
        e["sub"] = w.sub_pos ? Json(*w.sub_pos) : Json(nullptr);
        j.push_back(e);
    }
    return j;
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

bool all_scalars(const Json& j) {
    return std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_structured(); });
}

// "key: value" lines; nested keys are joined with dots.
void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && all_scalars(j)) {
        if (prefix.empty()) {
            for (const auto& e : j) os << scalar_text(e) << '\n';
        } else {
            os << prefix << ':';
            for (const auto& e : j) os << ' ' << scalar_text(e);
            os << '\n';
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else if (prefix.empty()) {
        os << scalar_text(j) << '\n';
    } else {
        const std::string text = scalar_text(j);
        os << prefix << ':' << (text.empty() ? "" : " ") << text << '\n';
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string render_csv(const Json& rows) {
    if (!rows.is_array() || rows.empty() || !rows[0].is_object())
        usage("--format", "csv is only available for tabular output");
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : rows[0].items()) {
        os << (first ? "" : ",") << csv_field(k);
        first = false;
    }
    os << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& [k, v] : rows[0].items()) {
            os << (first ? "" : ",") << csv_field(row.contains(k) ? scalar_text(row[k]) : std::string());
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

struct Output {
    std::string format;  // empty selects the command's native format
    std::string path;

    std::string render(const Json& j) const {
        if (format == "text") {
            std::ostringstream os;
            flatten(j, "", os);
            return os.str();
        }
        if (format == "csv") return render_csv(j);
        return j.dump(2) + "\n";
    }
};

void emit(const Output& o, const std::string& payload, std::ostream& out) {
    if (o.path.empty() || o.path == "-") {
        out << payload;
        return;
    }
    std::ofstream file(o.path, std::ios::binary | std::ios::trunc);
    if (!file) usage("--out", "cannot open '" + o.path + "' for writing");
    file << payload;
}

std::string slurp(const std::string& flag, const std::string& path, std::istream& fallback) {
    std::ostringstream os;
    if (path == "-") {
        os << fallback.rdbuf();
        return os.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) usage(flag, "cannot open '" + path + "'");
    os << file.rdbuf();
    return os.str();
}

// --family and its parameter flags
struct SpecFlags {
    std::string family;
    std::optional<int> n;
    std::optional<std::int64_t> a, m, P, a0, a1, a2;

    void add(CLI::App* app, bool family_required, bool with_n = true) {
        auto* f = app->add_option("--family", family, "code family id");
        if (family_required) f->required();
        if (with_n) app->add_option("--n", n, "code length")->check(CLI::Range(0, Word::kMaxLength));
        app->add_option("--a", a, "residue a");
        app->add_option("--m", m, "modulus m");
        app->add_option("--P", P, "period bound P");
        app->add_option("--a0", a0, "residue a0");
        app->add_option("--a1", a1, "residue a1");
        app->add_option("--a2", a2, "residue a2");
    }

    CodeFamily parsed_family() const {
        return attributed("--family", [&] { return parse_family(family); });
    }

    int length(std::optional<int> fallback = std::nullopt) const {
        if (n) return *n;
        if (fallback) return *fallback;
        usage("--n", "required");
    }

    // the fixed (non-coset) parameters with their defaults
    CodeParams fixed(CodeFamily f, int len) const {
        CodeParams p;
        switch (f) {
            case CodeFamily::Inv:
            case CodeFamily::VtMod:
            case CodeFamily::EvenPos:
            case CodeFamily::C2n9:
                if (!m) usage("--m", "required for family " + std::string(family_id(f)));
                p.m = *m;
                break;
            case CodeFamily::Rll:
            case CodeFamily::Cp:
            case CodeFamily::Cn21:
                p.P = P ? *P : attributed("--n", [&] { return static_cast<std::int64_t>(default_rll_period(len)); });
                break;
            default: break;
        }
        return p;
    }

    CodeSpec spec(std::optional<int> fallback_n = std::nullopt) const {
        const CodeFamily f = parsed_family();
        CodeSpec s;
        s.family = f;
        s.n = length(fallback_n);
        s.params = fixed(f, s.n);
        s.params.a = a.value_or(0);
        s.params.a0 = a0.value_or(0);
        s.params.a1 = a1.value_or(0);
        s.params.a2 = a2.value_or(0);
        validate(s);
        return s;
    }

    static void validate(const CodeSpec& s) {
        try {
            s.validate();
        } catch (const Error& e) {
            // messages read "parameter <name>=..."
            const std::string msg = e.what();
            const std::string key = "parameter ";
            if (msg.rfind(key, 0) == 0) {
                const auto eq = msg.find('=', key.size());
                usage("--" + msg.substr(key.size(), eq - key.size()), msg);
            }
            usage("--family", msg);
        }
    }
};

Json spec_json(const CodeSpec& s) {
    Json j;
    j["family"] = std::string(family_id(s.family));
    j["n"] = s.n;
    j["params"] = s.params_string();
    return j;
}

Json code_info(const CodeSpec& s) {
    Json j = spec_json(s);
    const std::uint64_t k = attributed("--n", [&] { return size(s); });
    j["size"] = k;
    j["redundancy"] = k == 0 ? Json(nullptr) : Json(redundancy(s));
    if (has_residue_parameters(s.family)) j["coset_count"] = coset_count(s.family, s.n, s.params);
    if (s.family == CodeFamily::RunBounded) j["closed_form"] = run_bounded_size_formula(s.n);
    return j;
}

BallKind parse_kind(const std::string& kind) {
    if (kind == "del") return BallKind::Del;
    if (kind == "sub") return BallKind::Sub;
    return BallKind::DS;
}

BallSet ball_of(BallKind kind, const Word& x) {
    switch (kind) {
        case BallKind::Del: return deletion_ball(x);
        case BallKind::Sub: return substitution_ball(x);
        case BallKind::DS: return ds_ball(x);
    }
    return {};
}

std::pair<Word, Word> word_pair(const std::vector<std::string>& words) {
    if (words.size() != 2) usage("--word", "expects exactly two words, got " + std::to_string(words.size()));
    const Word x = parse_word("--word", words[0]);
    const Word y = parse_word("--word", words[1]);
    if (x.size() != y.size()) usage("--word", "words have different lengths");
    return {x, y};
}

WitnessConvention parse_convention(const std::string& index, const std::string& none) {
    return {index == "post" ? FlipIndex::PostDeletion : FlipIndex::PreDeletion, none == "inside"};
}

// Every value any subcommand may bind. Only the parsed subcommand's fields
// are meaningful.
struct Options {
    Output output;
    std::string kind = "ds";
    std::string word;
    std::vector<std::string> words;
    bool by_run = false;
    bool psi_inverse = false;
    int del = 0;
    std::optional<int> sub;
    std::string z, u, v;
    std::optional<int> preimage_n;
    std::string index = "pre", none = "inside";
    SpecFlags spec;
    std::string inner, outer, in_path;
    std::optional<int> N;
    std::uint64_t seed = kDefaultSeed;
    int samples = 0;
    std::vector<std::string> reads;
    bool oracle = false;
    // verify
    std::string target;
    std::optional<int> vn, n_min, n_max;
    int jobs = 1;
    bool timing = false, structured = false, per_n = false;
    int trials = 1000;
    std::size_t max_counterexamples = 20;
};

int cmd_ball(const Options& o, std::ostream& out) {
    const Word x = parse_word("--word", o.word);
    if (x.empty()) usage("--word", "needs a nonempty word");
    Json j;
    if (o.by_run) {
        if (o.kind != "del") usage("--by-run", "only applies to --kind del");
        j = words_json(deletions_by_run(x));
    } else {
        j = words_json(ball_of(parse_kind(o.kind), x));
    }
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_intersect(const Options& o, std::ostream& out) {
    const auto [x, y] = word_pair(o.words);
    if (x.empty()) usage("--word", "needs nonempty words");
    const BallSet common = attributed("--word", [&] { return ball_intersection(x, y, parse_kind(o.kind)); });
    Json j;
    j["kind"] = o.kind;
    j["x"] = x.str();
    j["y"] = y.str();
    j["size"] = common.size();
    j["words"] = words_json(common);
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const auto [x, y] = word_pair(o.words);
    const PairClassification c = attributed("--word", [&] { return classify_pair(x, y); });
    const AffixDecomposition ax = common_affixes(x, y);
    const IntersectionDecomposition dec = decompose_intersection(x, y);
    Json j;
    j["x"] = x.str();
    j["y"] = y.str();
    j["d"] = c.d;
    j["s"] = c.s;
    j["hamming"] = c.hamming;
    j["case"] = std::string(to_string(c.case_tag));
    j["shape_matches"] = c.shape_matches;
    j["swapped"] = c.swapped;
    j["a"] = c.a.str();
    j["b"] = c.b.str();
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["c"] = c.c.str();
    j["c2"] = c.c2.str();
    j["ell"] = c.ell;
    j["affixes"] = {{"prefix", ax.prefix.str()},
                    {"suffix", ax.suffix.str()},
                    {"first_diff", ax.first_diff},
                    {"last_diff", ax.last_diff}};
    j["decomposition"] = {{"S", dec.size_S},
                          {"D", dec.size_D},
                          {"overlap", dec.size_overlap},
                          {"B_extra", dec.size_B_extra},
                          {"total", dec.total}};
    const auto [rx, ry] = reconstruct_pair(c);
    j["round_trip"] = rx == x && ry == y;
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_seq(const Options& o, std::ostream& out) {
    const Word x = parse_word("--word", o.word);
    Json j;
    j["word"] = x.str();
    if (o.psi_inverse) {
        j["psi_inverse"] = attributed("--word", [&] { return psi_inverse(x); }).str();
        emit(o.output, o.output.render(j), out);
        return 0;
    }
    const RunProfile rp = runs(x);
    j["length"] = x.size();
    j["weight"] = weight(x);
    j["runs"] = rp.run_count;
    Json bounds = Json::array();
    for (const Run& r : rp.boundaries) bounds.push_back({{"start", r.start}, {"symbol", r.symbol}, {"length", r.length}});
    j["run_list"] = bounds;
    j["vt1"] = vt_syndrome(x, 1);
    j["vt2"] = vt_syndrome(x, 2);
    j["inversions"] = inversion_number(x);
    j["max_le2_periodic"] = max_le2_periodic_length(x);
    j["psi"] = x.empty() ? std::string() : attributed("--word", [&] { return psi(x); }).str();
    j["complement"] = complement(x).str();
    j["reverse"] = reverse(x).str();
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_apply(const Options& o, std::ostream& out) {
    const Word x = parse_word("--word", o.word);
    const int n = x.size();
    if (n < 1) usage("--word", "needs a nonempty word");
    if (o.del < 1 || o.del > n) usage("--del", "position " + std::to_string(o.del) + " outside [1," + std::to_string(n) + "]");
    if (o.sub && (*o.sub < 1 || *o.sub > n - 1))
        usage("--sub", "position " + std::to_string(*o.sub) + " outside [1," + std::to_string(n - 1) + "]");
    Json j;
    j["word"] = x.str();
    j["del"] = o.del;
    j["sub"] = o.sub ? Json(*o.sub) : Json(nullptr);
    j["result"] = apply_del_sub(x, o.del, o.sub).str();
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const Word x = parse_word("--word", o.word);
    const Word z = parse_word("--z", o.z);
    if (z.size() + 1 != x.size()) usage("--z", "must have length " + std::to_string(x.size() - 1));
    emit(o.output, o.output.render(witness_json(witnesses(x, z))), out);
    return 0;
}

int cmd_bad(const Options& o, std::ostream& out) {
    const auto [x, y] = word_pair(o.words);
    const Word z = parse_word("--z", o.z);
    if (z.size() + 1 != x.size()) usage("--z", "must have length " + std::to_string(x.size() - 1));
    if (x == y) usage("--word", "words must be distinct");
    const WitnessConvention conv = parse_convention(o.index, o.none);
    const bool bad = attributed("--z", [&] { return is_bad(x, y, z, conv); });
    Json j;
    j["x"] = x.str();
    j["y"] = y.str();
    j["z"] = z.str();
    j["convention"] = o.index;
    j["none"] = o.none;
    j["bad"] = bad;
    j["witnesses_x"] = witness_json(witnesses(x, z));
    j["witnesses_y"] = witness_json(witnesses(y, z));
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_preimage(const Options& o, std::ostream& out) {
    const Word z = parse_word("--z", o.z);
    const int n = o.preimage_n.value_or(z.size() + 1);
    if (n != z.size() + 1) usage("--n", "must equal the length of --z plus one");
    if (n > Word::kMaxLength) usage("--z", "too long");
    emit(o.output, o.output.render(words_json(preimage_ball(z, n))), out);
    return 0;
}

int cmd_constrained(const Options& o, std::ostream& out) {
    const Word u = parse_word("--u", o.u);
    const Word v = parse_word("--v", o.v);
    if (v.size() != u.size() + 1) usage("--v", "must be one symbol longer than --u");
    emit(o.output, o.output.render(words_json(constrained_deletion_matches(u, v))), out);
    return 0;
}

int cmd_code_list(const Options& o, std::ostream& out) {
    const CodeSpec s = o.spec.spec();
    if (s.n > kEnumerationLimit) usage("--n", "exceeds the enumeration limit " + std::to_string(kEnumerationLimit));
    if (o.output.format.empty()) {
        std::ostringstream os;
        write_code_file(os, s);
        emit(o.output, os.str(), out);
        return 0;
    }
    Json j = spec_json(s);
    const auto words = members(s);
    j["size"] = words.size();
    j["words"] = words_json(words);
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_code_size(const Options& o, std::ostream& out) {
    const CodeSpec s = o.spec.spec();
    const std::uint64_t k = attributed("--n", [&] { return size(s); });
    emit(o.output, o.output.render(Json(k)), out);
    return 0;
}

int cmd_code_check(const Options& o, std::ostream& out) {
    const CodeSpec s = o.spec.spec();
    const Word x = parse_word("--word", o.word);
    if (x.size() != s.n) usage("--word", "length differs from --n");
    Json j = spec_json(s);
    j["word"] = x.str();
    j["member"] = contains(s, x);
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_code_info(const Options& o, std::ostream& out) {
    emit(o.output, o.output.render(code_info(o.spec.spec())), out);
    return 0;
}

int cmd_code_best(const Options& o, std::ostream& out) {
    const CodeFamily f = o.spec.parsed_family();
    const int n = o.spec.length();
    if (!has_residue_parameters(f)) usage("--family", std::string(family_id(f)) + " has no residue parameters");
    const CodeParams fixed = o.spec.fixed(f, n);
    const CodeSpec best = attributed("--n", [&] { return best_coset(f, n, fixed); });
    emit(o.output, o.output.render(code_info(best)), out);
    return 0;
}

int cmd_code_partition(const Options& o, std::ostream& out) {
    const CodeFamily f = o.spec.parsed_family();
    const int n = o.spec.length();
    if (!has_residue_parameters(f)) usage("--family", std::string(family_id(f)) + " has no residue parameters");
    const CodeParams fixed = o.spec.fixed(f, n);
    Json rows = Json::array();
    for (const CodeSpec& c : attributed("--n", [&] { return coset_partition(f, n, fixed); })) {
        Json row;
        row["params"] = c.params_string();
        row["size"] = attributed("--n", [&] { return size(c); });
        rows.push_back(row);
    }
    emit(o.output, o.output.render(rows), out);
    return 0;
}

int cmd_code_subcode(const Options& o, std::ostream& out) {
    const CodeSpec inner = attributed("--inner", [&] { return parse_code_spec(o.inner); });
    const CodeSpec outer = attributed("--outer", [&] { return parse_code_spec(o.outer); });
    if (inner.n != outer.n) usage("--outer", "length differs from --inner");
    Json j;
    j["inner"] = inner.describe();
    j["outer"] = outer.describe();
    j["subcode"] = attributed("--inner", [&] { return subcode_check(inner, outer); });
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_code_load(const Options& o, std::istream& in, std::ostream& out) {
    std::istringstream text(slurp("--in", o.in_path, in));
    const CodeFile file = attributed("--in", [&] { return read_code_file(text); });
    const std::vector<Word> expected = attributed("--in", [&] { return members(file.spec); });
    Json j = spec_json(file.spec);
    j["words"] = file.words.size();
    j["matches_enumeration"] = file.words == expected;
    emit(o.output, o.output.render(j), out);
    return file.words == expected ? 0 : 1;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const Word x = parse_word("--word", o.word);
    if (x.empty()) usage("--word", "needs a nonempty word");
    if (o.samples > 0) {
        // draws from one stream; the first equals channel_sample(x, seed)
        Channel channel(o.seed);
        std::vector<Word> draws;
        for (int i = 0; i < o.samples; ++i) draws.push_back(channel.sample(x));
        emit(o.output, o.output.render(words_json(draws)), out);
        return 0;
    }
    if (!o.N) usage("--N", "required unless --samples is given");
    const ReadBundle bundle = attributed("--N", [&] { return collect_reads(x, *o.N, o.seed); });
    if (o.output.format.empty()) {
        std::ostringstream os;
        write_read_bundle(os, bundle, *o.N);
        emit(o.output, os.str(), out);
        return 0;
    }
    Json j;
    j["word"] = x.str();
    j["n"] = bundle.n;
    j["N"] = *o.N;
    j["seed"] = o.seed;
    j["reads"] = words_json(bundle.reads);
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_decode(const Options& o, std::istream& in, std::ostream& out) {
    if (!o.in_path.empty() && !o.reads.empty()) usage("--read", "cannot be combined with --in");
    ReadBundleFile file;
    if (!o.in_path.empty()) {
        std::istringstream text(slurp("--in", o.in_path, in));
        file = attributed("--in", [&] { return read_read_bundle(text); });
    } else {
        if (o.reads.empty()) usage("--read", "give reads with --read or a bundle with --in");
        std::vector<Word> reads;
        for (const auto& r : o.reads) reads.push_back(parse_word("--read", r));
        const int len = reads.front().size();
        for (const auto& r : reads)
            if (r.size() != len) usage("--read", "reads have different lengths");
        std::sort(reads.begin(), reads.end());
        if (std::adjacent_find(reads.begin(), reads.end()) != reads.end()) usage("--read", "reads must be distinct");
        file.bundle = {len + 1, BallSet::from_words(len, reads)};
        file.N = static_cast<int>(reads.size());
    }
    const int N = o.N.value_or(file.N);
    if (N < 0) usage("--N", "must be non-negative");
    const CodeSpec s = o.spec.spec(file.bundle.n);
    if (s.n != file.bundle.n) usage("--n", "differs from the read length plus one");
    const DecodeResult r = o.oracle ? decode_by_code_scan(s, file.bundle) : decode(s, N, file.bundle);
    Json j;
    j["code"] = s.describe();
    j["N"] = N;
    j["reads"] = file.bundle.reads.size();
    j["status"] = std::string(to_string(r.status));
    j["candidates"] = words_json(r.candidates);
    emit(o.output, o.output.render(j), out);
    return 0;
}

int cmd_verify_list(const Options& o, std::ostream& out) {
    Json rows = Json::array();
    for (const auto& t : verify_targets())
        rows.push_back({{"target", t.name}, {"n_min", t.default_n_min}, {"n_max", t.default_n_max},
                        {"description", t.description}});
    emit(o.output, o.output.render(rows), out);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.target == "list") return cmd_verify_list(o, out);
    const auto& targets = verify_targets();
    const auto it = std::find_if(targets.begin(), targets.end(), [&](const auto& t) { return t.name == o.target; });
    if (it == targets.end()) usage("<target>", "unknown verification target '" + o.target + "'");
    const VerifyTarget& target = *it;

    int lo = target.default_n_min, hi = target.default_n_max;
    if (o.vn) lo = hi = *o.vn;
    if (o.n_min) lo = *o.n_min;
    if (o.n_max) hi = *o.n_max;
    if (lo > hi) usage("--n-min", "exceeds --n-max");

    VerifyOptions opt;
    opt.jobs = o.jobs;
    opt.max_counterexamples = o.max_counterexamples;
    opt.structured = o.structured;
    opt.convention = parse_convention(o.index, o.none);
    opt.seed = o.seed;
    opt.P = static_cast<int>(o.spec.P.value_or(0));
    if (o.N) opt.N = *o.N;
    opt.trials = o.trials;
    if (!o.spec.family.empty()) opt.spec = o.spec.spec(lo);

    std::vector<VerificationReport> parts;
    for (int n = lo; n <= hi; ++n) parts.push_back(attributed("--n", [&] { return target.run(n, opt); }));
    std::vector<VerificationReport> shown;
    if (parts.size() == 1) shown = parts;
    else if (o.per_n) shown = parts;
    else shown.push_back(combine_reports(target.name, parts, opt.max_counterexamples));

    std::string payload;
    if (o.output.format == "csv") {
        payload = to_csv(shown, o.timing);
    } else if (o.output.format == "text") {
        for (const auto& r : shown) payload += to_text(r, o.timing);
    } else {
        payload = shown.size() == 1 ? to_json(shown.front(), o.timing) : to_json(shown, o.timing);
        if (!payload.empty() && payload.back() != '\n') payload += '\n';
    }
    emit(o.output, payload, out);
    const bool failed = std::any_of(shown.begin(), shown.end(), [](const auto& r) { return r.verdict == Verdict::Fail; });
    return failed ? 1 : 0;
}

void add_output(CLI::App* app, Output& o, bool csv) {
    std::vector<std::string> formats{"json", "text"};
    if (csv) formats.push_back("csv");
    app->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    app->add_option("--out", o.path, "write output to this file");
}

void add_kind(CLI::App* app, std::string& kind) {
    app->add_option("--kind", kind, "ball kind: del, sub or ds")->check(CLI::IsMember({"del", "sub", "ds"}));
}

void add_convention(CLI::App* app, Options& o) {
    app->add_option("--convention", o.index, "flip index convention: pre or post")
        ->check(CLI::IsMember({"pre", "post"}));
    app->add_option("--none", o.none, "where a no-flip witness lies: inside or outside")
        ->check(CLI::IsMember({"inside", "outside"}));
}

}  // namespace

const std::vector<Command>& commands() {
    static const std::vector<Command> table = {
        {"ball", "list D(x), S(x) or B(x)", {"deletion_ball", "substitution_ball", "ds_ball", "deletions_by_run"}},
        {"intersect", "intersect two balls of one kind", {"ball_intersection"}},
        {"classify", "(d,s) case, structural fields and intersection decomposition",
         {"classify_pair", "reconstruct_pair", "common_affixes", "decompose_intersection"}},
        {"seq", "run profile, syndromes, inversions and psi of a word",
         {"runs", "run_count", "weight", "vt_syndrome", "inversion_number", "psi", "psi_inverse",
          "max_le2_periodic_length", "complement", "reverse"}},
        {"apply", "delete one position and optionally flip one", {"apply_del_sub"}},
        {"witness", "deletion and flip witnesses of z in B(x)", {"witnesses"}},
        {"bad", "good/bad test for z in B(x) and B(y)", {"is_bad"}},
        {"preimage", "all length-n words whose ball contains z", {"preimage_ball"}},
        {"constrained", "deletion matches of v consistent with u", {"constrained_deletion_matches"}},
        {"code", "code enumeration: list, size, check, info, best, partition, subcode, load",
         {"parse_family", "contains", "enumerate", "members", "size", "redundancy", "coset_partition",
          "coset_count", "best_coset", "subcode_check", "run_bounded_size_formula", "default_rll_period",
          "write_code_file", "read_code_file", "parse_code_spec"}},
        {"simulate", "channel draws or a bundle of distinct reads",
         {"channel_sample", "Channel", "collect_reads", "write_read_bundle"}},
        {"decode", "reconstruct a codeword from reads", {"decode", "decode_by_code_scan", "read_read_bundle"}},
        {"verify", "run a named verifier over a range of n",
         {"verify_targets", "verify_ball_sizes", "verify_del_positions", "verify_constrained_deletion",
          "verify_pair_structure", "verify_decomposition", "verify_intersection_bounds", "verify_claim_tables",
          "verify_bad_count", "verify_code_theorem", "verify_rll", "verify_run_bounded", "verify_vt_lemma",
          "verify_cp_lemma", "verify_list_decoding", "verify_reconstruction", "combine_reports", "to_json",
          "to_text", "to_csv"}},
    };
    return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto& table = commands();
    if (!args.empty() && !args[0].empty() && args[0][0] != '-' &&
        std::none_of(table.begin(), table.end(), [&](const Command& c) { return c.name == args[0]; })) {
        err << "error: unknown subcommand '" << args[0] << "'\n";
        return 2;
    }
    static const std::vector<std::string> code_actions = {"list", "size", "check", "info", "best", "partition", "subcode", "load"};
    if (args.size() > 1 && args[0] == "code" && !args[1].empty() && args[1][0] != '-' &&
        std::find(code_actions.begin(), code_actions.end(), args[1]) == code_actions.end()) {
        err << "error: code: unknown subcommand '" << args[1] << "'\n";
        return 2;
    }

    CLI::App app{"Single-deletion single-substitution ball algebra, codes and verifiers", "delsub"};
    app.require_subcommand(1);
    Options o;
    auto sub = [&](const std::string& name) {
        const auto it = std::find_if(table.begin(), table.end(), [&](const Command& c) { return c.name == name; });
        return app.add_subcommand(name, it->summary);
    };

    auto* ball = sub("ball");
    add_kind(ball, o.kind);
    ball->add_option("--word", o.word, "the word x")->required();
    ball->add_flag("--by-run", o.by_run, "list D(x) indexed by run");
    add_output(ball, o.output, false);

    auto* inter = sub("intersect");
    add_kind(inter, o.kind);
    inter->add_option("--word", o.words, "give twice: x then y")->required();
    add_output(inter, o.output, false);

    auto* cls = sub("classify");
    cls->add_option("--word", o.words, "give twice: x then y")->required();
    add_output(cls, o.output, false);

    auto* seq = sub("seq");
    seq->add_option("--word", o.word, "the word x")->required();
    seq->add_flag("--psi-inverse", o.psi_inverse, "invert psi instead");
    add_output(seq, o.output, false);

    auto* apply = sub("apply");
    apply->add_option("--word", o.word, "the word x")->required();
    apply->add_option("--del", o.del, "deletion position, 1-based")->required();
    apply->add_option("--sub", o.sub, "flip position in the shortened word, 1-based");
    add_output(apply, o.output, false);

    auto* wit = sub("witness");
    wit->add_option("--word", o.word, "the word x")->required();
    wit->add_option("--z", o.z, "a word of length n-1")->required();
    add_output(wit, o.output, false);

    auto* bad = sub("bad");
    bad->add_option("--word", o.words, "give twice: x then y")->required();
    bad->add_option("--z", o.z, "a common element of B(x) and B(y)")->required();
    add_convention(bad, o);
    add_output(bad, o.output, false);

    auto* pre = sub("preimage");
    pre->add_option("--z", o.z, "a word of length n-1")->required();
    pre->add_option("--n", o.preimage_n, "original length, |z|+1");
    add_output(pre, o.output, false);

    auto* con = sub("constrained");
    con->add_option("--u", o.u, "word of length n")->required();
    con->add_option("--v", o.v, "word of length n+1")->required();
    add_output(con, o.output, false);

    auto* code = sub("code");
    code->require_subcommand(1);
    auto* c_list = code->add_subcommand("list", "write every codeword (code file unless --format)");
    auto* c_size = code->add_subcommand("size", "print the number of codewords");
    auto* c_check = code->add_subcommand("check", "test membership of --word");
    auto* c_info = code->add_subcommand("info", "size, redundancy and coset count");
    auto* c_best = code->add_subcommand("best", "largest coset of a residue family");
    auto* c_part = code->add_subcommand("partition", "every coset with its size");
    auto* c_sub = code->add_subcommand("subcode", "test that --inner is contained in --outer");
    auto* c_load = code->add_subcommand("load", "read a code file and compare with enumeration");
    for (auto* c : {c_list, c_size, c_check, c_info, c_best, c_part}) {
        o.spec.add(c, true);
        add_output(c, o.output, c == c_part);
    }
    c_check->add_option("--word", o.word, "candidate codeword")->required();
    c_sub->add_option("--inner", o.inner, "family=<id>,n=<n>,<k>=<v>...")->required();
    c_sub->add_option("--outer", o.outer, "family=<id>,n=<n>,<k>=<v>...")->required();
    add_output(c_sub, o.output, false);
    c_load->add_option("--in", o.in_path, "code file, - for stdin")->required();
    add_output(c_load, o.output, false);

    auto* sim = sub("simulate");
    sim->add_option("--word", o.word, "transmitted word")->required();
    sim->add_option("--N", o.N, "number of distinct reads")->check(CLI::NonNegativeNumber);
    sim->add_option("--seed", o.seed, "generator seed");
    sim->add_option("--samples", o.samples, "raw channel draws instead of a bundle")->check(CLI::NonNegativeNumber);
    add_output(sim, o.output, false);

    auto* dec = sub("decode");
    o.spec.add(dec, true);
    dec->add_option("--in", o.in_path, "read bundle file, - for stdin");
    dec->add_option("--read", o.reads, "a read; repeat for each");
    dec->add_option("--N", o.N, "read count the code is built for");
    dec->add_flag("--oracle", o.oracle, "scan the whole code instead of intersecting preimages");
    add_output(dec, o.output, false);

    auto* ver = sub("verify");
    ver->add_option("target", o.target, "verifier name, or list")->required();
    auto* opt_n = ver->add_option("--n", o.vn, "single length")->check(CLI::Range(0, 64));
    ver->add_option("--n-min", o.n_min, "first length")->check(CLI::Range(0, 64))->excludes(opt_n);
    ver->add_option("--n-max", o.n_max, "last length")->check(CLI::Range(0, 64))->excludes(opt_n);
    ver->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    ver->add_flag("--timing", o.timing, "include elapsed seconds");
    ver->add_flag("--structured", o.structured, "enumerate lemma shapes instead of all pairs");
    ver->add_flag("--per-n", o.per_n, "one report per length instead of a combined one");
    ver->add_option("--seed", o.seed, "generator seed");
    ver->add_option("--N", o.N, "reconstruction read count");
    ver->add_option("--trials", o.trials, "reconstruction channel trials")->check(CLI::NonNegativeNumber);
    ver->add_option("--max-counterexamples", o.max_counterexamples, "counterexamples kept per report");
    add_convention(ver, o);
    // --family selects the reconstruction code; its length follows --n
    o.spec.add(ver, false, false);
    add_output(ver, o.output, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << '\n';
        return 2;
    }

    try {
        if (ball->parsed()) return cmd_ball(o, out);
        if (inter->parsed()) return cmd_intersect(o, out);
        if (cls->parsed()) return cmd_classify(o, out);
        if (seq->parsed()) return cmd_seq(o, out);
        if (apply->parsed()) return cmd_apply(o, out);
        if (wit->parsed()) return cmd_witness(o, out);
        if (bad->parsed()) return cmd_bad(o, out);
        if (pre->parsed()) return cmd_preimage(o, out);
        if (con->parsed()) return cmd_constrained(o, out);
        if (c_list->parsed()) return cmd_code_list(o, out);
        if (c_size->parsed()) return cmd_code_size(o, out);
        if (c_check->parsed()) return cmd_code_check(o, out);
        if (c_info->parsed()) return cmd_code_info(o, out);
        if (c_best->parsed()) return cmd_code_best(o, out);
        if (c_part->parsed()) return cmd_code_partition(o, out);
        if (c_sub->parsed()) return cmd_code_subcode(o, out);
        if (c_load->parsed()) return cmd_code_load(o, std::cin, out);
        if (sim->parsed()) return cmd_simulate(o, out);
        if (dec->parsed()) return cmd_decode(o, std::cin, out);
        if (ver->parsed()) return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand given\n";
    return 2;
}

}  // namespace delsub::cli
