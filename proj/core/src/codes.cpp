#include "delsub/codes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "delsub/sequences.hpp"

namespace delsub {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

void check_range(const char* name, std::int64_t v, std::int64_t lo, std::int64_t hi) {
    if (v < lo || v > hi) {
        std::ostringstream os;
        os << "parameter " << name << "=" << v << " outside [" << lo << "," << hi << "]";
        throw Error(ErrorCode::InvalidArgument, os.str());
    }
}

void check_modulus(std::int64_t m) {
    if (m < 2) throw Error(ErrorCode::InvalidArgument, "parameter m=" + std::to_string(m) + " must be at least 2");
}

void check_even_period(std::int64_t P) {
    if (P < 2 || P % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "parameter P=" + std::to_string(P) + " must be even and at least 2");
}

bool run_bounded(const Word& x) { return run_count(x) <= (x.size() + 1) / 2; }

bool rll(const Word& x, std::int64_t P) { return max_le2_periodic_length(x) <= P; }

std::int64_t two_n_sq(int n) { return 2 * static_cast<std::int64_t>(n) * n; }

// Moduli of the free (coset) parameters, most significant first.
std::vector<std::int64_t> coset_moduli(CodeFamily family, int n, const CodeParams& p) {
    switch (family) {
        case CodeFamily::Vt: return {2 * static_cast<std::int64_t>(n)};
        case CodeFamily::Inv:
        case CodeFamily::VtMod:
        case CodeFamily::EvenPos:
        case CodeFamily::C2n9: return {p.m};
        case CodeFamily::Cp:
        case CodeFamily::Cn21: return {2, 1 + p.P / 2};
        case CodeFamily::Cl: return {4, 2 * static_cast<std::int64_t>(n), two_n_sq(n)};
        default: return {};
    }
}

CodeParams with_coset(CodeFamily family, CodeParams p, const std::vector<std::int64_t>& key) {
    switch (family) {
        case CodeFamily::Vt:
        case CodeFamily::Inv:
        case CodeFamily::VtMod:
        case CodeFamily::EvenPos:
        case CodeFamily::C2n9: p.a = key[0]; break;
        case CodeFamily::Cp:
        case CodeFamily::Cn21: p.a1 = key[0]; p.a2 = key[1]; break;
        case CodeFamily::Cl: p.a0 = key[0]; p.a1 = key[1]; p.a2 = key[2]; break;
        default: break;
    }
    return p;
}

std::int64_t even_position_sum(const Word& x) {
    std::int64_t s = 0;
    for (int i = 2; i <= x.size(); i += 2) s += x[i - 1];
    return s;
}

// Coset key of x, or nothing when x fails the family's non-residue constraints.
std::optional<std::vector<std::int64_t>> residue_key(CodeFamily family, int n, const CodeParams& p,
                                                     const Word& x) {
    switch (family) {
        case CodeFamily::Vt: return std::vector<std::int64_t>{mod(vt_syndrome(x, 1), 2 * static_cast<std::int64_t>(n))};
        case CodeFamily::Inv: return std::vector<std::int64_t>{mod(inversion_number(x), p.m)};
        case CodeFamily::VtMod: return std::vector<std::int64_t>{mod(vt_syndrome(x, 1), p.m)};
        case CodeFamily::EvenPos: return std::vector<std::int64_t>{mod(even_position_sum(x), p.m)};
        case CodeFamily::C2n9:
            if (!run_bounded(x)) return std::nullopt;
            return std::vector<std::int64_t>{mod(inversion_number(x), p.m)};
        case CodeFamily::Cp:
        case CodeFamily::Cn21:
            if (!rll(x, p.P)) return std::nullopt;
            if (family == CodeFamily::Cn21 && !run_bounded(x)) return std::nullopt;
            return std::vector<std::int64_t>{mod(x.weight(), 2), mod(inversion_number(x), 1 + p.P / 2)};
        case CodeFamily::Cl:
            return std::vector<std::int64_t>{mod(x.weight(), 4), mod(vt_syndrome(x, 1), 2 * static_cast<std::int64_t>(n)),
                                             mod(vt_syndrome(x, 2), two_n_sq(n))};
        default: return std::nullopt;
    }
}

CodeParams resolve_fixed(CodeFamily family, int n, CodeParams fixed) {
    if ((family == CodeFamily::Cp || family == CodeFamily::Cn21) && fixed.P == 0)
        fixed.P = default_rll_period(n);
    return fixed;
}

void check_enumerable(int n, int limit) {
    if (n > limit)
        throw Error(ErrorCode::LimitExceeded, "n=" + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(limit));
}

}  // namespace

std::string_view family_id(CodeFamily family) {
    switch (family) {
        case CodeFamily::Full: return "full";
        case CodeFamily::Vt: return "vt";
        case CodeFamily::Inv: return "inv";
        case CodeFamily::VtMod: return "vt_mod";
        case CodeFamily::EvenPos: return "even_pos";
        case CodeFamily::RunBounded: return "run_bounded";
        case CodeFamily::Rll: return "rll";
        case CodeFamily::Cp: return "cp";
        case CodeFamily::C2n9: return "c2n9";
        case CodeFamily::Cn21: return "cn21";
        case CodeFamily::Cl: return "cl";
    }
    return "unknown";
}

const std::vector<CodeFamily>& all_families() {
    static const std::vector<CodeFamily> families = {
        CodeFamily::Full, CodeFamily::Vt, CodeFamily::Inv, CodeFamily::VtMod,
        CodeFamily::EvenPos, CodeFamily::RunBounded, CodeFamily::Rll, CodeFamily::Cp,
        CodeFamily::C2n9, CodeFamily::Cn21, CodeFamily::Cl,
    };
    return families;
}

CodeFamily parse_family(std::string_view id) {
    for (CodeFamily f : all_families())
        if (family_id(f) == id) return f;
    throw Error(ErrorCode::InvalidArgument, "unknown code family '" + std::string(id) + "'");
}

CodeSpec CodeSpec::full(int n) { return {CodeFamily::Full, n, {}}; }
CodeSpec CodeSpec::vt(int n, std::int64_t a) { return {CodeFamily::Vt, n, {.a = a}}; }
CodeSpec CodeSpec::inv(int n, std::int64_t a, std::int64_t m) { return {CodeFamily::Inv, n, {.a = a, .m = m}}; }
CodeSpec CodeSpec::vt_mod(int n, std::int64_t a, std::int64_t m) { return {CodeFamily::VtMod, n, {.a = a, .m = m}}; }
CodeSpec CodeSpec::even_pos(int n, std::int64_t a, std::int64_t m) { return {CodeFamily::EvenPos, n, {.a = a, .m = m}}; }
CodeSpec CodeSpec::run_bounded(int n) { return {CodeFamily::RunBounded, n, {}}; }
CodeSpec CodeSpec::rll(int n, std::int64_t P) { return {CodeFamily::Rll, n, {.P = P}}; }
CodeSpec CodeSpec::cp(int n, std::int64_t P, std::int64_t a1, std::int64_t a2) {
    return {CodeFamily::Cp, n, {.P = P, .a1 = a1, .a2 = a2}};
}
CodeSpec CodeSpec::c2n9(int n, std::int64_t a, std::int64_t m) { return {CodeFamily::C2n9, n, {.a = a, .m = m}}; }
CodeSpec CodeSpec::cn21(int n, std::int64_t P, std::int64_t a1, std::int64_t a2) {
    return {CodeFamily::Cn21, n, {.P = P, .a1 = a1, .a2 = a2}};
}
CodeSpec CodeSpec::cl(int n, std::int64_t a0, std::int64_t a1, std::int64_t a2) {
    return {CodeFamily::Cl, n, {.a0 = a0, .a1 = a1, .a2 = a2}};
}

void CodeSpec::validate() const {
    check_range("n", n, 0, Word::kMaxLength);
    const std::int64_t nn = n;
    switch (family) {
        case CodeFamily::Full:
        case CodeFamily::RunBounded: break;
        case CodeFamily::Vt:
            check_range("n", n, 1, Word::kMaxLength);
            check_range("a", params.a, 0, 2 * nn - 1);
            break;
        case CodeFamily::Inv:
        case CodeFamily::VtMod:
        case CodeFamily::EvenPos:
        case CodeFamily::C2n9:
            check_modulus(params.m);
            check_range("a", params.a, 0, params.m - 1);
            break;
        case CodeFamily::Rll: check_range("P", params.P, 1, 1 << 20); break;
        case CodeFamily::Cp:
        case CodeFamily::Cn21:
            check_even_period(params.P);
            check_range("a1", params.a1, 0, 1);
            check_range("a2", params.a2, 0, params.P / 2);
            break;
        case CodeFamily::Cl:
            check_range("n", n, 1, Word::kMaxLength);
            check_range("a0", params.a0, 0, 3);
            check_range("a1", params.a1, 0, 2 * nn - 1);
            check_range("a2", params.a2, 0, two_n_sq(n) - 1);
            break;
    }
}

std::string CodeSpec::params_string() const {
    std::ostringstream os;
    switch (family) {
        case CodeFamily::Full:
        case CodeFamily::RunBounded: break;
        case CodeFamily::Vt: os << "a=" << params.a; break;
        case CodeFamily::Inv:
        case CodeFamily::VtMod:
        case CodeFamily::EvenPos:
        case CodeFamily::C2n9: os << "a=" << params.a << ",m=" << params.m; break;
        case CodeFamily::Rll: os << "P=" << params.P; break;
        case CodeFamily::Cp:
        case CodeFamily::Cn21: os << "P=" << params.P << ",a1=" << params.a1 << ",a2=" << params.a2; break;
        case CodeFamily::Cl: os << "a0=" << params.a0 << ",a1=" << params.a1 << ",a2=" << params.a2; break;
    }
    return os.str();
}

std::string CodeSpec::describe() const {
    return "family=" + std::string(family_id(family)) + " n=" + std::to_string(n) + " params=" + params_string();
}

int default_rll_period(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "default period needs n >= 1");
    const double target = std::log2(static_cast<double>(n)) + 3.0;
    int P = static_cast<int>(std::ceil(target - 1e-12));
    if (P % 2 != 0) ++P;
    return P;
}

namespace {

bool contains_unchecked(const CodeSpec& spec, const Word& x) {
    const CodeParams& p = spec.params;
    switch (spec.family) {
        case CodeFamily::Full: return true;
        case CodeFamily::RunBounded: return run_bounded(x);
        case CodeFamily::Rll: return rll(x, p.P);
        case CodeFamily::Vt: return residue_key(spec.family, spec.n, p, x)->at(0) == p.a;
        case CodeFamily::Inv:
        case CodeFamily::VtMod:
        case CodeFamily::EvenPos:
        case CodeFamily::C2n9: {
            auto key = residue_key(spec.family, spec.n, p, x);
            return key && (*key)[0] == p.a;
        }
        case CodeFamily::Cp:
        case CodeFamily::Cn21: {
            auto key = residue_key(spec.family, spec.n, p, x);
            return key && (*key)[0] == p.a1 && (*key)[1] == p.a2;
        }
        case CodeFamily::Cl: {
            auto key = residue_key(spec.family, spec.n, p, x);
            return (*key)[0] == p.a0 && (*key)[1] == p.a1 && (*key)[2] == p.a2;
        }
    }
    return false;
}

}  // namespace

bool contains(const CodeSpec& spec, const Word& x) {
    spec.validate();
    if (x.size() != spec.n)
        throw Error(ErrorCode::LengthMismatch, "word length " + std::to_string(x.size()) + " differs from n=" + std::to_string(spec.n));
    return contains_unchecked(spec, x);
}

void enumerate(const CodeSpec& spec, const std::function<void(const Word&)>& visit, int limit) {
    spec.validate();
    check_enumerable(spec.n, limit);
    const std::uint64_t count = std::uint64_t{1} << spec.n;
    for (std::uint64_t v = 0; v < count; ++v) {
        const Word x(spec.n, v);
        if (contains_unchecked(spec, x)) visit(x);
    }
}

std::vector<Word> members(const CodeSpec& spec, int limit) {
    std::vector<Word> out;
    enumerate(spec, [&](const Word& x) { out.push_back(x); }, limit);
    return out;
}

std::uint64_t size(const CodeSpec& spec, int limit) {
    std::uint64_t count = 0;
    enumerate(spec, [&](const Word&) { ++count; }, limit);
    return count;
}

double redundancy(const CodeSpec& spec, int limit) {
    const std::uint64_t s = size(spec, limit);
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "redundancy of an empty code is undefined");
    return spec.n - std::log2(static_cast<double>(s));
}

bool has_residue_parameters(CodeFamily family) {
    return !coset_moduli(family, 1, {.m = 2, .P = 2}).empty();
}

std::uint64_t coset_count(CodeFamily family, int n, const CodeParams& fixed) {
    const CodeParams p = resolve_fixed(family, n, fixed);
    std::uint64_t total = 1;
    for (std::int64_t m : coset_moduli(family, n, p)) total *= static_cast<std::uint64_t>(m);
    return total;
}

std::vector<CodeSpec> coset_partition(CodeFamily family, int n, const CodeParams& fixed) {
    if (!has_residue_parameters(family))
        throw Error(ErrorCode::InvalidArgument, "family " + std::string(family_id(family)) + " has no residue parameters");
    const CodeParams p = resolve_fixed(family, n, fixed);
    const std::vector<std::int64_t> moduli = coset_moduli(family, n, p);
    CodeSpec probe{family, n, with_coset(family, p, std::vector<std::int64_t>(moduli.size(), 0))};
    probe.validate();

    std::vector<CodeSpec> out;
    std::vector<std::int64_t> key(moduli.size(), 0);
    while (true) {
        out.push_back({family, n, with_coset(family, p, key)});
        int k = static_cast<int>(key.size()) - 1;
        while (k >= 0 && ++key[static_cast<std::size_t>(k)] == moduli[static_cast<std::size_t>(k)]) {
            key[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

std::optional<CodeSpec> coset_of(CodeFamily family, int n, const CodeParams& fixed, const Word& x) {
    if (!has_residue_parameters(family))
        throw Error(ErrorCode::InvalidArgument, "family " + std::string(family_id(family)) + " has no residue parameters");
    if (x.size() != n) throw Error(ErrorCode::LengthMismatch, "word length differs from n");
    const CodeParams p = resolve_fixed(family, n, fixed);
    auto key = residue_key(family, n, p, x);
    if (!key) return std::nullopt;
    return CodeSpec{family, n, with_coset(family, p, *key)};
}

CodeSpec best_coset(CodeFamily family, int n, const CodeParams& fixed) {
    if (!has_residue_parameters(family))
        throw Error(ErrorCode::InvalidArgument, "family " + std::string(family_id(family)) + " has no residue parameters");
    check_enumerable(n, kEnumerationLimit);
    const CodeParams p = resolve_fixed(family, n, fixed);
    const std::vector<std::int64_t> moduli = coset_moduli(family, n, p);
    CodeSpec{family, n, with_coset(family, p, std::vector<std::int64_t>(moduli.size(), 0))}.validate();

    std::vector<std::uint64_t> counts(coset_count(family, n, p), 0);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < total; ++v) {
        auto key = residue_key(family, n, p, Word(n, v));
        if (!key) continue;
        std::uint64_t flat = 0;
        for (std::size_t k = 0; k < moduli.size(); ++k)
            flat = flat * static_cast<std::uint64_t>(moduli[k]) + static_cast<std::uint64_t>((*key)[k]);
        ++counts[flat];
    }
    // first maximum = smallest tuple in lexicographic order
    std::uint64_t best = static_cast<std::uint64_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    std::vector<std::int64_t> key(moduli.size());
    for (std::size_t k = moduli.size(); k-- > 0;) {
        key[k] = static_cast<std::int64_t>(best % static_cast<std::uint64_t>(moduli[k]));
        best /= static_cast<std::uint64_t>(moduli[k]);
    }
    return {family, n, with_coset(family, p, key)};
}

bool subcode_check(const CodeSpec& inner, const CodeSpec& outer) {
    if (inner.n != outer.n)
        throw Error(ErrorCode::LengthMismatch, "subcode check needs codes of equal length");
    bool ok = true;
    enumerate(inner, [&](const Word& x) { ok = ok && contains(outer, x); });
    return ok;
}

std::uint64_t run_bounded_size_formula(int n) {
    if (n <= 0) return n == 0 ? 1 : 0;
    const int top = (n + 1) / 2;
    std::uint64_t total = 0;
    for (int i = 0; i < top; ++i) {
        // C(n-1, i)
        std::uint64_t c = 1;
        for (int k = 1; k <= i; ++k) c = c * static_cast<std::uint64_t>(n - 1 - i + k) / static_cast<std::uint64_t>(k);
        total += 2 * c;
    }
    return total;
}

}  // namespace delsub
