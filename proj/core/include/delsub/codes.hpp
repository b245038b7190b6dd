#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "delsub/word.hpp"

namespace delsub {

enum class CodeFamily {
    Full,        // all of Σⁿ
    Vt,          // VT1 ≡ a (mod 2n)
    Inv,         // Inv ≡ a (mod m)
    VtMod,       // VT1 ≡ a (mod m)
    EvenPos,     // x_2 + x_4 + ... + x_{2⌊n/2⌋} ≡ a (mod m)
    RunBounded,  // r(x) ≤ ⌈n/2⌉
    Rll,         // every ≤2-periodic window has length ≤ P
    Cp,          // RLL(P), wt ≡ a1 (mod 2), Inv ≡ a2 (mod 1+P/2)
    C2n9,        // RunBounded, Inv ≡ a (mod m)
    Cn21,        // RLL(P), RunBounded, wt ≡ a1 (mod 2), Inv ≡ a2 (mod 1+P/2)
    Cl,          // wt ≡ a0 (mod 4), VT1 ≡ a1 (mod 2n), VT2 ≡ a2 (mod 2n²)
};

std::string_view family_id(CodeFamily family);
CodeFamily parse_family(std::string_view id);
const std::vector<CodeFamily>& all_families();

struct CodeParams {
    std::int64_t a = 0;
    std::int64_t m = 0;
    std::int64_t P = 0;
    std::int64_t a0 = 0;
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct CodeSpec {
    CodeFamily family = CodeFamily::Full;
    int n = 0;
    CodeParams params;

    static CodeSpec full(int n);
    static CodeSpec vt(int n, std::int64_t a);
    static CodeSpec inv(int n, std::int64_t a, std::int64_t m);
    static CodeSpec vt_mod(int n, std::int64_t a, std::int64_t m);
    static CodeSpec even_pos(int n, std::int64_t a, std::int64_t m);
    static CodeSpec run_bounded(int n);
    static CodeSpec rll(int n, std::int64_t P);
    static CodeSpec cp(int n, std::int64_t P, std::int64_t a1, std::int64_t a2);
    static CodeSpec c2n9(int n, std::int64_t a, std::int64_t m);
    static CodeSpec cn21(int n, std::int64_t P, std::int64_t a1, std::int64_t a2);
    static CodeSpec cl(int n, std::int64_t a0, std::int64_t a1, std::int64_t a2);

    // throws Error(InvalidArgument) naming the offending parameter
    void validate() const;

    // "a=3,m=5" style list of the parameters this family uses
    std::string params_string() const;
    std::string describe() const;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

constexpr int kEnumerationLimit = 24;

int default_rll_period(int n);

bool contains(const CodeSpec& spec, const Word& x);

void enumerate(const CodeSpec& spec, const std::function<void(const Word&)>& visit,
               int limit = kEnumerationLimit);
std::vector<Word> members(const CodeSpec& spec, int limit = kEnumerationLimit);
std::uint64_t size(const CodeSpec& spec, int limit = kEnumerationLimit);
double redundancy(const CodeSpec& spec, int limit = kEnumerationLimit);

// Residue families: the free parameters form the coset key, the rest
// (m for Inv/VtMod/EvenPos/C2n9, P for Cp/Cn21) come from `fixed`.
bool has_residue_parameters(CodeFamily family);
std::vector<CodeSpec> coset_partition(CodeFamily family, int n, const CodeParams& fixed = {});
std::optional<CodeSpec> coset_of(CodeFamily family, int n, const CodeParams& fixed, const Word& x);
// product of the moduli of the free parameters
std::uint64_t coset_count(CodeFamily family, int n, const CodeParams& fixed = {});
CodeSpec best_coset(CodeFamily family, int n, const CodeParams& fixed = {});

bool subcode_check(const CodeSpec& inner, const CodeSpec& outer);

// Σ_{i<⌈n/2⌉} 2·C(n-1, i), the closed-form size of RunBounded
std::uint64_t run_bounded_size_formula(int n);

struct CodeFile {
    CodeSpec spec;
    std::vector<Word> words;
};

std::string format_code_header(const CodeSpec& spec);
CodeSpec parse_code_header(std::string_view line);
// "family=vt,n=8,a=3" or the header body "family=vt n=8 params=a=3"
CodeSpec parse_code_spec(std::string_view text);
void write_code_file(std::ostream& os, const CodeSpec& spec);
CodeFile read_code_file(std::istream& is);

}  // namespace delsub
