#pragma once

// Brute-force reference implementations over std::string words. Nothing here
// shares code with the library; tests compare the two.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Set = std::set<std::string>;

std::vector<std::string> all_words(int n);

std::string erase_at(const std::string& x, int pos1);
std::string flip_at(const std::string& x, int pos1);

Set del_ball(const std::string& x);
Set sub_ball(const std::string& x);
Set ds_ball(const std::string& x);

Set meet(const Set& a, const Set& b);
Set join(const Set& a, const Set& b);

int run_count(const std::string& x);
int weight(const std::string& x);
std::int64_t vt(const std::string& x, int k);
std::int64_t inversions(const std::string& x);
std::string psi(const std::string& x);
std::string psi_inverse(const std::string& y);
int max_le2_periodic(const std::string& x);
int hamming(const std::string& x, const std::string& y);

struct Decomposition {
    Set S, D, B, B_extra;
};
Decomposition decompose(const std::string& x, const std::string& y);

// (i, sub) pairs, sub = 0 for no flip, post-deletion coordinates
std::vector<std::pair<int, int>> witnesses(const std::string& x, const std::string& z);

// good iff some witness pair puts a flip outside [min(i,j), max(i,j)]
bool is_bad(const std::string& x, const std::string& y, const std::string& z, bool pre_deletion, bool none_inside);

Set preimage(const std::string& z);
Set constrained(const std::string& u, const std::string& v);

// Membership straight from the family definitions.
bool in_code(const std::string& family, const std::string& x, std::int64_t a, std::int64_t m, std::int64_t P,
             std::int64_t a0, std::int64_t a1, std::int64_t a2);

std::uint64_t binomial(int n, int k);

}  // namespace oracle
