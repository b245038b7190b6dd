#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

std::vector<std::string> all_words(int n) {
    std::vector<std::string> out{""};
    for (int k = 0; k < n; ++k) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            next.push_back(w + "0");
            next.push_back(w + "1");
        }
        out = std::move(next);
    }
    return out;
}

std::string erase_at(const std::string& x, int pos1) {
    std::string s = x;
    s.erase(static_cast<std::size_t>(pos1 - 1), 1);
    return s;
}

std::string flip_at(const std::string& x, int pos1) {
    std::string s = x;
    char& c = s[static_cast<std::size_t>(pos1 - 1)];
    c = c == '0' ? '1' : '0';
    return s;
}

Set del_ball(const std::string& x) {
    Set out;
    for (int i = 1; i <= static_cast<int>(x.size()); ++i) out.insert(erase_at(x, i));
    return out;
}

Set sub_ball(const std::string& x) {
    Set out{x};
    for (int i = 1; i <= static_cast<int>(x.size()); ++i) out.insert(flip_at(x, i));
    return out;
}

Set ds_ball(const std::string& x) {
    Set out;
    for (const auto& d : del_ball(x))
        for (const auto& s : sub_ball(d)) out.insert(s);
    return out;
}

Set meet(const Set& a, const Set& b) {
    Set out;
    for (const auto& w : a)
        if (b.count(w)) out.insert(w);
    return out;
}

Set join(const Set& a, const Set& b) {
    Set out = a;
    out.insert(b.begin(), b.end());
    return out;
}

int run_count(const std::string& x) {
    int r = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (i == 0 || x[i] != x[i - 1]) ++r;
    return r;
}

int weight(const std::string& x) { return static_cast<int>(std::count(x.begin(), x.end(), '1')); }

std::int64_t vt(const std::string& x, int k) {
    // Σ_i Σ_{j<=i} j^{k-1} x_i
    std::int64_t total = 0;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        if (x[i - 1] != '1') continue;
        for (std::size_t j = 1; j <= i; ++j) total += k == 1 ? 1 : static_cast<std::int64_t>(j);
    }
    return total;
}

std::int64_t inversions(const std::string& x) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == '1' && x[j] == '0') ++count;
    return count;
}

std::string psi(const std::string& x) {
    std::string y = x;
    char prev = '0';
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = x[i] == prev ? '0' : '1';
        prev = x[i];
    }
    return y;
}

std::string psi_inverse(const std::string& y) {
    std::string x = y;
    char acc = '0';
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == '1') acc = acc == '0' ? '1' : '0';
        x[i] = acc;
    }
    return x;
}

int max_le2_periodic(const std::string& x) {
    const int n = static_cast<int>(x.size());
    int best = std::min(n, 2);
    for (int l = 0; l < n; ++l)
        for (int r = l + 2; r < n; ++r) {
            bool ok = true;
            for (int k = l; k + 2 <= r && ok; ++k) ok = x[k] == x[k + 2];
            if (ok) best = std::max(best, r - l + 1);
        }
    return best;
}

int hamming(const std::string& x, const std::string& y) {
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

Decomposition decompose(const std::string& x, const std::string& y) {
    Decomposition out;
    for (const auto& z : meet(del_ball(x), del_ball(y))) out.S = join(out.S, sub_ball(z));
    for (const auto& z : meet(sub_ball(x), sub_ball(y))) out.D = join(out.D, del_ball(z));
    out.B = meet(ds_ball(x), ds_ball(y));
    const Set both = join(out.D, out.S);
    for (const auto& z : out.B)
        if (!both.count(z)) out.B_extra.insert(z);
    return out;
}

std::vector<std::pair<int, int>> witnesses(const std::string& x, const std::string& z) {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(x.size());
    for (int i = 1; i <= n; ++i) {
        const std::string d = erase_at(x, i);
        if (d == z) out.emplace_back(i, 0);
        for (int s = 1; s <= n - 1; ++s)
            if (flip_at(d, s) == z) out.emplace_back(i, s);
    }
    return out;
}

bool is_bad(const std::string& x, const std::string& y, const std::string& z, bool pre_deletion, bool none_inside) {
    const auto wx = witnesses(x, z);
    const auto wy = witnesses(y, z);
    if (wx.empty() || wy.empty()) throw std::invalid_argument("z outside B(x,y)");
    // flip position in the coordinates the interval is measured in; 0 = none
    auto coord = [&](int del, int sub) { return pre_deletion && sub >= del ? sub + 1 : sub; };
    for (const auto& [i, si] : wx)
        for (const auto& [j, sj] : wy) {
            const int lo = std::min(i, j), hi = std::max(i, j);
            auto outside = [&](int del, int sub) {
                if (sub == 0) return !none_inside;
                const int p = coord(del, sub);
                return p < lo || p > hi;
            };
            if (outside(i, si) || outside(j, sj)) return false;
        }
    return true;
}

Set preimage(const std::string& z) {
    Set out;
    for (const auto& w : all_words(static_cast<int>(z.size()) + 1))
        if (ds_ball(w).count(z)) out.insert(w);
    return out;
}

Set constrained(const std::string& u, const std::string& v) {
    Set out;
    for (const auto& z : del_ball(v))
        if (hamming(z, u) <= 1) out.insert(z);
    return out;
}

namespace {

std::int64_t md(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

bool run_bounded(const std::string& x) {
    const int n = static_cast<int>(x.size());
    return run_count(x) <= (n + 1) / 2;
}

std::int64_t even_positions(const std::string& x) {
    std::int64_t s = 0;
    for (std::size_t i = 2; i <= x.size(); i += 2) s += x[i - 1] == '1';
    return s;
}

}  // namespace

bool in_code(const std::string& family, const std::string& x, std::int64_t a, std::int64_t m, std::int64_t P,
             std::int64_t a0, std::int64_t a1, std::int64_t a2) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    if (family == "full") return true;
    if (family == "vt") return md(vt(x, 1), 2 * n) == a;
    if (family == "inv") return md(inversions(x), m) == a;
    if (family == "vt_mod") return md(vt(x, 1), m) == a;
    if (family == "even_pos") return md(even_positions(x), m) == a;
    if (family == "run_bounded") return run_bounded(x);
    if (family == "rll") return max_le2_periodic(x) <= P;
    if (family == "cp")
        return max_le2_periodic(x) <= P && md(weight(x), 2) == a1 && md(inversions(x), 1 + P / 2) == a2;
    if (family == "c2n9") return run_bounded(x) && md(inversions(x), m) == a;
    if (family == "cn21")
        return max_le2_periodic(x) <= P && run_bounded(x) && md(weight(x), 2) == a1 &&
               md(inversions(x), 1 + P / 2) == a2;
    if (family == "cl")
        return md(weight(x), 4) == a0 && md(vt(x, 1), 2 * n) == a1 && md(vt(x, 2), 2 * n * n) == a2;
    throw std::invalid_argument("unknown family " + family);
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace oracle
