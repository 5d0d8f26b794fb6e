#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's algorithms; inputs are plain vectors so the oracles stay
// independent of the code they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

inline bool associative(const Table& t) {
    const int n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
    return true;
}

inline std::vector<int> local_identity_candidates(const Table& t, int x) {
    std::vector<int> out;
    for (int z = 0; z < static_cast<int>(t.size()); ++z)
        if (t[z][x] == x && t[x][z] == x) out.push_back(z);
    return out;
}

inline bool is_generalized_group(const Table& t) {
    if (!associative(t)) return false;
    for (int x = 0; x < static_cast<int>(t.size()); ++x) {
        const auto c = local_identity_candidates(t, x);
        if (c.size() != 1) return false;
        bool inverse = false;
        for (int y = 0; y < static_cast<int>(t.size()); ++y) inverse = inverse || (t[x][y] == c[0] && t[y][x] == c[0]);
        if (!inverse) return false;
    }
    return true;
}

inline int count_idempotents(const Table& t) {
    int c = 0;
    for (int x = 0; x < static_cast<int>(t.size()); ++x) c += t[x][x] == x;
    return c;
}

inline bool is_normal(const Table& t) {
    const int n = static_cast<int>(t.size());
    auto e = [&](int x) { return local_identity_candidates(t, x).front(); };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (e(t[x][y]) != t[e(x)][e(y)]) return false;
    return true;
}

/// Every map g -> h, tested against the law exhaustively.
inline std::vector<std::vector<int>> all_homs(const Table& g, const Table& h) {
    const int n = static_cast<int>(g.size());
    const int m = static_cast<int>(h.size());
    std::vector<std::vector<int>> out;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) ok = f[g[a][b]] == h[f[a]][f[b]];
        if (ok) out.push_back(f);
        int k = n - 1;
        while (k >= 0 && ++f[k] == m) f[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

/// Rees product over Z/n with sandwich p[l][i] (exponent notation).
struct ReesZn {
    int n, isz, lsz;
    std::vector<std::vector<int>> p;
    int index(int i, int g, int l) const { return (i * n + g) * lsz + l; }
    Table table() const {
        const int size = isz * n * lsz;
        Table t(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
        for (int i = 0; i < isz; ++i)
            for (int g = 0; g < n; ++g)
                for (int l = 0; l < lsz; ++l)
                    for (int j = 0; j < isz; ++j)
                        for (int h = 0; h < n; ++h)
                            for (int m = 0; m < lsz; ++m)
                                t[index(i, g, l)][index(j, h, m)] = index(i, (g + p[l][j] + h) % n, m);
        return t;
    }
};

// Integer matrices as nested vectors of int64.
using Mat = std::vector<std::vector<std::int64_t>>;

inline std::int64_t det(const Mat& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    std::int64_t total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        Mat minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(row);
        }
        const std::int64_t term = a[0][c] * det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// gcd of all k x k minors (0 if all vanish).
inline std::int64_t minor_gcd(const Mat& a, std::size_t k) {
    if (k == 0) return 1;
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    subsets(a.size(), k, 0, cur, rows);
    subsets(a.empty() ? 0 : a[0].size(), k, 0, cur, cols);
    std::int64_t g = 0;
    for (const auto& r : rows)
        for (const auto& c : cols) {
            Mat m;
            for (auto i : r) {
                std::vector<std::int64_t> row;
                for (auto j : c) row.push_back(a[i][j]);
                m.push_back(row);
            }
            g = std::gcd(g, det(m));
        }
    return g;
}

/// Invariant factors d_i = g_i / g_{i-1} from minor gcds; stops at rank.
inline std::vector<std::int64_t> invariant_factors(const Mat& a) {
    std::vector<std::int64_t> out;
    const std::size_t k = std::min(a.size(), a.empty() ? std::size_t{0} : a[0].size());
    std::int64_t prev = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::int64_t g = minor_gcd(a, i);
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/// Dense model of the sequence carriers, positions 1..size.
using Dense = std::map<std::int64_t, std::int64_t>;

inline std::int64_t at(const Dense& x, std::int64_t k) {
    auto it = x.find(k);
    return it == x.end() ? 0 : it->second;
}

inline Dense clean(Dense x) {
    for (auto it = x.begin(); it != x.end();) it = it->second == 0 ? x.erase(it) : std::next(it);
    return x;
}

inline Dense star(const Dense& x, const Dense& y, std::int64_t size) {
    Dense out;
    for (std::int64_t k = 1; k <= size; ++k) {
        switch (k % 3) {
        case 1: out[k] = at(x, k); break;
        case 2: out[k] = at(y, k); break;
        default: out[k] = at(x, k) + at(y, k);
        }
    }
    return clean(out);
}

} // namespace oracle
