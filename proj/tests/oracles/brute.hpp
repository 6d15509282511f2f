#pragma once

// Test-only reference code. Nothing here calls into the library's search or
// predicate kernels: graphs are dense boolean matrices and sets are sorted
// vertex lists, so these routines can check the library independently.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Set = std::vector<unsigned>;

inline Matrix dense(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges)
{
    Matrix m(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges)
        m[u][v] = m[v][u] = true;
    return m;
}

/// Expands every byte to six explicit bits and fills the upper triangle column by column.
inline Matrix decode_graph6(const std::string& s)
{
    if (s.empty() || s[0] < 63 || s[0] > 125)
        throw std::invalid_argument("bad graph6 header");
    const unsigned n = static_cast<unsigned>(s[0] - 63);
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const int value = s[i] - 63;
        for (int b = 5; b >= 0; --b)
            bits.push_back((value >> b) & 1);
    }
    Matrix m(n, std::vector<bool>(n, false));
    std::size_t k = 0;
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < j; ++i) {
            if (k >= bits.size())
                throw std::invalid_argument("short graph6");
            if (bits[k++] == 1)
                m[i][j] = m[j][i] = true;
        }
    return m;
}

inline bool connected(const Matrix& m)
{
    const auto n = m.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (std::size_t u = 0; u < n; ++u)
            if (m[v][u] && !seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    for (bool b : seen)
        if (!b)
            return false;
    return true;
}

/// Brute-force count of labelled connected graphs on n vertices.
inline std::uint64_t count_connected(unsigned n)
{
    std::vector<std::pair<unsigned, unsigned>> slots;
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < j; ++i)
            slots.emplace_back(i, j);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<unsigned, unsigned>> edges;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if ((mask >> b) & 1U)
                edges.push_back(slots[b]);
        count += connected(dense(n, edges)) ? 1 : 0;
    }
    return count;
}

inline bool in(const Set& s, unsigned v)
{
    for (auto x : s)
        if (x == v)
            return true;
    return false;
}

inline bool dominating(const Matrix& m, const Set& s)
{
    for (unsigned v = 0; v < m.size(); ++v) {
        bool ok = in(s, v);
        for (auto u : s)
            ok = ok || m[u][v];
        if (!ok)
            return false;
    }
    return true;
}

inline bool total_dominating(const Matrix& m, const Set& s)
{
    for (unsigned v = 0; v < m.size(); ++v) {
        bool ok = false;
        for (auto u : s)
            ok = ok || m[u][v];
        if (!ok)
            return false;
    }
    return true;
}

inline Set without(const Set& s, unsigned x, unsigned y)
{
    Set out;
    for (auto v : s)
        if (v != x && v != y)
            out.push_back(v);
    return out;
}

/// Every (u, v) replacement for the pair (x, y) that re-validates, in (u, v) order.
inline std::vector<std::pair<unsigned, unsigned>> replacements(const Matrix& m, const Set& t, unsigned x, unsigned y,
                                                                bool total, bool allow_equal)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    const auto rest = without(t, x, y);
    for (unsigned u = 0; u < m.size(); ++u)
        for (unsigned v = 0; v < m.size(); ++v) {
            if (in(t, u) || in(t, v) || !m[u][x] || !m[v][y] || (u == v && !allow_equal))
                continue;
            auto moved = rest;
            moved.push_back(u);
            if (v != u)
                moved.push_back(v);
            if (total ? total_dominating(m, moved) : dominating(m, moved))
                out.emplace_back(u, v);
        }
    return out;
}

inline bool movable(const Matrix& m, const Set& t, bool total, bool allow_equal = false)
{
    if (t.empty() || !(total ? total_dominating(m, t) : dominating(m, t)))
        return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            const auto rest = without(t, t[i], t[j]);
            if (total ? total_dominating(m, rest) : dominating(m, rest))
                continue;
            if (replacements(m, t, t[i], t[j], total, allow_equal).empty())
                return false;
        }
    return true;
}

/// Every subset of {0..n-1} as a sorted list, in lexicographic order within each size.
inline std::vector<Set> subsets_of_size(unsigned n, unsigned k)
{
    std::vector<Set> out;
    Set cur;
    auto rec = [&](auto&& self, unsigned start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (unsigned v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace oracle
