// Reference solver. Shares no search or predicate code with solve(): the
// predicates below are written straight from the set definitions over
// vector<bool> membership, so the two routes can be compared.

#include "movdom/error.hpp"
#include "movdom/solver.hpp"

#include <algorithm>
#include <string>

namespace movdom {

namespace {

using Members = std::vector<bool>;

bool dominating(const Graph& g, const Members& s)
{
    for (VertexId v = 0; v < g.order(); ++v) {
        if (s[v])
            continue;
        bool hit = false;
        for (VertexId u = 0; u < g.order() && !hit; ++u)
            hit = s[u] && g.adjacent(u, v);
        if (!hit)
            return false;
    }
    return true;
}

bool total_dominating(const Graph& g, const Members& s)
{
    for (VertexId v = 0; v < g.order(); ++v) {
        bool hit = false;
        for (VertexId u = 0; u < g.order() && !hit; ++u)
            hit = s[u] && g.adjacent(u, v);
        if (!hit)
            return false;
    }
    return true;
}

bool base(const Graph& g, const Members& s, bool total)
{
    return total ? total_dominating(g, s) : dominating(g, s);
}

bool movable(const Graph& g, const Members& t, bool total, bool allow_equal)
{
    const VertexId n = g.order();
    bool nonempty = false;
    for (VertexId v = 0; v < n; ++v)
        nonempty = nonempty || t[v];
    if (!nonempty || !base(g, t, total))
        return false;
    for (VertexId x = 0; x < n; ++x) {
        if (!t[x])
            continue;
        for (VertexId y = x + 1; y < n; ++y) {
            if (!t[y])
                continue;
            Members rest = t;
            rest[x] = false;
            rest[y] = false;
            bool ok = base(g, rest, total);
            for (VertexId u = 0; u < n && !ok; ++u) {
                if (t[u] || !g.adjacent(u, x))
                    continue;
                for (VertexId v = 0; v < n && !ok; ++v) {
                    if (t[v] || !g.adjacent(v, y) || (u == v && !allow_equal))
                        continue;
                    Members moved = rest;
                    moved[u] = true;
                    moved[v] = true;
                    ok = base(g, moved, total);
                }
            }
            if (!ok)
                return false;
        }
    }
    return true;
}

bool qualifies(const Graph& g, const Members& s, InvariantKind kind, bool allow_equal)
{
    switch (kind) {
    case InvariantKind::gamma:
        return dominating(g, s);
    case InvariantKind::gamma_t:
        return total_dominating(g, s);
    case InvariantKind::gamma_m2:
        return movable(g, s, false, allow_equal);
    case InvariantKind::gamma_mt2:
        return movable(g, s, true, allow_equal);
    }
    return false;
}

} // namespace

InvariantResult solve_naive(const Graph& g, InvariantKind kind, SolveOptions options)
{
    if (g.order() == 0)
        throw GraphError("solve_naive: graph has no vertices");
    if (g.order() > kMaxNaiveOrder)
        throw LimitError("solve_naive: order " + std::to_string(g.order()) + " exceeds the limit of "
                         + std::to_string(kMaxNaiveOrder));
    const auto start = std::chrono::steady_clock::now();
    const VertexId n = g.order();

    InvariantResult result;
    result.kind = kind;
    std::optional<std::vector<VertexId>> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ++result.stats.subsets_examined;
        Members s(n, false);
        std::vector<VertexId> list;
        for (VertexId v = 0; v < n; ++v)
            if ((mask >> v) & 1U) {
                s[v] = true;
                list.push_back(v);
            }
        if (!qualifies(g, s, kind, options.allow_equal_replacements))
            continue;
        if (!best || list.size() < best->size() || (list.size() == best->size() && list < *best))
            best = std::move(list);
    }

    std::optional<VertexSet> found;
    if (best) {
        found = VertexSet(n, *best);
        result.value = static_cast<VertexId>(best->size());
    }
    result.certificate = make_certificate(g, kind, found, options);
    result.stats.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

} // namespace movdom
