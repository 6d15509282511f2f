#include "movdom/domination.hpp"

#include "movdom/error.hpp"

#include <string>

namespace movdom {

namespace {

// Hot-path kernels on raw words. `order_mask` is the full vertex mask.
std::uint64_t open_bits(const Graph& g, std::uint64_t s)
{
    std::uint64_t covered = 0;
    for (; s != 0; s &= s - 1)
        covered |= g.row(static_cast<VertexId>(std::countr_zero(s)));
    return covered;
}

bool base_bits(const Graph& g, std::uint64_t s, bool total, std::uint64_t order_mask)
{
    auto covered = open_bits(g, s);
    if (!total)
        covered |= s;
    return covered == order_mask;
}

std::optional<MoveWitness> search_move(const Graph& g, std::uint64_t t, VertexId x, VertexId y, const MoveOptions& options,
                                       std::uint64_t order_mask)
{
    const std::uint64_t rest = t & ~(std::uint64_t{1} << x) & ~(std::uint64_t{1} << y);
    if (base_bits(g, rest, options.total, order_mask))
        return MoveWitness{x, y, MoveAction::remove, std::nullopt, std::nullopt};

    const std::uint64_t u_candidates = g.row(x) & ~t;
    const std::uint64_t v_candidates = g.row(y) & ~t;
    for (auto us = u_candidates; us != 0; us &= us - 1) {
        const auto u = static_cast<VertexId>(std::countr_zero(us));
        for (auto vs = v_candidates; vs != 0; vs &= vs - 1) {
            const auto v = static_cast<VertexId>(std::countr_zero(vs));
            if (u == v && !options.allow_equal_replacements)
                continue;
            const std::uint64_t moved = rest | (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            if (base_bits(g, moved, options.total, order_mask))
                return MoveWitness{x, y, MoveAction::replace, u, v};
        }
    }
    return std::nullopt;
}

} // namespace

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s)
{
    return VertexSet::from_bits(g.order(), open_bits(g, s.bits()) | s.bits());
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s)
{
    return VertexSet::from_bits(g.order(), open_bits(g, s.bits()));
}

bool is_dominating(const Graph& g, const VertexSet& s)
{
    return base_bits(g, s.bits(), false, VertexSet::full_mask(g.order()));
}

bool is_total_dominating(const Graph& g, const VertexSet& s)
{
    return base_bits(g, s.bits(), true, VertexSet::full_mask(g.order()));
}

bool passes_base(const Graph& g, const VertexSet& s, bool total)
{
    return base_bits(g, s.bits(), total, VertexSet::full_mask(g.order()));
}

std::optional<MoveWitness> find_pair_move(const Graph& g, const VertexSet& t, VertexId x, VertexId y, MoveOptions options)
{
    if (x == y)
        throw PreconditionError("pair members must be distinct (x = y = " + std::to_string(x) + ")");
    if (!t.contains(x) || !t.contains(y))
        throw PreconditionError("pair (" + std::to_string(x) + "," + std::to_string(y) + ") is not contained in " + t.to_string());
    if (!passes_base(g, t, options.total))
        throw PreconditionError(t.to_string() + (options.total ? " is not a total dominating set" : " is not a dominating set"));
    return search_move(g, t.bits(), x, y, options, VertexSet::full_mask(g.order()));
}

bool check_move(const Graph& g, const VertexSet& t, const MoveWitness& move, MoveOptions options)
{
    if (move.x == move.y || !t.contains(move.x) || !t.contains(move.y))
        return false;
    auto moved = t;
    moved.erase(move.x);
    moved.erase(move.y);
    if (move.action == MoveAction::remove)
        return !move.u && !move.v && passes_base(g, moved, options.total);
    if (!move.u || !move.v)
        return false;
    const VertexId u = *move.u;
    const VertexId v = *move.v;
    if (u >= g.order() || v >= g.order() || t.contains(u) || t.contains(v))
        return false;
    if (!g.adjacent(u, move.x) || !g.adjacent(v, move.y))
        return false;
    if (u == v && !options.allow_equal_replacements)
        return false;
    moved.insert(u);
    moved.insert(v);
    return passes_base(g, moved, options.total);
}

MovabilityResult is_2movable(const Graph& g, const VertexSet& t, MoveOptions options)
{
    MovabilityResult result;
    const auto order_mask = VertexSet::full_mask(g.order());
    if (t.empty() || !base_bits(g, t.bits(), options.total, order_mask))
        return result;
    for (auto it = t.begin(); it != t.end(); ++it) {
        auto jt = it;
        for (++jt; jt != t.end(); ++jt) {
            auto move = search_move(g, t.bits(), *it, *jt, options, order_mask);
            if (!move) {
                result.moves.clear();
                result.failing_pair = std::make_pair(*it, *jt);
                return result;
            }
            result.moves.push_back(*move);
        }
    }
    result.movable = true;
    return result;
}

bool is_2movable_set(const Graph& g, const VertexSet& t, MoveOptions options)
{
    const auto order_mask = VertexSet::full_mask(g.order());
    if (t.empty() || !base_bits(g, t.bits(), options.total, order_mask))
        return false;
    for (auto it = t.begin(); it != t.end(); ++it) {
        auto jt = it;
        for (++jt; jt != t.end(); ++jt)
            if (!search_move(g, t.bits(), *it, *jt, options, order_mask))
                return false;
    }
    return true;
}

} // namespace movdom
