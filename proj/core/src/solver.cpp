#include "movdom/solver.hpp"

#include "movdom/error.hpp"
#include "movdom/graph_io.hpp"

#include <numeric>
#include <string>

namespace movdom {

namespace {

using Clock = std::chrono::steady_clock;

void check_order(const Graph& g, VertexId limit, const char* what)
{
    if (g.order() == 0)
        throw GraphError(std::string(what) + ": graph has no vertices");
    if (g.order() > limit)
        throw LimitError(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds the limit of "
                         + std::to_string(limit));
}

/// Lexicographic walk over the k-subsets of {0..n-1}.
class Combinations {
public:
    Combinations(VertexId n, VertexId k) : n_(n), index_(k)
    {
        std::iota(index_.begin(), index_.end(), VertexId{0});
        for (auto i : index_)
            mask_ |= std::uint64_t{1} << i;
    }

    [[nodiscard]] std::uint64_t mask() const { return mask_; }

    bool next()
    {
        const auto k = static_cast<VertexId>(index_.size());
        VertexId i = k;
        while (i > 0 && index_[i - 1] == n_ - k + i - 1)
            --i;
        if (i == 0)
            return false;
        --i;
        ++index_[i];
        for (VertexId j = i + 1; j < k; ++j)
            index_[j] = index_[j - 1] + 1;
        mask_ = 0;
        for (auto v : index_)
            mask_ |= std::uint64_t{1} << v;
        return true;
    }

private:
    VertexId n_;
    std::vector<VertexId> index_;
    std::uint64_t mask_ = 0;
};

VertexId first_cardinality(InvariantKind kind)
{
    return is_total(kind) ? 2 : 1;
}

bool trivially_nonexistent(const Graph& g, InvariantKind kind)
{
    return is_total(kind) && g.has_isolated_vertex();
}

// Base predicate first, movability only on survivors.
bool satisfies_pruned(const Graph& g, const VertexSet& s, InvariantKind kind, const SolveOptions& options)
{
    const bool total = is_total(kind);
    if (!passes_base(g, s, total))
        return false;
    if (!is_movable(kind))
        return true;
    return is_2movable_set(g, s, MoveOptions{total, options.allow_equal_replacements});
}

} // namespace

bool satisfies(const Graph& g, const VertexSet& s, InvariantKind kind, SolveOptions options)
{
    return satisfies_pruned(g, s, kind, options);
}

Certificate make_certificate(const Graph& g, InvariantKind kind, const std::optional<VertexSet>& witness, SolveOptions options)
{
    Certificate c;
    c.kind = kind;
    if (g.order() <= kMaxGraph6Order)
        c.graph6 = write_graph6(g);
    if (!witness) {
        c.nonexistent = true;
        return c;
    }
    c.value = witness->size();
    c.witness = witness->to_vector();
    if (is_movable(kind)) {
        auto result = is_2movable(g, *witness, MoveOptions{is_total(kind), options.allow_equal_replacements});
        if (!result.movable)
            throw PreconditionError("witness " + witness->to_string() + " does not satisfy " + std::string(to_string(kind)));
        c.moves = std::move(result.moves);
    }
    return c;
}

InvariantResult solve(const Graph& g, InvariantKind kind, SolveOptions options)
{
    check_order(g, kMaxOrder, "solve");
    const auto start = Clock::now();
    InvariantResult result;
    result.kind = kind;

    std::optional<VertexSet> found;
    if (!trivially_nonexistent(g, kind)) {
        for (VertexId k = first_cardinality(kind); k <= g.order() && !found; ++k) {
            Combinations combo(g.order(), k);
            do {
                ++result.stats.subsets_examined;
                auto s = VertexSet::from_bits(g.order(), combo.mask());
                if (satisfies_pruned(g, s, kind, options)) {
                    found = s;
                    break;
                }
            } while (combo.next());
        }
    }

    if (found)
        result.value = found->size();
    result.certificate = make_certificate(g, kind, found, options);
    result.stats.elapsed = Clock::now() - start;
    return result;
}

std::vector<VertexSet> all_minimum_sets(const Graph& g, InvariantKind kind, SolveOptions options)
{
    check_order(g, kMaxAllMinimumOrder, "all_minimum_sets");
    std::vector<VertexSet> out;
    if (trivially_nonexistent(g, kind))
        return out;
    for (VertexId k = first_cardinality(kind); k <= g.order() && out.empty(); ++k) {
        Combinations combo(g.order(), k);
        do {
            auto s = VertexSet::from_bits(g.order(), combo.mask());
            if (satisfies_pruned(g, s, kind, options))
                out.push_back(s);
        } while (combo.next());
    }
    return out;
}

bool recheck_certificate(const Certificate& c, SolveOptions options)
{
    Graph g;
    try {
        g = parse_graph6(c.graph6);
    } catch (const ParseError&) {
        return false;
    }
    if (c.nonexistent) {
        if (c.value || !c.witness.empty() || !c.moves.empty())
            return false;
        auto again = g.order() <= kMaxNaiveOrder ? solve_naive(g, c.kind, options) : solve(g, c.kind, options);
        return !again.exists();
    }
    if (!c.value || *c.value != c.witness.size())
        return false;
    for (std::size_t i = 0; i < c.witness.size(); ++i)
        if (c.witness[i] >= g.order() || (i > 0 && c.witness[i - 1] >= c.witness[i]))
            return false;
    const VertexSet t(g.order(), c.witness);
    if (!passes_base(g, t, is_total(c.kind)))
        return false;
    if (!is_movable(c.kind))
        return c.moves.empty();

    // One valid move per unordered pair, nothing else.
    const MoveOptions move_options{is_total(c.kind), options.allow_equal_replacements};
    const auto expected_pairs = static_cast<std::size_t>(t.size()) * (t.size() - 1) / 2;
    if (c.moves.size() != expected_pairs)
        return false;
    std::vector<std::uint64_t> seen(g.order(), 0);
    for (const auto& m : c.moves) {
        if (!check_move(g, t, m, move_options))
            return false;
        const auto lo = std::min(m.x, m.y);
        const auto hi = std::max(m.x, m.y);
        if ((seen[lo] >> hi) & 1U)
            return false;
        seen[lo] |= std::uint64_t{1} << hi;
    }
    return true;
}

} // namespace movdom
