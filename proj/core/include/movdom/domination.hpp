#pragma once

#include "movdom/graph.hpp"
#include "movdom/vertex_set.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace movdom {

/// N[S]: S together with every neighbour of a member.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// N(S): every vertex adjacent to some member (members included only when
/// they have a neighbour inside S).
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);

/// Dominating when `total` is false, total dominating otherwise.
bool passes_base(const Graph& g, const VertexSet& s, bool total);

enum class MoveAction { remove, replace };

/// Evidence that the pair {x, y} of a set T can be moved.
///
/// remove: T \ {x, y} still passes the base predicate.
/// replace: u ∉ T is adjacent to x, v ∉ T is adjacent to y, and
/// (T \ {x, y}) ∪ {u, v} passes the base predicate.
struct MoveWitness {
    VertexId x = 0;
    VertexId y = 0;
    MoveAction action = MoveAction::remove;
    std::optional<VertexId> u;
    std::optional<VertexId> v;

    friend bool operator==(const MoveWitness&, const MoveWitness&) = default;
};

struct MoveOptions {
    bool total = true;
    /// Accept u == v in a replacement. The movability definitions do not rule
    /// it out; the default keeps replacements distinct.
    bool allow_equal_replacements = false;
};

/// Searches a move for the pair (x, y) of t.
///
/// Prefers removal; otherwise returns the lexicographically first (u, v) with
/// u ∈ N(x) \ t and v ∈ N(y) \ t. The replacement set is symmetric in (u, v),
/// so the swapped assignment u ∈ N(y), v ∈ N(x) is covered by the same scan.
/// Throws PreconditionError if x or y is not in t, x == y, or t fails the
/// base predicate.
std::optional<MoveWitness> find_pair_move(const Graph& g, const VertexSet& t, VertexId x, VertexId y, MoveOptions options = {});

/// True iff the move re-validates against g and t.
bool check_move(const Graph& g, const VertexSet& t, const MoveWitness& move, MoveOptions options = {});

struct MovabilityResult {
    bool movable = false;
    /// One witness per unordered pair {x, y}, x < y, in lexicographic order. Filled on success.
    std::vector<MoveWitness> moves;
    /// First pair without a witness. Absent on success or when t fails the base predicate.
    std::optional<std::pair<VertexId, VertexId>> failing_pair;
};

/// 2-movability of t: t passes the base predicate and every pair of distinct
/// members admits a move. Sets with fewer than two members are vacuously
/// movable when they pass the base predicate.
MovabilityResult is_2movable(const Graph& g, const VertexSet& t, MoveOptions options = {});

/// Decision-only variant of is_2movable; stops at the first failing pair.
bool is_2movable_set(const Graph& g, const VertexSet& t, MoveOptions options = {});

} // namespace movdom
