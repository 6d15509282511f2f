#pragma once

#include "movdom/certificate.hpp"
#include "movdom/domination.hpp"
#include "movdom/graph.hpp"
#include "movdom/invariant.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace movdom {

struct SolveOptions {
    bool allow_equal_replacements = false;
};

struct SolveStats {
    std::uint64_t subsets_examined = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct InvariantResult {
    InvariantKind kind = InvariantKind::gamma;
    /// Absent when no set satisfies the kind's predicate.
    std::optional<VertexId> value;
    Certificate certificate;
    SolveStats stats;

    [[nodiscard]] bool exists() const { return value.has_value(); }
    [[nodiscard]] VertexSet witness(VertexId order) const { return VertexSet(order, certificate.witness); }
};

/// Predicate behind each kind: dominating, total dominating, or their 2-movable variants.
bool satisfies(const Graph& g, const VertexSet& s, InvariantKind kind, SolveOptions options = {});

/// Exact minimum by ascending cardinality, lexicographic order within a
/// cardinality. Subsets failing the base predicate skip the movability test;
/// total kinds start at cardinality 2 and a graph with an isolated vertex has
/// no total dominating set at all.
InvariantResult solve(const Graph& g, InvariantKind kind, SolveOptions options = {});

inline constexpr VertexId kMaxNaiveOrder = 16;
inline constexpr VertexId kMaxAllMinimumOrder = 20;

/// Unpruned reference: filters every one of the 2^p subsets, then keeps the
/// minimum cardinality and the lexicographically first set. p <= 16.
InvariantResult solve_naive(const Graph& g, InvariantKind kind, SolveOptions options = {});

/// Every set of minimum cardinality that satisfies the kind, in lexicographic
/// order; empty iff nonexistent. p <= 20.
std::vector<VertexSet> all_minimum_sets(const Graph& g, InvariantKind kind, SolveOptions options = {});

/// Builds the certificate for a set known to satisfy `kind` (or a
/// nonexistence certificate when `witness` is empty).
Certificate make_certificate(const Graph& g, InvariantKind kind, const std::optional<VertexSet>& witness,
                             SolveOptions options = {});

/// Re-checks a certificate against its embedded graph: the witness satisfies
/// the kind's predicate, has the stated cardinality, and every move is valid
/// with each witness pair covered exactly once. Nonexistence certificates are
/// re-checked by an independent exhaustive search when p <= 16.
bool recheck_certificate(const Certificate& c, SolveOptions options = {});

} // namespace movdom
