#pragma once

#include "movdom/vertex_set.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace movdom {

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on vertices 0..order-1 with bitset adjacency rows.
///
/// Graphs are immutable once built; every constructor below validates its
/// input and produces a symmetric, irreflexive adjacency. Orders above
/// kMaxOrder (64) are rejected with LimitError.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] VertexId order() const { return order_; }
    [[nodiscard]] std::uint64_t size() const { return size_; }
    [[nodiscard]] VertexSet neighbors(VertexId v) const { return VertexSet::from_bits(order_, rows_[v]); }
    [[nodiscard]] std::uint64_t row(VertexId v) const { return rows_[v]; }
    [[nodiscard]] bool adjacent(VertexId u, VertexId v) const { return (rows_[u] >> v) & 1U; }
    [[nodiscard]] VertexId degree(VertexId v) const;
    [[nodiscard]] VertexSet vertices() const { return VertexSet::full(order_); }
    [[nodiscard]] bool has_isolated_vertex() const;

    /// Edges (u, v) with u < v, sorted by (v, u): the graph6 column order.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Subgraph induced by `keep`, relabelled in ascending member order.
    [[nodiscard]] Graph induced(const VertexSet& keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph make_graph(VertexId, const std::vector<Edge>&);
    friend Graph from_rows(VertexId, std::vector<std::uint64_t>);

    VertexId order_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Builds a graph from an edge list. Duplicate edges collapse silently.
/// Throws GraphError on an endpoint >= order or a loop, LimitError on order > 64.
Graph make_graph(VertexId order, const std::vector<Edge>& edges);

/// Builds a graph from raw adjacency rows; rows must already be symmetric and loop-free.
Graph from_rows(VertexId order, std::vector<std::uint64_t> rows);

enum class Family { path, cycle, complete, star, empty };

/// Canonical labelled members of the standard families. Star has centre 0.
/// Throws GraphError for order 0 or a cycle shorter than 3.
Graph family(Family kind, VertexId order);

/// G + H: H's vertex i becomes order(G) + i, plus every cross edge.
Graph join(const Graph& g, const Graph& h);

/// Vertex numbering of a corona G∘H.
///
/// Centre a of G keeps id a; vertex j of the copy attached to a gets id
/// g_order + a*h_order + j.
class CoronaLayout {
public:
    CoronaLayout() = default;
    CoronaLayout(VertexId g_order, VertexId h_order) : g_order_(g_order), h_order_(h_order) {}

    [[nodiscard]] VertexId g_order() const { return g_order_; }
    [[nodiscard]] VertexId h_order() const { return h_order_; }
    [[nodiscard]] VertexId total_order() const { return g_order_ * (1 + h_order_); }

    [[nodiscard]] VertexId copy_vertex(VertexId center, VertexId j) const { return g_order_ + center * h_order_ + j; }
    [[nodiscard]] bool is_center(VertexId id) const { return id < g_order_; }

    /// The centre a such that id is a or lies in the copy H^a.
    [[nodiscard]] VertexId center_of(VertexId id) const;

    /// Position j of id inside its copy; nullopt for centres.
    [[nodiscard]] std::optional<VertexId> copy_of(VertexId id) const;

    [[nodiscard]] VertexSet centers() const;
    [[nodiscard]] VertexSet copy_vertices(VertexId center) const;

    friend bool operator==(const CoronaLayout&, const CoronaLayout&) = default;

private:
    VertexId g_order_ = 0;
    VertexId h_order_ = 0;
};

struct Corona {
    Graph graph;
    CoronaLayout layout;
};

/// G∘H: one copy of H per vertex of G, each centre joined to its whole copy.
Corona corona(const Graph& g, const Graph& h);

/// True iff a traversal from vertex 0 reaches every vertex.
bool is_connected(const Graph& g);

inline constexpr VertexId kMaxEnumerationOrder = 7;

/// Number of upper-triangle positions, n(n-1)/2.
constexpr std::uint64_t pair_count(VertexId n) { return std::uint64_t{n} * (n - (n > 0 ? 1 : 0)) / 2; }

/// Graph whose edges are the set bits of `mask` in graph6 column order:
/// bit j(j-1)/2 + i is the edge (i, j), i < j.
Graph graph_from_mask(VertexId order, std::uint64_t mask);

/// Visits every labelled connected graph on n vertices, in increasing order
/// of the upper-triangle edge mask. Return false from the visitor to stop.
/// Throws LimitError for n > 7 and GraphError for n == 0.
void for_each_connected(VertexId n, const std::function<bool(const Graph&)>& visit);

/// Same as for_each_connected but without the connectivity filter.
void for_each_labeled(VertexId n, const std::function<bool(const Graph&)>& visit);

/// Materialized for_each_connected.
std::vector<Graph> enumerate_connected(VertexId n);

inline constexpr std::uint64_t kMaxRejections = 1'000'000;

/// Seeded G(n, p) sample, redrawn until connected.
///
/// The generator is std::mt19937_64 seeded with `seed`. Each draw visits the
/// pairs in graph6 column order, (0,1), (0,2), (1,2), (0,3), ..., and keeps a
/// pair iff (next() >> 11) * 2^-53 < edge_prob. A draw that is disconnected is
/// discarded and the next draw continues from the same generator state.
/// Throws SamplingError after kMaxRejections discarded draws.
Graph random_connected(VertexId n, double edge_prob, std::uint64_t seed);

/// Same sampling scheme, no connectivity requirement (one draw).
Graph random_graph(VertexId n, double edge_prob, std::uint64_t seed);

} // namespace movdom
