#include "movdom/graph.hpp"

#include "movdom/error.hpp"

#include <string>

namespace movdom {

namespace {

void check_order(VertexId order)
{
    if (order > kMaxOrder)
        throw LimitError("graph order " + std::to_string(order) + " exceeds the supported maximum of 64");
}

} // namespace

VertexId Graph::degree(VertexId v) const
{
    return static_cast<VertexId>(std::popcount(rows_[v]));
}

bool Graph::has_isolated_vertex() const
{
    for (auto r : rows_)
        if (r == 0)
            return true;
    return false;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(size_);
    for (VertexId j = 1; j < order_; ++j)
        for (VertexId i = 0; i < j; ++i)
            if (adjacent(i, j))
                out.emplace_back(i, j);
    return out;
}

Graph Graph::induced(const VertexSet& keep) const
{
    auto members = keep.to_vector();
    auto n = static_cast<VertexId>(members.size());
    std::vector<std::uint64_t> rows(n, 0);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
            if (adjacent(members[a], members[b]))
                rows[a] |= std::uint64_t{1} << b;
    return from_rows(n, std::move(rows));
}

Graph make_graph(VertexId order, const std::vector<Edge>& edges)
{
    check_order(order);
    std::vector<std::uint64_t> rows(order, 0);
    for (auto [u, v] : edges) {
        if (u >= order || v >= order)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range for order "
                             + std::to_string(order));
        if (u == v)
            throw GraphError("loop edge at vertex " + std::to_string(u));
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return from_rows(order, std::move(rows));
}

Graph from_rows(VertexId order, std::vector<std::uint64_t> rows)
{
    check_order(order);
    if (rows.size() != order)
        throw GraphError("row count does not match order");
    Graph g;
    g.order_ = order;
    std::uint64_t degree_sum = 0;
    for (VertexId v = 0; v < order; ++v) {
        rows[v] &= VertexSet::full_mask(order);
        if ((rows[v] >> v) & 1U)
            throw GraphError("loop edge at vertex " + std::to_string(v));
        degree_sum += static_cast<std::uint64_t>(std::popcount(rows[v]));
    }
    for (VertexId u = 0; u < order; ++u)
        for (VertexId v = u + 1; v < order; ++v)
            if (((rows[u] >> v) & 1U) != ((rows[v] >> u) & 1U))
                throw GraphError("adjacency rows are not symmetric");
    g.size_ = degree_sum / 2;
    g.rows_ = std::move(rows);
    return g;
}

Graph family(Family kind, VertexId order)
{
    if (order == 0)
        throw GraphError("family graphs need at least one vertex");
    std::vector<Edge> edges;
    switch (kind) {
    case Family::cycle:
        if (order < 3)
            throw GraphError("a cycle needs at least 3 vertices");
        edges.emplace_back(order - 1, 0);
        [[fallthrough]];
    case Family::path:
        for (VertexId v = 0; v + 1 < order; ++v)
            edges.emplace_back(v, v + 1);
        break;
    case Family::complete:
        for (VertexId u = 0; u < order; ++u)
            for (VertexId v = u + 1; v < order; ++v)
                edges.emplace_back(u, v);
        break;
    case Family::star:
        for (VertexId v = 1; v < order; ++v)
            edges.emplace_back(0, v);
        break;
    case Family::empty:
        break;
    }
    return make_graph(order, edges);
}

Graph join(const Graph& g, const Graph& h)
{
    const VertexId gp = g.order();
    const VertexId hp = h.order();
    if (gp == 0 || hp == 0)
        throw GraphError("join operands need at least one vertex");
    check_order(gp + hp);
    const auto g_mask = VertexSet::full_mask(gp);
    const auto h_mask = VertexSet::full_mask(hp) << gp;
    std::vector<std::uint64_t> rows(gp + hp);
    for (VertexId v = 0; v < gp; ++v)
        rows[v] = g.row(v) | h_mask;
    for (VertexId v = 0; v < hp; ++v)
        rows[gp + v] = (h.row(v) << gp) | g_mask;
    return from_rows(gp + hp, std::move(rows));
}

VertexId CoronaLayout::center_of(VertexId id) const
{
    if (id >= total_order())
        throw GraphError("vertex " + std::to_string(id) + " outside the corona layout");
    if (is_center(id))
        return id;
    return (id - g_order_) / h_order_;
}

std::optional<VertexId> CoronaLayout::copy_of(VertexId id) const
{
    if (id >= total_order())
        throw GraphError("vertex " + std::to_string(id) + " outside the corona layout");
    if (is_center(id))
        return std::nullopt;
    return (id - g_order_) % h_order_;
}

VertexSet CoronaLayout::centers() const
{
    return VertexSet::from_bits(total_order(), VertexSet::full_mask(g_order_));
}

VertexSet CoronaLayout::copy_vertices(VertexId center) const
{
    return VertexSet::from_bits(total_order(), VertexSet::full_mask(h_order_) << copy_vertex(center, 0));
}

Corona corona(const Graph& g, const Graph& h)
{
    const VertexId gp = g.order();
    const VertexId hp = h.order();
    if (gp == 0 || hp == 0)
        throw GraphError("corona operands need at least one vertex");
    CoronaLayout layout(gp, hp);
    check_order(layout.total_order());
    std::vector<std::uint64_t> rows(layout.total_order(), 0);
    for (VertexId a = 0; a < gp; ++a) {
        const VertexId base = layout.copy_vertex(a, 0);
        rows[a] = g.row(a) | (VertexSet::full_mask(hp) << base);
        for (VertexId j = 0; j < hp; ++j)
            rows[base + j] = (h.row(j) << base) | (std::uint64_t{1} << a);
    }
    return {from_rows(layout.total_order(), std::move(rows)), layout};
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        throw GraphError("connectivity is undefined for the empty graph");
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (auto v : VertexSet::from_bits(g.order(), frontier))
            next |= g.row(v);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == VertexSet::full_mask(g.order());
}

Graph graph_from_mask(VertexId order, std::uint64_t mask)
{
    check_order(order);
    std::vector<std::uint64_t> rows(order, 0);
    std::uint64_t bit = 0;
    for (VertexId j = 1; j < order; ++j)
        for (VertexId i = 0; i < j; ++i, ++bit)
            if (bit < 64 && ((mask >> bit) & 1U)) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
    return from_rows(order, std::move(rows));
}

namespace {

void for_each_mask(VertexId n, bool connected_only, const std::function<bool(const Graph&)>& visit)
{
    if (n == 0)
        throw GraphError("enumeration needs n >= 1");
    if (n > kMaxEnumerationOrder)
        throw LimitError("enumeration is limited to n <= 7 (2^21 edge masks); requested n = " + std::to_string(n));
    const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        auto g = graph_from_mask(n, mask);
        if (connected_only && !is_connected(g))
            continue;
        if (!visit(g))
            return;
    }
}

} // namespace

void for_each_connected(VertexId n, const std::function<bool(const Graph&)>& visit)
{
    for_each_mask(n, true, visit);
}

void for_each_labeled(VertexId n, const std::function<bool(const Graph&)>& visit)
{
    for_each_mask(n, false, visit);
}

std::vector<Graph> enumerate_connected(VertexId n)
{
    std::vector<Graph> out;
    for_each_connected(n, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

} // namespace movdom
