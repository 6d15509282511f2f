#include "movdom/error.hpp"
#include "movdom/graph.hpp"

#include <random>
#include <string>

namespace movdom {

namespace {

Graph draw(VertexId n, double edge_prob, std::mt19937_64& rng)
{
    std::vector<std::uint64_t> rows(n, 0);
    constexpr double kScale = 1.0 / 9007199254740992.0; // 2^-53
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) {
            const double r = static_cast<double>(rng() >> 11) * kScale;
            if (r < edge_prob) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    return from_rows(n, std::move(rows));
}

void check_arguments(VertexId n, double edge_prob)
{
    if (n == 0)
        throw GraphError("random graphs need at least one vertex");
    if (n > kMaxOrder)
        throw LimitError("graph order " + std::to_string(n) + " exceeds the supported maximum of 64");
    if (!(edge_prob > 0.0 && edge_prob <= 1.0))
        throw GraphError("edge probability must lie in (0, 1]");
}

} // namespace

Graph random_graph(VertexId n, double edge_prob, std::uint64_t seed)
{
    check_arguments(n, edge_prob);
    std::mt19937_64 rng(seed);
    return draw(n, edge_prob, rng);
}

Graph random_connected(VertexId n, double edge_prob, std::uint64_t seed)
{
    check_arguments(n, edge_prob);
    std::mt19937_64 rng(seed);
    for (std::uint64_t attempt = 0; attempt <= kMaxRejections; ++attempt) {
        auto g = draw(n, edge_prob, rng);
        if (is_connected(g))
            return g;
    }
    throw SamplingError("no connected sample after " + std::to_string(kMaxRejections) + " rejections (n = " + std::to_string(n)
                        + ")");
}

} // namespace movdom
