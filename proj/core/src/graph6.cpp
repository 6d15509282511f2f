#include "movdom/error.hpp"
#include "movdom/graph_io.hpp"

#include <string>

namespace movdom {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

} // namespace

Graph parse_graph6(std::string_view text, std::vector<std::string>* warnings)
{
    text = trim(text);
    if (text.starts_with(kHeader))
        text.remove_prefix(kHeader.size());
    if (text.empty())
        throw ParseError("graph6: empty input");

    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) + " outside 63..126");
    }

    const auto first = static_cast<unsigned char>(text[0]);
    if (first == 126)
        throw ParseError("graph6: long form (n > 62) is not supported");
    const VertexId n = first - 63;

    const std::uint64_t bits = pair_count(n);
    const std::uint64_t bytes_needed = (bits + 5) / 6;
    const auto body = text.substr(1);
    if (body.size() < bytes_needed)
        throw ParseError("graph6: bit stream too short for n = " + std::to_string(n) + " (need " + std::to_string(bytes_needed)
                         + " bytes, got " + std::to_string(body.size()) + ")");
    if (body.size() > bytes_needed)
        throw ParseError("graph6: " + std::to_string(body.size() - bytes_needed) + " trailing bytes after the adjacency data");

    std::vector<std::uint64_t> rows(n, 0);
    std::uint64_t k = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i, ++k) {
            const unsigned chunk = static_cast<unsigned char>(body[k / 6]) - 63U;
            if ((chunk >> (5 - k % 6)) & 1U) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }

    if (bits % 6 != 0) {
        const unsigned last = static_cast<unsigned char>(body.back()) - 63U;
        const unsigned pad_mask = (1U << (6 - bits % 6)) - 1;
        if ((last & pad_mask) != 0 && warnings != nullptr)
            warnings->push_back("graph6: nonzero padding bits ignored");
    }
    return from_rows(n, std::move(rows));
}

std::string write_graph6(const Graph& g)
{
    const VertexId n = g.order();
    if (n > kMaxGraph6Order)
        throw LimitError("graph6: order " + std::to_string(n) + " needs the long form, which is not supported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    unsigned chunk = 0;
    unsigned filled = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled != 0)
        out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

} // namespace movdom
