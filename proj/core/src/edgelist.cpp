#include "movdom/error.hpp"
#include "movdom/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace movdom {

namespace {

std::string_view strip_comment(std::string_view line)
{
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
        line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
        line.remove_prefix(1);
    return line;
}

// Exactly two non-negative integers separated by whitespace.
bool read_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b)
{
    const char* p = line.data();
    const char* end = p + line.size();
    auto skip = [&] {
        while (p != end && std::isspace(static_cast<unsigned char>(*p)))
            ++p;
    };
    auto r = std::from_chars(p, end, a);
    if (r.ec != std::errc{} || r.ptr == end || !std::isspace(static_cast<unsigned char>(*r.ptr)))
        return false;
    p = r.ptr;
    skip();
    r = std::from_chars(p, end, b);
    if (r.ec != std::errc{})
        return false;
    p = r.ptr;
    skip();
    return p == end;
}

} // namespace

Graph parse_edgelist(std::string_view text, std::vector<std::string>* warnings)
{
    std::vector<std::string_view> lines;
    std::vector<std::size_t> line_numbers;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        auto line = strip_comment(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty()) {
            lines.push_back(line);
            line_numbers.push_back(number);
        }
    }
    if (lines.empty())
        throw ParseError("edge list: missing \"n m\" header");

    std::uint64_t n = 0;
    std::uint64_t m = 0;
    if (!read_pair(lines[0], n, m))
        throw ParseError("edge list: line " + std::to_string(line_numbers[0]) + ": expected \"n m\" header");
    if (n > kMaxOrder)
        throw LimitError("edge list: order " + std::to_string(n) + " exceeds the supported maximum of 64");
    if (lines.size() - 1 != m)
        throw ParseError("edge list: header declares " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1)
                         + " edge lines follow");

    std::vector<Edge> edges;
    std::set<Edge> distinct;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        const auto where = "edge list: line " + std::to_string(line_numbers[i]) + ": ";
        if (!read_pair(lines[i], u, v))
            throw ParseError(where + "expected \"u v\"");
        if (u >= n || v >= n)
            throw ParseError(where + "endpoint out of range for n = " + std::to_string(n));
        if (u == v)
            throw ParseError(where + "loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        distinct.emplace(std::min(u, v), std::max(u, v));
    }
    if (distinct.size() != m && warnings != nullptr)
        warnings->push_back("edge list: " + std::to_string(m) + " edges declared, " + std::to_string(distinct.size())
                            + " distinct after collapsing duplicates");
    return make_graph(static_cast<VertexId>(n), edges);
}

std::string write_edgelist(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

} // namespace movdom
