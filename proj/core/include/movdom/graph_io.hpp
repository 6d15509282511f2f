#pragma once

#include "movdom/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace movdom {

/// Largest order graph6 short form can express.
inline constexpr VertexId kMaxGraph6Order = 62;

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are ignored. Nonzero padding bits are accepted and reported
/// through `warnings` when given.
///
/// Throws ParseError on a byte outside 63..126, a short or overlong bit
/// stream, or the long form (n > 62).
Graph parse_graph6(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Canonical short-form encoding with zero padding. Throws LimitError for p > 62.
std::string write_graph6(const Graph& g);

/// Reads "n m" followed by m lines "u v" (0-based). '#' starts a comment and
/// blank lines are ignored. A header count that disagrees with the number of
/// distinct edges produces a warning. Throws ParseError on malformed lines,
/// out-of-range endpoints or loops.
Graph parse_edgelist(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string write_edgelist(const Graph& g);

} // namespace movdom
