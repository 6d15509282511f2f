#pragma once

#include "movdom/domination.hpp"
#include "movdom/invariant.hpp"

#include <optional>
#include <string>
#include <vector>

namespace movdom {

/// Self-contained record of a solver answer: the graph (as graph6), the
/// witness set and, for the movable kinds, one move per witness pair.
struct Certificate {
    InvariantKind kind = InvariantKind::gamma;
    std::string graph6;
    std::optional<VertexId> value;
    bool nonexistent = false;
    std::vector<VertexId> witness;
    std::vector<MoveWitness> moves;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Deterministic JSON document (keys sorted, two-space indent when pretty).
std::string emit_certificate(const Certificate& c, bool pretty = true);

/// Inverse of emit_certificate. Throws ParseError on schema violations.
Certificate parse_certificate(const std::string& text);

} // namespace movdom
