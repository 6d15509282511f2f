#pragma once

#include <optional>
#include <string_view>

namespace movdom {

/// gamma: domination number; gamma_t: total domination number;
/// gamma_m2 / gamma_mt2: 2-movable (total) domination number.
enum class InvariantKind { gamma, gamma_t, gamma_m2, gamma_mt2 };

inline constexpr InvariantKind kAllKinds[] = {InvariantKind::gamma, InvariantKind::gamma_t, InvariantKind::gamma_m2,
                                              InvariantKind::gamma_mt2};

constexpr bool is_total(InvariantKind k) { return k == InvariantKind::gamma_t || k == InvariantKind::gamma_mt2; }
constexpr bool is_movable(InvariantKind k) { return k == InvariantKind::gamma_m2 || k == InvariantKind::gamma_mt2; }

std::string_view to_string(InvariantKind k);
std::optional<InvariantKind> parse_kind(std::string_view name);

} // namespace movdom
