#pragma once

#include "movdom/certificate.hpp"

#include <nlohmann/json.hpp>

namespace movdom::detail {

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

} // namespace movdom::detail
