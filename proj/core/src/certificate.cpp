#include "movdom/certificate.hpp"

#include "json_codec.hpp"
#include "movdom/error.hpp"

#include <nlohmann/json.hpp>

#include <array>

namespace movdom {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 4> kKindNames = {"gamma", "gamma_t", "gamma_m2", "gamma_mt2"};

json move_to_json(const MoveWitness& m)
{
    json j;
    j["x"] = m.x;
    j["y"] = m.y;
    j["action"] = m.action == MoveAction::remove ? "remove" : "replace";
    if (m.u)
        j["u"] = *m.u;
    if (m.v)
        j["v"] = *m.v;
    return j;
}

template <typename T>
T require(const json& j, const char* key)
{
    if (!j.contains(key))
        throw ParseError(std::string("certificate: missing key \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate: bad value for \"") + key + "\": " + e.what());
    }
}

} // namespace

std::string_view to_string(InvariantKind k)
{
    return kKindNames[static_cast<std::size_t>(k)];
}

std::optional<InvariantKind> parse_kind(std::string_view name)
{
    for (std::size_t i = 0; i < kKindNames.size(); ++i)
        if (kKindNames[i] == name)
            return static_cast<InvariantKind>(i);
    return std::nullopt;
}

json detail::certificate_to_json(const Certificate& c)
{
    json j;
    j["kind"] = std::string(to_string(c.kind));
    j["graph6"] = c.graph6;
    j["value"] = c.value ? json(*c.value) : json(nullptr);
    j["nonexistent"] = c.nonexistent;
    j["witness"] = c.witness;
    j["moves"] = json::array();
    for (const auto& m : c.moves)
        j["moves"].push_back(move_to_json(m));
    return j;
}

std::string emit_certificate(const Certificate& c, bool pretty)
{
    return detail::certificate_to_json(c).dump(pretty ? 2 : -1);
}

Certificate parse_certificate(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
    return detail::certificate_from_json(j);
}

Certificate detail::certificate_from_json(const json& j)
{
    if (!j.is_object())
        throw ParseError("certificate: document is not an object");

    Certificate c;
    auto kind = parse_kind(require<std::string>(j, "kind"));
    if (!kind)
        throw ParseError("certificate: unknown kind");
    c.kind = *kind;
    c.graph6 = require<std::string>(j, "graph6");
    if (!j.contains("value"))
        throw ParseError("certificate: missing key \"value\"");
    if (!j.at("value").is_null())
        c.value = require<VertexId>(j, "value");
    c.nonexistent = require<bool>(j, "nonexistent");
    c.witness = require<std::vector<VertexId>>(j, "witness");
    if (!j.contains("moves") || !j.at("moves").is_array())
        throw ParseError("certificate: \"moves\" must be an array");
    for (const auto& jm : j.at("moves")) {
        MoveWitness m;
        m.x = require<VertexId>(jm, "x");
        m.y = require<VertexId>(jm, "y");
        const auto action = require<std::string>(jm, "action");
        if (action == "remove")
            m.action = MoveAction::remove;
        else if (action == "replace")
            m.action = MoveAction::replace;
        else
            throw ParseError("certificate: unknown move action \"" + action + "\"");
        if (jm.contains("u"))
            m.u = require<VertexId>(jm, "u");
        if (jm.contains("v"))
            m.v = require<VertexId>(jm, "v");
        c.moves.push_back(m);
    }
    if (c.nonexistent == c.value.has_value())
        throw ParseError("certificate: \"value\" must be null exactly when \"nonexistent\" is true");
    return c;
}

} // namespace movdom
