#include "json_codec.hpp"
#include "movdom/error.hpp"
#include "movdom/harness.hpp"

#include <nlohmann/json.hpp>

namespace movdom {

using nlohmann::json;

namespace {

json value_json(const std::optional<VertexId>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::optional<VertexId> value_from(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<VertexId>();
}

} // namespace

std::string emit_report(const TheoremReport& r, bool pretty)
{
    json j;
    j["theorem"] = std::string(to_string(r.theorem));
    j["mode"] = std::string(to_string(r.mode));
    j["allow_equal_replacements"] = r.allow_equal_replacements;
    j["connected_only"] = r.connected_only;
    j["family"] = r.family;
    j["instances_total"] = r.instances_total;
    j["instances_checked"] = r.instances_checked;
    j["instances_skipped"] = r.instances_skipped;
    j["instances_vacuous"] = r.instances_vacuous;
    j["sub_checks"] = r.sub_checks;
    j["proof_witness"] = {{"checked", r.proof_witness_checked}, {"failures", r.proof_witness_failures}};
    j["proof_claim"] = {{"checked", r.proof_claim_checked}, {"failures", r.proof_claim_failures}};

    j["counterexamples"] = json::array();
    for (const auto& c : r.counterexamples) {
        json jc;
        jc["operands"] = c.operands;
        jc["expected"] = value_json(c.expected);
        jc["got"] = value_json(c.got);
        jc["note"] = c.note;
        jc["certificate"] = c.certificate ? detail::certificate_to_json(*c.certificate) : json(nullptr);
        j["counterexamples"].push_back(std::move(jc));
    }

    j["discrepancies"] = json::array();
    for (const auto& d : r.discrepancies) {
        json jd;
        jd["operands"] = d.operands;
        jd["gamma_t_h"] = d.gamma_t_h;
        jd["statement_holds"] = d.statement_holds;
        jd["proof_holds"] = d.proof_holds;
        jd["expected"] = value_json(d.expected);
        jd["got"] = value_json(d.got);
        jd["equality_holds"] = d.equality_holds;
        j["discrepancies"].push_back(std::move(jd));
    }
    j["elapsed"] = std::chrono::duration<double>(r.elapsed).count();
    return j.dump(pretty ? 2 : -1);
}

TheoremReport parse_report(const std::string& text)
{
    TheoremReport r;
    try {
        const auto j = json::parse(text);
        auto theorem = parse_theorem(j.at("theorem").get<std::string>());
        if (!theorem)
            throw ParseError("report: unknown theorem");
        r.theorem = *theorem;
        if (j.contains("mode")) {
            auto mode = parse_mode(j.at("mode").get<std::string>());
            if (!mode)
                throw ParseError("report: unknown mode");
            r.mode = *mode;
        }
        r.allow_equal_replacements = j.value("allow_equal_replacements", false);
        r.connected_only = j.value("connected_only", true);
        r.family = j.value("family", std::string{});
        r.instances_total = j.at("instances_total").get<std::uint64_t>();
        r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
        r.instances_skipped = j.value("instances_skipped", r.instances_total - r.instances_checked);
        r.instances_vacuous = j.value("instances_vacuous", std::uint64_t{0});
        r.sub_checks = j.value("sub_checks", std::uint64_t{0});
        if (j.contains("proof_witness")) {
            r.proof_witness_checked = j.at("proof_witness").at("checked").get<std::uint64_t>();
            r.proof_witness_failures = j.at("proof_witness").at("failures").get<std::uint64_t>();
        }
        if (j.contains("proof_claim")) {
            r.proof_claim_checked = j.at("proof_claim").at("checked").get<std::uint64_t>();
            r.proof_claim_failures = j.at("proof_claim").at("failures").get<std::uint64_t>();
        }
        for (const auto& jc : j.at("counterexamples")) {
            Counterexample c;
            c.operands = jc.at("operands").get<std::vector<std::string>>();
            c.expected = value_from(jc, "expected");
            c.got = value_from(jc, "got");
            c.note = jc.value("note", std::string{});
            if (jc.contains("certificate") && !jc.at("certificate").is_null())
                c.certificate = detail::certificate_from_json(jc.at("certificate"));
            r.counterexamples.push_back(std::move(c));
        }
        if (j.contains("discrepancies"))
            for (const auto& jd : j.at("discrepancies")) {
                Discrepancy d;
                d.operands = jd.at("operands").get<std::vector<std::string>>();
                d.gamma_t_h = jd.at("gamma_t_h").get<VertexId>();
                d.statement_holds = jd.at("statement_holds").get<bool>();
                d.proof_holds = jd.at("proof_holds").get<bool>();
                d.expected = value_from(jd, "expected");
                d.got = value_from(jd, "got");
                d.equality_holds = jd.at("equality_holds").get<bool>();
                r.discrepancies.push_back(std::move(d));
            }
        r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::duration<double>(j.at("elapsed").get<double>()));
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    return r;
}

} // namespace movdom
