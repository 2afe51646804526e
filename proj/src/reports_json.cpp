#include "bbsubord/reports_json.hpp"
#include "bbsubord/errors.hpp"

namespace bbsubord {

json to_json(const Margin& m)
{
    return json{{"id", m.id}, {"value", m.value}, {"strict", m.strict}, {"ok", m.ok()}};
}

json to_json(const HypothesisResult& r)
{
    json margins = json::array();
    for (const Margin& m : r.margins)
        margins.push_back(to_json(m));
    return json{{"theorem", r.theorem}, {"satisfied", r.satisfied}, {"margins", margins}};
}

json to_json(const SubordReport& r)
{
    return json{{"min_gap", r.min_gap},
                {"argmin", json{{"r", r.argmin_r}, {"theta", r.argmin_theta}}},
                {"radii", r.radii},
                {"samples_per_circle", r.samples_per_circle},
                {"verdict", verdict_name(r.verdict)},
                {"failures", r.failures},
                {"total_samples", r.total_samples},
                {"tol", r.tol}};
}

json to_json(const BBParams& p)
{
    return json{{"A", p.A}, {"B", p.B}, {"beta", p.beta}, {"gamma", p.gamma}};
}

json to_json(const GapReport& r)
{
    json argmin{{"t", r.argmin_t}, {"k", r.argmin_k}};
    if (r.has_m)
        argmin["m"] = r.argmin_m;
    json poles = json::array();
    for (const PoleHit& h : r.pole_hits)
        poles.push_back(json{{"t", h.t}, {"k", h.k}});
    return json{{"theorem", r.theorem},
                {"params", to_json(r.params)},
                {"min_gap", r.min_gap},
                {"argmin", argmin},
                {"grid", json{{"t_points", r.grid.t_points},
                              {"k_max", r.grid.k_max},
                              {"k_points", r.grid.k_points},
                              {"m_points", r.grid.m_points},
                              {"refine_rounds", r.grid.refine_rounds}}},
                {"endpoints", json{{"h0_k1", r.h0_k1},
                                   {"hpi_k1", r.hpi_k1},
                                   {"h0_kmax", r.h0_kmax},
                                   {"hpi_kmax", r.hpi_kmax}}},
                {"k_tail_min", r.k_tail_min},
                {"pole_failures", r.pole_failures},
                {"pole_hits", poles}};
}

json to_json(const EndpointAudit& a)
{
    json j{{"holds", a.holds},
           {"worst_deficit", a.worst_deficit},
           {"at", json{{"t", a.at_t}, {"k", a.at_k}}}};
    if (a.has_m)
        j["at"]["m"] = a.at_m;
    return j;
}

json to_json(const Specialization& s)
{
    json extra = json::array();
    for (const Margin& m : s.extra)
        extra.push_back(to_json(m));
    json j{{"corollary", s.corollary},
           {"parent", s.parent},
           {"params", to_json(s.params)},
           {"displayed_margins", extra},
           {"satisfied", s.satisfied}};
    if (s.parent_result.has_value())
        j["parent_result"] = to_json(*s.parent_result);
    if (!s.note.empty())
        j["note"] = s.note;
    return j;
}

json to_json(const std::vector<Interval>& intervals)
{
    json j = json::array();
    for (const Interval& iv : intervals)
        j.push_back(json{{"lo", iv.lo}, {"hi", iv.hi}});
    return j;
}

HypothesisResult hypothesis_from_json(const json& j)
{
    HypothesisResult r;
    r.theorem = j.at("theorem").get<std::string>();
    r.satisfied = j.at("satisfied").get<bool>();
    for (const json& m : j.at("margins"))
        r.margins.push_back(
            {m.at("id").get<std::string>(), m.at("value").get<double>(), m.at("strict").get<bool>()});
    return r;
}

SubordReport subord_from_json(const json& j)
{
    SubordReport r;
    r.min_gap = j.at("min_gap").get<double>();
    r.argmin_r = j.at("argmin").at("r").get<double>();
    r.argmin_theta = j.at("argmin").at("theta").get<double>();
    r.radii = j.at("radii").get<std::vector<double>>();
    r.samples_per_circle = j.at("samples_per_circle").get<int>();
    const std::string v = j.at("verdict").get<std::string>();
    r.verdict = v == "contained"   ? SubordReport::Verdict::Contained
                : v == "violated" ? SubordReport::Verdict::Violated
                                  : SubordReport::Verdict::Inconclusive;
    r.failures = j.at("failures").get<std::size_t>();
    r.total_samples = j.at("total_samples").get<std::size_t>();
    r.tol = j.at("tol").get<double>();
    return r;
}

GapReport gap_report_from_json(const json& j)
{
    GapReport r;
    r.theorem = j.at("theorem").get<std::string>();
    const json& p = j.at("params");
    r.params = {p.at("A").get<double>(), p.at("B").get<double>(), p.at("beta").get<double>(),
                p.at("gamma").get<double>()};
    r.min_gap = j.at("min_gap").get<double>();
    r.argmin_t = j.at("argmin").at("t").get<double>();
    r.argmin_k = j.at("argmin").at("k").get<double>();
    r.has_m = j.at("argmin").contains("m");
    if (r.has_m)
        r.argmin_m = j.at("argmin").at("m").get<double>();
    const json& g = j.at("grid");
    r.grid = {g.at("t_points").get<int>(), g.at("k_max").get<double>(),
              g.at("k_points").get<int>(), g.at("m_points").get<int>(),
              g.at("refine_rounds").get<int>()};
    const json& e = j.at("endpoints");
    r.h0_k1 = e.at("h0_k1").get<double>();
    r.hpi_k1 = e.at("hpi_k1").get<double>();
    r.h0_kmax = e.at("h0_kmax").get<double>();
    r.hpi_kmax = e.at("hpi_kmax").get<double>();
    r.k_tail_min = j.at("k_tail_min").get<double>();
    r.pole_failures = j.at("pole_failures").get<std::size_t>();
    return r;
}

std::vector<Interval> intervals_from_json(const json& j)
{
    std::vector<Interval> out;
    for (const json& iv : j)
        out.push_back({iv.at("lo").get<double>(), iv.at("hi").get<double>()});
    return out;
}

namespace {

void need_key(const json& j, const char* key, const std::string& schema)
{
    if (!j.contains(key))
        throw parameter_error("report does not match schema '" + schema +
                              "': missing key " + key);
}

} // namespace

void validate_report(const json& j, const std::string& schema)
{
    if (schema == "hypothesis") {
        for (const char* k : {"theorem", "satisfied", "margins"})
            need_key(j, k, schema);
        if (!j["margins"].is_array())
            throw parameter_error("hypothesis: margins must be an array");
        for (const json& m : j["margins"])
            for (const char* k : {"id", "value", "strict"})
                need_key(m, k, schema);
    } else if (schema == "subord") {
        for (const char* k : {"min_gap", "argmin", "radii", "samples_per_circle", "verdict",
                              "failures", "total_samples", "tol"})
            need_key(j, k, schema);
        for (const char* k : {"r", "theta"})
            need_key(j["argmin"], k, schema);
    } else if (schema == "gap_report") {
        for (const char* k : {"theorem", "params", "min_gap", "argmin", "grid", "endpoints",
                              "k_tail_min", "pole_failures"})
            need_key(j, k, schema);
    } else if (schema == "intervals") {
        if (!j.is_array())
            throw parameter_error("intervals: expected an array");
        for (const json& iv : j)
            for (const char* k : {"lo", "hi"})
                need_key(iv, k, schema);
    } else if (schema == "specialization") {
        for (const char* k : {"corollary", "parent", "params", "displayed_margins", "satisfied"})
            need_key(j, k, schema);
    } else if (schema == "endpoint_audit") {
        for (const char* k : {"holds", "worst_deficit", "at"})
            need_key(j, k, schema);
    } else {
        throw parameter_error("validate_report: unknown schema " + schema);
    }
}

} // namespace bbsubord
