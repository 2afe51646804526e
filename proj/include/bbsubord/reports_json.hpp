#ifndef BBSUBORD_REPORTS_JSON_HPP
#define BBSUBORD_REPORTS_JSON_HPP

#include "bbsubord/certify.hpp"
#include "bbsubord/subordination.hpp"
#include "bbsubord/theorems.hpp"

#include <json.hpp>

namespace bbsubord {

using json = nlohmann::json;

json to_json(const Margin& m);
json to_json(const HypothesisResult& r);
json to_json(const SubordReport& r);
json to_json(const GapReport& r);
json to_json(const EndpointAudit& a);
json to_json(const Specialization& s);
json to_json(const std::vector<Interval>& intervals);
json to_json(const BBParams& p);

HypothesisResult hypothesis_from_json(const json& j);
SubordReport subord_from_json(const json& j);
GapReport gap_report_from_json(const json& j);
std::vector<Interval> intervals_from_json(const json& j);

/// Checks required keys/types for the named schema ("hypothesis", "subord",
/// "gap_report", "intervals", "specialization", "endpoint_audit").
/// Throws parameter_error on the first violation.
void validate_report(const json& j, const std::string& schema);

} // namespace bbsubord

#endif
