// Deterministic JSON reports: scheme analysis, reference-list comparison,
// and MPC transcripts. Key order is fixed and all families arrive sorted, so
// identical inputs serialize byte-identically.
#pragma once

#include <string>
#include <vector>

#include "agss/config.hpp"
#include "agss/mpc.hpp"
#include "agss/reference.hpp"
#include "json.hpp"

namespace agss::report {

using json = nlohmann::ordered_json;

json analysis_report(const config::SchemeConfig& cfg,
                     const config::BuiltScheme& built);

json discrepancy_report(const std::vector<reference::Comparison>& comparisons);

json transcript_line(const mpc::Message& m);
// one JSON object per line, in log order
std::string transcript_jsonl(const std::vector<mpc::Message>& log);

// stable indented text rendering of a report tree
std::string render_text(const json& j);

}  // namespace agss::report
