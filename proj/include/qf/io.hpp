#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qf/oracle.hpp"
#include "qf/polytope.hpp"
#include "qf/steiner.hpp"
#include "qf/verify.hpp"

namespace qf {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

json rat_to_json(const Rat& r);
/// Accepts a rational literal string or a JSON integer.
Rat rat_from_json(const json& j);

json body_to_json(const Polytope& p);
Polytope body_from_json(const json& j);

/// "preset:<name>:<dim>[:<scale>]" with name in cube, simplex, cross,
/// segment, point.
Polytope preset_body(std::string_view spec);

/// A body spec is a preset reference, inline JSON text, or a path to a
/// body JSON file.
Polytope load_body(std::string_view spec);

json sequence_to_json(const QuermassSeq& seq);
QuermassSeq sequence_from_json(const json& j);
/// Comma-separated rational literals; n < 0 means "length - 1".
QuermassSeq load_sequence(std::string_view text, int n = -1);
std::vector<Rat> parse_rat_list(std::string_view text);

json report_to_json(const InequalityReport& r);
InequalityReport report_from_json(const json& j);
json reports_to_json(const std::vector<InequalityReport>& reports);
std::vector<InequalityReport> reports_from_json(const json& j);

json campaign_to_json(const CampaignSummary& s);
json cross_check_to_json(const CrossCheckReport& r);

/// Writes to a temporary sibling, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

void save_report(const std::vector<InequalityReport>& reports, const std::filesystem::path& path);
std::vector<InequalityReport> load_reports(const std::filesystem::path& path);

}  // namespace qf
