#include "qf/io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace qf {

namespace {

void check_version(const json& j) {
  if (j.contains("format_version") && j.at("format_version") != kFormatVersion)
    throw Error(Errc::ParseError, "unsupported format_version " + j.at("format_version").dump());
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename Fn>
auto parse_guard(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
}

}  // namespace

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw Error(Errc::ParseError, "expected a rational literal, got " + j.dump());
}

json body_to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& c : v) row.push_back(rat_to_json(c));
    verts.push_back(std::move(row));
  }
  return {{"format_version", kFormatVersion}, {"dim", p.ambient_dim()}, {"vertices", std::move(verts)}};
}

Polytope body_from_json(const json& j) {
  return parse_guard([&] {
    if (!j.is_object()) throw Error(Errc::ParseError, "body must be a JSON object");
    check_version(j);
    const int dim = j.at("dim").get<int>();
    if (dim != 2 && dim != 3) throw Error(Errc::ParseError, "body dim must be 2 or 3");
    const json& verts = j.at("vertices");
    if (!verts.is_array()) throw Error(Errc::ParseError, "vertices must be an array");
    if (verts.empty()) throw Error(Errc::EmptyVertexList, "body has no vertices");
    std::vector<Point> pts;
    for (const auto& row : verts) {
      if (!row.is_array() || static_cast<int>(row.size()) != dim)
        throw Error(Errc::ParseError, "vertex " + row.dump() + " does not have " + std::to_string(dim) + " coordinates");
      Point p;
      for (const auto& c : row) p.push_back(rat_from_json(c));
      pts.push_back(std::move(p));
    }
    return convex_hull(pts, dim);
  });
}

Polytope preset_body(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() < 3 || parts.size() > 4 || parts[0] != "preset")
    throw Error(Errc::ParseError, "preset spec must look like preset:<name>:<dim>[:<scale>]");
  const std::string& name = parts[1];
  int dim = 0;
  if (parts[2] == "2") dim = 2;
  else if (parts[2] == "3") dim = 3;
  else throw Error(Errc::ParseError, "preset dimension must be 2 or 3, got '" + parts[2] + "'");
  const std::size_t d = static_cast<std::size_t>(dim);
  auto unit = [&](std::size_t axis, long sign) {
    Point p(d, Rat(0));
    p[axis] = sign;
    return p;
  };
  std::vector<Point> pts;
  if (name == "cube") {
    for (unsigned mask = 0; mask < (1U << d); ++mask) {
      Point p(d);
      for (std::size_t c = 0; c < d; ++c) p[c] = (mask >> c) & 1U ? 1 : 0;
      pts.push_back(std::move(p));
    }
  } else if (name == "simplex") {
    pts.emplace_back(d, Rat(0));
    for (std::size_t c = 0; c < d; ++c) pts.push_back(unit(c, 1));
  } else if (name == "cross") {
    for (std::size_t c = 0; c < d; ++c) {
      pts.push_back(unit(c, 1));
      pts.push_back(unit(c, -1));
    }
  } else if (name == "segment") {
    pts.emplace_back(d, Rat(0));
    pts.push_back(unit(0, 1));
  } else if (name == "point") {
    pts.emplace_back(d, Rat(0));
  } else {
    throw Error(Errc::UnknownPreset, "unknown preset '" + name + "'");
  }
  Polytope body = convex_hull(pts, dim);
  if (parts.size() == 4) body = scale(body, Rat::parse(parts[3]));
  return body;
}

Polytope load_body(std::string_view spec) {
  if (spec.starts_with("preset:")) return preset_body(spec);
  std::string text;
  if (!spec.empty() && spec.front() == '{') {
    text = std::string(spec);
  } else {
    text = read_file(std::filesystem::path(std::string(spec)));
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, std::string("body JSON: ") + ex.what());
  }
  return body_from_json(j);
}

json sequence_to_json(const QuermassSeq& seq) {
  json w = json::array();
  for (const auto& v : seq.values) w.push_back(rat_to_json(v));
  return {{"format_version", kFormatVersion}, {"n", seq.n}, {"W", std::move(w)}};
}

QuermassSeq sequence_from_json(const json& j) {
  return parse_guard([&] {
    check_version(j);
    std::vector<Rat> values;
    for (const auto& v : j.at("W")) values.push_back(rat_from_json(v));
    const int n = j.at("n").get<int>();
    if (n < 0 || static_cast<std::size_t>(n) + 1 != values.size())
      throw Error(Errc::ParseError, "sequence length does not match n");
    return QuermassSeq(n, std::move(values));
  });
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  std::vector<Rat> out;
  for (const auto& item : split(text, ',')) out.push_back(Rat::parse(item));
  return out;
}

QuermassSeq load_sequence(std::string_view text, int n) {
  std::vector<Rat> values = parse_rat_list(text);
  const int len_n = static_cast<int>(values.size()) - 1;
  if (n >= 0 && n != len_n)
    throw Error(Errc::ParseError, "expected " + std::to_string(n + 1) + " values, got " + std::to_string(values.size()));
  return QuermassSeq(len_n, std::move(values));
}

json report_to_json(const InequalityReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json values = json::object();
  for (const auto& [k, v] : r.values) values[k] = rat_to_json(v);
  json out = {{"check_id", std::string(check_name(r.check))},
              {"params", std::move(params)},
              {"slack", rat_to_json(r.slack)},
              {"status", std::string(status_name(r.status))},
              {"expected_equality", r.expected_equality ? json(*r.expected_equality) : json(nullptr)},
              {"dim_M", r.dim_m ? json(*r.dim_m) : json(nullptr)},
              {"values", std::move(values)}};
  if (r.check == CheckId::DiffIdentity) out["identity_ok"] = r.identity_ok;
  return out;
}

InequalityReport report_from_json(const json& j) {
  return parse_guard([&] {
    InequalityReport r;
    const auto id = parse_check(j.at("check_id").get<std::string>());
    if (!id) throw Error(Errc::ParseError, "unknown check_id " + j.at("check_id").dump());
    r.check = *id;
    // params and values come back in key order, matching report_to_json output
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<int>());
    r.slack = rat_from_json(j.at("slack"));
    const auto st = parse_status(j.at("status").get<std::string>());
    if (!st) throw Error(Errc::ParseError, "unknown status " + j.at("status").dump());
    r.status = *st;
    if (!j.at("expected_equality").is_null()) r.expected_equality = j.at("expected_equality").get<bool>();
    if (!j.at("dim_M").is_null()) r.dim_m = j.at("dim_M").get<int>();
    if (j.contains("values"))
      for (const auto& [k, v] : j.at("values").items()) r.values.emplace_back(k, rat_from_json(v));
    if (j.contains("identity_ok")) r.identity_ok = j.at("identity_ok").get<bool>();
    return r;
  });
}

json reports_to_json(const std::vector<InequalityReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return {{"format_version", kFormatVersion}, {"reports", std::move(arr)}};
}

std::vector<InequalityReport> reports_from_json(const json& j) {
  return parse_guard([&] {
    check_version(j);
    std::vector<InequalityReport> out;
    for (const auto& r : j.at("reports")) out.push_back(report_from_json(r));
    return out;
  });
}

json campaign_to_json(const CampaignSummary& s) {
  const auto& c = s.config;
  json checks = json::array();
  for (CheckId id : c.checks) checks.push_back(std::string(check_name(id)));
  json counts = json::object();
  for (const auto& [id, n] : s.counts)
    counts[std::string(check_name(id))] = {
        {"holds", n.holds}, {"equality", n.equality}, {"violated", n.violated}, {"mismatches", n.mismatches}};
  json findings = json::array();
  for (const auto& f : s.findings) {
    json item = {{"trial", f.trial}, {"kind", f.kind}, {"report", report_to_json(f.report)},
                 {"K", body_to_json(f.k)}, {"E", body_to_json(f.e)}};
    if (f.m) item["M"] = body_to_json(*f.m);
    findings.push_back(std::move(item));
  }
  return {{"format_version", kFormatVersion},
          {"config",
           {{"ambient_dim", c.ambient_dim},
            {"trials", c.trials},
            {"seed", c.seed},
            {"vertex_count", {c.min_vertices, c.max_vertices}},
            {"coord_bound", c.coord_bound},
            {"mode", c.mode == CampaignMode::SummandPairs ? "summand-pairs" : "arbitrary-pairs"},
            {"checks", std::move(checks)}}},
          {"counts", std::move(counts)},
          {"violations", s.violations},
          {"mismatches", s.mismatches},
          {"convexity_violations", s.convexity_violations},
          {"non_summand_satisfying", s.non_summand_satisfying},
          {"findings", std::move(findings)}};
}

json cross_check_to_json(const CrossCheckReport& r) {
  json pts = json::array();
  for (const auto& p : r.points)
    pts.push_back({{"lambda", rat_to_json(p.lambda)},
                   {"exact", rat_to_json(p.exact)},
                   {"estimate", p.estimate.mean},
                   {"std_error", p.estimate.std_error},
                   {"samples", p.estimate.samples},
                   {"z", p.z},
                   {"pass", p.pass}});
  return {{"format_version", kFormatVersion}, {"pass", r.pass}, {"sigma", kCrossCheckSigma}, {"points", std::move(pts)}};
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw Error(Errc::IoError, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(Errc::IoError, "cannot move report into " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_report(const std::vector<InequalityReport>& reports, const std::filesystem::path& path) {
  write_file_atomic(path, reports_to_json(reports).dump(2) + "\n");
}

std::vector<InequalityReport> load_reports(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
  return reports_from_json(j);
}

}  // namespace qf
