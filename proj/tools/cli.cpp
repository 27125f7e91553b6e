#include "cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qf/io.hpp"
#include "qf/oracle.hpp"
#include "qf/seqprops.hpp"
#include "qf/verify.hpp"

namespace qf::cli {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string params_text(const InequalityReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return s.empty() ? "-" : s;
}

void print_reports(std::ostream& out, const std::vector<InequalityReport>& reports) {
  out << std::left << std::setw(16) << "check" << std::setw(16) << "params" << std::setw(10) << "status"
      << std::setw(10) << "expected" << "slack\n";
  for (const auto& r : reports) {
    std::string expected = r.expected_equality ? (*r.expected_equality ? "eq" : "strict") : "-";
    if (r.mismatch()) expected += "!";
    out << std::setw(16) << check_name(r.check) << std::setw(16) << params_text(r) << std::setw(10)
        << status_name(r.status) << std::setw(10) << expected << r.slack;
    if (!r.identity_ok) out << "  (identity FAILED)";
    out << "\n";
  }
}

struct Counts {
  long violated = 0;
  long mismatches = 0;
  long identity = 0;
};

Counts tally(const std::vector<InequalityReport>& reports) {
  Counts c;
  for (const auto& r : reports) {
    if (r.status == Status::Violated) ++c.violated;
    if (r.mismatch()) ++c.mismatches;
    if (!r.identity_ok) ++c.identity;
  }
  return c;
}

int cmd_quermass(const std::string& kspec, const std::string& espec, bool as_json, bool as_csv, std::ostream& out) {
  const Polytope k = load_body(kspec);
  const Polytope e = load_body(espec);
  const QuermassSeq w = quermassintegrals(k, e);
  const Rat s = minkowski_content(w);
  if (as_json) {
    json j = sequence_to_json(w);
    j["S"] = rat_to_json(s);
    out << j.dump(2) << "\n";
  } else if (as_csv) {
    out << "index,W\n";
    for (int i = 0; i <= w.n; ++i) out << i << "," << quoted(w[i].str()) << "\n";
    out << "S," << quoted(s.str()) << "\n";
  } else {
    for (int i = 0; i <= w.n; ++i) out << "W_" << i << " = " << w[i] << "\n";
    out << "S = " << s << "\n";
  }
  return kSuccess;
}

int cmd_verify(const std::string& mspec, const std::string& kspec, const std::string& espec,
               const std::string& checks_text, bool as_json, const std::string& out_path, std::ostream& out) {
  const std::vector<CheckId> checks = parse_check_list(checks_text);
  const Polytope e = load_body(espec);
  std::vector<InequalityReport> reports;
  std::string note;
  if (!mspec.empty()) {
    const SummandCase c = make_summand_case(load_body(mspec), e);
    reports = verify_summand_case(c, checks);
  } else {
    const Polytope k = load_body(kspec);
    const QuermassSeq kseq = quermassintegrals(k, e);
    if (is_summand(e, k)) {
      const Polytope m = *minkowski_difference(k, e);
      SuiteInput in{kseq, m.affine_dim(), is_homothetic(k, e), &k, &e};
      reports = run_suite(in, checks);
      note = "E is a summand of K (dim M = " + std::to_string(m.affine_dim()) + ")";
    } else {
      SuiteInput in{kseq, std::nullopt, is_homothetic(k, e), &k, &e};
      reports = run_suite(in, checks);
      note = "E is not a summand of K; equality predictions unavailable";
    }
  }
  if (!out_path.empty()) save_report(reports, out_path);
  const Counts c = tally(reports);
  if (as_json) {
    out << reports_to_json(reports).dump(2) << "\n";
  } else {
    if (!note.empty()) out << note << "\n";
    print_reports(out, reports);
    out << reports.size() << " reports, " << c.violated << " violated, " << c.mismatches << " equality mismatches\n";
  }
  return (c.violated + c.mismatches + c.identity) > 0 ? kViolation : kSuccess;
}

void print_verdict(std::ostream& out, const std::string& name, const SeqVerdict& v) {
  out << name << ": " << (v.holds ? "holds" : "fails");
  for (const auto& w : v.witnesses) out << " [i=" << w.indices.front() << " " << w.slack << "]";
  out << "\n";
}

json verdict_json(const SeqVerdict& v) {
  json w = json::array();
  for (const auto& x : v.witnesses) w.push_back({{"indices", x.indices}, {"slack", rat_to_json(x.slack)}});
  return {{"holds", v.holds}, {"witnesses", std::move(w)}, {"equality_indices", v.equality_indices}};
}

int cmd_seq(const std::string& values, int n, const std::string& checks_text, const std::string& as, bool as_json,
            std::ostream& out) {
  const QuermassSeq input = load_sequence(values, n);
  if (as != "k" && as != "m") throw Error(Errc::ParseError, "--as must be k or m");

  bool want_concave = false, want_convex = false, want_logconcave = false;
  std::vector<CheckId> checks;
  if (checks_text == "all") {
    want_concave = want_convex = want_logconcave = true;
    for (CheckId id : kAllChecks)
      if (id != CheckId::Bonnesen2d) checks.push_back(id);
  } else {
    std::string rest;
    std::stringstream ss(checks_text);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item == "concave") want_concave = true;
      else if (item == "convex") want_convex = true;
      else if (item == "logconcave") want_logconcave = true;
      else rest += (rest.empty() ? "" : ",") + item;
    }
    if (!rest.empty()) checks = parse_check_list(rest);
  }

  QuermassSeq kseq = input;
  std::optional<int> dim_m;
  if (as == "m") {
    dim_m = dim_eff(input);
    kseq = parallel_body_seq(input, Rat(1));
  }

  json j = {{"format_version", kFormatVersion}, {"input", sequence_to_json(input)}, {"as", as}};
  if (as == "m") {
    j["kseq"] = sequence_to_json(kseq);
    j["dim_M"] = *dim_m;
  }
  std::ostringstream text;
  if (as == "m") text << "K-sequence: " << values << " -> dim M = " << *dim_m << "\n";
  // sequence predicates apply to the sequence the checks run on
  const std::span<const Rat> seq = kseq.values;
  if (want_concave) {
    const SeqVerdict v = is_concave(seq);
    print_verdict(text, "concave", v);
    j["concave"] = verdict_json(v);
  }
  if (want_convex) {
    const SeqVerdict v = is_convex(seq);
    print_verdict(text, "convex", v);
    j["convex"] = verdict_json(v);
  }
  if (want_logconcave) {
    try {
      const SeqVerdict v = is_log_concave(seq);
      print_verdict(text, "logconcave", v);
      j["logconcave"] = verdict_json(v);
    } catch (const Error& ex) {
      if (ex.code() != Errc::NonPositiveEntry) throw;
      text << "logconcave: undefined (non-positive entry)\n";
      j["logconcave"] = nullptr;
    }
  }
  if (!checks.empty()) {
    SuiteInput in{kseq, dim_m, std::nullopt, nullptr, nullptr};
    const auto reports = run_suite(in, checks);
    print_reports(text, reports);
    j["reports"] = reports_to_json(reports)["reports"];
  }
  if (as_json) out << j.dump(2) << "\n";
  else out << text.str();
  return kSuccess;
}

int cmd_campaign(CampaignConfig cfg, const std::string& mode, const std::string& checks_text,
                 const std::string& out_path, bool as_json, std::ostream& out) {
  if (mode == "summand" || mode == "summand-pairs") cfg.mode = CampaignMode::SummandPairs;
  else if (mode == "arbitrary" || mode == "arbitrary-pairs") cfg.mode = CampaignMode::ArbitraryPairs;
  else throw Error(Errc::ParseError, "--mode must be summand or arbitrary");
  cfg.checks = parse_check_list(checks_text);
  const CampaignSummary s = run_campaign(cfg);
  const json j = campaign_to_json(s);
  if (!out_path.empty()) write_file_atomic(out_path, j.dump(2) + "\n");
  if (as_json) {
    out << j.dump(2) << "\n";
  } else {
    out << "trials " << cfg.trials << ", mode " << mode << ", seed " << cfg.seed << "\n";
    for (const auto& [id, c] : s.counts)
      out << "  " << std::left << std::setw(16) << check_name(id) << " holds " << c.holds << " equality "
          << c.equality << " violated " << c.violated << " mismatches " << c.mismatches << "\n";
    if (cfg.mode == CampaignMode::ArbitraryPairs)
      out << "convexity violations: " << s.convexity_violations
          << ", non-summand pairs satisfying all checks: " << s.non_summand_satisfying << "\n";
  }
  const bool failed = cfg.mode == CampaignMode::SummandPairs && (s.violations > 0 || s.mismatches > 0);
  return failed ? kViolation : kSuccess;
}

int cmd_oracle(const std::string& kspec, const std::string& espec, std::uint64_t samples, std::uint64_t seed,
               bool selftest, bool as_json, std::ostream& out) {
  const Polytope k = load_body(kspec);
  const Polytope e = load_body(espec);
  QuermassSeq kseq = quermassintegrals(k, e);
  if (selftest) kseq = corrupt_first_quermassintegral(kseq);
  const CrossCheckReport r = cross_check(k, e, kseq, samples, seed);
  if (as_json) {
    json j = cross_check_to_json(r);
    j["selftest"] = selftest;
    out << j.dump(2) << "\n";
  } else {
    if (selftest) out << "self-test: W_1 inflated by 10%, failure expected\n";
    for (const auto& p : r.points)
      out << "lambda=" << p.lambda << " exact=" << p.exact << " (" << p.exact.to_double() << ") estimate="
          << p.estimate.mean << " +- " << p.estimate.std_error << " z=" << p.z << (p.pass ? " pass" : " FAIL") << "\n";
    out << (r.pass ? "cross-check passed" : "cross-check failed") << "\n";
  }
  return r.pass ? kSuccess : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact relative quermassintegrals and reverse isoperimetric checks", "quermass"};
  app.require_subcommand(1);

  std::string kspec, espec, mspec, checks = "all", out_path, values, as = "k", mode = "summand", vertex_range = "3,7";
  bool as_json = false, as_csv = false, selftest = false;
  int n = -1;
  CampaignConfig cfg;
  std::uint64_t samples = 1000000, seed = 0;

  auto* quermass = app.add_subcommand("quermass", "Relative quermassintegrals W_0..W_n of K with respect to E");
  quermass->add_option("--k", kspec, "Body K")->required();
  quermass->add_option("--e", espec, "Body E")->required();
  auto* qjson = quermass->add_flag("--json", as_json, "JSON output");
  quermass->add_flag("--csv", as_csv, "CSV output")->excludes(qjson);

  auto* verify = app.add_subcommand("verify", "Build K = M + E and run the inequality checks");
  auto* vm = verify->add_option("--m", mspec, "Summand body M");
  auto* vk = verify->add_option("--k", kspec, "Body K (summand status is tested)");
  vm->excludes(vk);
  verify->add_option("--e", espec, "Body E")->required();
  verify->add_option("--checks", checks, "Comma-separated check ids or 'all'");
  verify->add_option("--out", out_path, "Write the report JSON here");
  verify->add_flag("--json", as_json, "JSON output");

  auto* seq = app.add_subcommand("seq", "Sequence predicates and combinatorial checks");
  seq->add_option("--values", values, "Comma-separated rationals")->required();
  seq->add_option("--n", n, "Ambient dimension (default: length - 1)");
  seq->add_option("--checks", checks, "concave,convex,logconcave and/or check ids, or 'all'");
  seq->add_option("--as", as, "Treat input as the K-sequence (k) or the M-sequence (m)");
  seq->add_flag("--json", as_json, "JSON output");

  auto* campaign = app.add_subcommand("campaign", "Seeded random search over body pairs");
  campaign->add_option("--dim", cfg.ambient_dim, "Ambient dimension (2 or 3)")->required();
  campaign->add_option("--trials", cfg.trials, "Number of trials")->required();
  campaign->add_option("--seed", cfg.seed, "Generator seed")->required();
  campaign->add_option("--mode", mode, "summand or arbitrary");
  campaign->add_option("--checks", checks, "Comma-separated check ids or 'all'");
  campaign->add_option("--vertices", vertex_range, "Vertex count range min,max");
  campaign->add_option("--coord-bound", cfg.coord_bound, "Coordinates drawn from [0, bound]");
  campaign->add_option("--out", out_path, "Write the summary JSON here");
  campaign->add_flag("--json", as_json, "Print the summary JSON");

  auto* oracle = app.add_subcommand("oracle", "Monte Carlo cross-check of the Steiner polynomial");
  oracle->add_option("--k", kspec, "Body K")->required();
  oracle->add_option("--e", espec, "Body E")->required();
  oracle->add_option("--samples", samples, "Samples per lambda");
  oracle->add_option("--seed", seed, "Generator seed")->required();
  oracle->add_flag("--selftest", selftest, "Corrupt W_1 by 10% to confirm the harness detects it");
  oracle->add_flag("--json", as_json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << ex.what() << "\n";
    return kUsageError;
  }

  try {
    if (quermass->parsed()) return cmd_quermass(kspec, espec, as_json, as_csv, out);
    if (verify->parsed()) {
      if (mspec.empty() == kspec.empty()) throw Error(Errc::ParseError, "verify needs exactly one of --m or --k");
      return cmd_verify(mspec, kspec, espec, checks, as_json, out_path, out);
    }
    if (seq->parsed()) return cmd_seq(values, n, checks, as, as_json, out);
    if (campaign->parsed()) {
      const auto range = parse_rat_list(vertex_range);
      if (range.size() != 2 || range[0].den() != 1 || range[1].den() != 1)
        throw Error(Errc::ParseError, "--vertices must be two integers min,max");
      cfg.min_vertices = static_cast<int>(range[0].num().get_si());
      cfg.max_vertices = static_cast<int>(range[1].num().get_si());
      return cmd_campaign(cfg, mode, checks, out_path, as_json, out);
    }
    if (oracle->parsed()) return cmd_oracle(kspec, espec, samples, seed, selftest, as_json, out);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    switch (ex.code()) {
      case Errc::ParseError:
      case Errc::UnknownPreset:
      case Errc::EmptyVertexList:
      case Errc::IoError:
      case Errc::InvalidArgument:
      case Errc::DimensionMismatch:
      case Errc::LowDimensionalE:
      case Errc::NotFullDimensional:
      case Errc::InvalidZeroPattern:
      case Errc::NegativeScale:
        return kUsageError;
      default:
        return kInternalError;
    }
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace qf::cli
