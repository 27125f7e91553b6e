#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qf/polytope.hpp"
#include "qf/steiner.hpp"

namespace qf {

enum class CheckId {
  LemmaConvexity,
  Theorem1,
  ReverseIsop,
  Bonnesen2d,
  PropFij,
  DiffIdentity,
  TheoremExt,
  MinkowskiFirst,
  AfLogconcave,
};

inline constexpr CheckId kAllChecks[] = {
    CheckId::LemmaConvexity, CheckId::Theorem1,     CheckId::ReverseIsop,
    CheckId::Bonnesen2d,     CheckId::PropFij,      CheckId::DiffIdentity,
    CheckId::TheoremExt,     CheckId::MinkowskiFirst, CheckId::AfLogconcave,
};

std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check(std::string_view name);
/// Comma-separated check names or "all"; throws ParseError on unknown names.
std::vector<CheckId> parse_check_list(std::string_view text);

enum class Status { Holds, Equality, Violated };
std::string_view status_name(Status s);
std::optional<Status> parse_status(std::string_view name);

/**
 * One evaluated inequality. Orientation is normalized so that slack >= 0
 * means the inequality holds; status is Equality exactly when slack == 0.
 * expected_equality is empty when no equality prediction is available
 * (for example an arbitrary, non-summand pair).
 */
struct InequalityReport {
  CheckId check = CheckId::Theorem1;
  std::vector<std::pair<std::string, int>> params;
  Rat slack;
  Status status = Status::Holds;
  std::optional<bool> expected_equality;
  std::optional<int> dim_m;
  std::vector<std::pair<std::string, Rat>> values;  // auxiliary exact quantities
  bool identity_ok = true;                          // diff_identity only

  bool mismatch() const { return expected_equality && *expected_equality != (status == Status::Equality); }
  bool failed() const { return status == Status::Violated || mismatch() || !identity_ok; }
  friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

Status status_of(const Rat& slack);

/// Dimension of the body behind an M-sequence: n when no entry vanishes,
/// otherwise n - 1 - (last zero index). Zeros must form a prefix.
int dim_eff(const QuermassSeq& mseq);

InequalityReport check_lemma_convexity(const QuermassSeq& kseq, int i, std::optional<int> dim_m = std::nullopt);
InequalityReport check_theorem1(const QuermassSeq& kseq, int i, int j, int k, std::optional<int> dim_m = std::nullopt);
InequalityReport check_reverse_isop(const QuermassSeq& kseq, std::optional<int> dim_m = std::nullopt);
InequalityReport check_bonnesen2d(const Polytope& k, const Polytope& e);
InequalityReport check_prop_fij(const QuermassSeq& kseq, int i, int j, std::optional<int> dim_m = std::nullopt);
InequalityReport check_diff_identity(const QuermassSeq& kseq, int i, int j, std::optional<int> dim_m = std::nullopt);
InequalityReport check_theorem_ext(const QuermassSeq& kseq, int i, int j, int k, int l,
                                   std::optional<int> dim_m = std::nullopt);
InequalityReport check_minkowski_first(const QuermassSeq& kseq, std::optional<bool> homothetic = std::nullopt);
/// Minimum over interior i of W_i^2 - W_{i-1} W_{i+1}.
InequalityReport check_af_logconcave(const QuermassSeq& kseq);
std::pair<InequalityReport, InequalityReport> check_classical(const QuermassSeq& kseq,
                                                              std::optional<bool> homothetic = std::nullopt);

/// Context for running many checks on one K-sequence.
struct SuiteInput {
  QuermassSeq kseq;
  std::optional<int> dim_m;
  std::optional<bool> homothetic;           // K homothetic to E
  const Polytope* k = nullptr;              // geometric path only
  const Polytope* e = nullptr;
};

/// Every admissible index tuple of every selected check.
std::vector<InequalityReport> run_suite(const SuiteInput& input, const std::vector<CheckId>& checks);

/// Geometric summand pair: K = M + E with both sequences computed exactly.
struct SummandCase {
  Polytope m;
  Polytope e;
  Polytope k;
  QuermassSeq mseq;
  QuermassSeq kseq;
};
SummandCase make_summand_case(const Polytope& m, const Polytope& e);
std::vector<InequalityReport> verify_summand_case(const SummandCase& c, const std::vector<CheckId>& checks);

enum class CampaignMode { SummandPairs, ArbitraryPairs };

struct CampaignConfig {
  int ambient_dim = 2;
  int trials = 1;
  std::uint64_t seed = 0;
  int min_vertices = 3;
  int max_vertices = 7;
  int coord_bound = 6;
  CampaignMode mode = CampaignMode::SummandPairs;
  std::vector<CheckId> checks{std::begin(kAllChecks), std::end(kAllChecks)};
  unsigned threads = 0;  // 0: QF_THREADS or hardware concurrency

  void validate() const;
};

struct CheckCounts {
  long holds = 0;
  long equality = 0;
  long violated = 0;
  long mismatches = 0;
  friend bool operator==(const CheckCounts&, const CheckCounts&) = default;
};

struct CampaignFinding {
  int trial = 0;
  std::string kind;  // "violation", "convexity_violation", "non_summand_satisfying"
  InequalityReport report;
  Polytope k;
  Polytope e;
  std::optional<Polytope> m;
};

struct CampaignSummary {
  CampaignConfig config;
  std::map<CheckId, CheckCounts> counts;
  long violations = 0;   // reports with status violated
  long mismatches = 0;   // equality predictions that failed
  long convexity_violations = 0;      // arbitrary mode: trials with a violated lemma_convexity
  long non_summand_satisfying = 0;    // arbitrary mode: non-summand trials passing all checks
  std::vector<CampaignFinding> findings;  // first 10 of each kind
};

CampaignSummary run_campaign(const CampaignConfig& cfg);

/// Worker count from QF_THREADS, else hardware concurrency.
unsigned default_thread_count();

}  // namespace qf
