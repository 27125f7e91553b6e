#include "qf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "qf/random_bodies.hpp"
#include "qf/seqprops.hpp"

namespace qf {

namespace {

constexpr std::size_t kMaxFindingsPerKind = 10;

struct NamedCheck {
  CheckId id;
  std::string_view name;
};

constexpr NamedCheck kCheckNames[] = {
    {CheckId::LemmaConvexity, "lemma_convexity"}, {CheckId::Theorem1, "theorem1"},
    {CheckId::ReverseIsop, "reverse_isop"},       {CheckId::Bonnesen2d, "bonnesen2d"},
    {CheckId::PropFij, "prop_fij"},               {CheckId::DiffIdentity, "diff_identity"},
    {CheckId::TheoremExt, "theorem_ext"},         {CheckId::MinkowskiFirst, "minkowski_first"},
    {CheckId::AfLogconcave, "af_logconcave"},
};

InequalityReport make_report(CheckId id, std::vector<std::pair<std::string, int>> params, Rat slack,
                             std::optional<bool> expected, std::optional<int> dim_m) {
  InequalityReport r;
  r.check = id;
  r.params = std::move(params);
  r.status = status_of(slack);
  r.slack = std::move(slack);
  r.expected_equality = expected;
  r.dim_m = dim_m;
  return r;
}

std::optional<bool> predict(std::optional<int> dim_m, int threshold) {
  if (!dim_m) return std::nullopt;
  return *dim_m <= threshold;
}

template <typename Fn>
void parallel_for(int count, unsigned threads, Fn&& fn) {
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::string_view check_name(CheckId id) {
  for (const auto& c : kCheckNames)
    if (c.id == id) return c.name;
  return "unknown";
}

std::optional<CheckId> parse_check(std::string_view name) {
  for (const auto& c : kCheckNames)
    if (c.name == name) return c.id;
  return std::nullopt;
}

std::vector<CheckId> parse_check_list(std::string_view text) {
  if (text == "all") return {std::begin(kAllChecks), std::end(kAllChecks)};
  std::vector<CheckId> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    auto id = parse_check(item);
    if (!id) throw Error(Errc::ParseError, "unknown check '" + std::string(item) + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(Errc::ParseError, "empty check list");
  return out;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Equality: return "equality";
    case Status::Violated: return "violated";
  }
  return "unknown";
}

std::optional<Status> parse_status(std::string_view name) {
  for (Status s : {Status::Holds, Status::Equality, Status::Violated})
    if (status_name(s) == name) return s;
  return std::nullopt;
}

Status status_of(const Rat& slack) {
  const int s = slack.sign();
  return s > 0 ? Status::Holds : (s == 0 ? Status::Equality : Status::Violated);
}

int dim_eff(const QuermassSeq& mseq) {
  int last_zero = -1;
  bool seen_positive = false;
  for (int i = 0; i <= mseq.n; ++i) {
    const int s = mseq[i].sign();
    if (s < 0) throw Error(Errc::InvalidZeroPattern, "negative entry at index " + std::to_string(i));
    if (s == 0) {
      if (seen_positive) throw Error(Errc::InvalidZeroPattern, "zero at index " + std::to_string(i) + " after a positive entry");
      last_zero = i;
    } else {
      seen_positive = true;
    }
  }
  if (!seen_positive) throw Error(Errc::InvalidZeroPattern, "all entries vanish");
  return last_zero < 0 ? mseq.n : mseq.n - 1 - last_zero;
}

InequalityReport check_lemma_convexity(const QuermassSeq& kseq, int i, std::optional<int> dim_m) {
  if (i < 1 || i > kseq.n - 1) throw Error(Errc::IndexOrder, "lemma_convexity needs 1 <= i <= n-1");
  Rat slack = kseq[i - 1] - Rat(2) * kseq[i] + kseq[i + 1];
  return make_report(CheckId::LemmaConvexity, {{"i", i}}, std::move(slack), predict(dim_m, 1), dim_m);
}

InequalityReport check_theorem1(const QuermassSeq& kseq, int i, int j, int k, std::optional<int> dim_m) {
  if (i < 0 || !(i < j && j < k) || k > kseq.n) throw Error(Errc::IndexOrder, "theorem1 needs 0 <= i < j < k <= n");
  return make_report(CheckId::Theorem1, {{"i", i}, {"j", j}, {"k", k}}, three_term(kseq.values, i, j, k),
                     predict(dim_m, 1), dim_m);
}

InequalityReport check_reverse_isop(const QuermassSeq& kseq, std::optional<int> dim_m) {
  const int n = kseq.n;
  if (n < 2) throw Error(Errc::DimensionTooSmall, "reverse isoperimetric inequality needs n >= 2");
  Rat slack = Rat(n - 1) * kseq[0] - minkowski_content(kseq) + kseq[n];
  return make_report(CheckId::ReverseIsop, {}, std::move(slack), predict(dim_m, 1), dim_m);
}

InequalityReport check_bonnesen2d(const Polytope& k, const Polytope& e) {
  if (k.ambient_dim() != 2 || e.ambient_dim() != 2)
    throw Error(Errc::DimensionMismatch, "Bonnesen's inequality is planar");
  const QuermassSeq w = quermassintegrals(k, e);
  const Rat r = relative_inradius(k, e);
  const Rat expression = w[0] - Rat(2) * w[1] * r + w[2] * r * r;
  // Equality family: K = L + rE with dim L <= 1.
  const Polytope re = scale(e, r);
  const auto l = minkowski_difference(k, re);
  std::optional<int> dim_l;
  bool family = false;
  if (l) {
    dim_l = l->affine_dim();
    family = *dim_l <= 1 && minkowski_sum(*l, re) == k;
  }
  InequalityReport rep = make_report(CheckId::Bonnesen2d, {}, -expression, family, dim_l);
  rep.values = {{"expression", expression}, {"inradius", r}};
  return rep;
}

InequalityReport check_prop_fij(const QuermassSeq& kseq, int i, int j, std::optional<int> dim_m) {
  return make_report(CheckId::PropFij, {{"i", i}, {"j", j}}, f_ij(kseq, i, j), predict(dim_m, kseq.n - j - 1), dim_m);
}

InequalityReport check_diff_identity(const QuermassSeq& kseq, int i, int j, std::optional<int> dim_m) {
  if (i < 0 || i >= j || j > kseq.n) throw Error(Errc::IndexOrder, "diff_identity needs 0 <= i < j <= n");
  const Rat lhs = f_ij(kseq, i, j) - f_ij(kseq, i + 1, j);
  Rat rhs = f_ij(kseq, i, j - 1);
  InequalityReport rep =
      make_report(CheckId::DiffIdentity, {{"i", i}, {"j", j}}, rhs, predict(dim_m, kseq.n - (j - 1) - 1), dim_m);
  rep.identity_ok = lhs == rhs;
  rep.values = {{"difference", lhs}};
  return rep;
}

InequalityReport check_theorem_ext(const QuermassSeq& kseq, int i, int j, int k, int l, std::optional<int> dim_m) {
  if (i < 0 || !(i < j && j < k && k <= l) || l > kseq.n)
    throw Error(Errc::IndexOrder, "theorem_ext needs 0 <= i < j < k <= l <= n");
  Rat slack = Rat(k - j) * f_ij(kseq, i, l) + Rat(i - k) * f_ij(kseq, j, l) + Rat(j - i) * f_ij(kseq, k, l);
  return make_report(CheckId::TheoremExt, {{"i", i}, {"j", j}, {"k", k}, {"l", l}}, std::move(slack),
                     predict(dim_m, kseq.n - l + 1), dim_m);
}

InequalityReport check_minkowski_first(const QuermassSeq& kseq, std::optional<bool> homothetic) {
  const int n = kseq.n;
  if (n < 2) throw Error(Errc::DimensionTooSmall, "Minkowski's first inequality needs n >= 2");
  const Rat s = minkowski_content(kseq);
  Rat slack = pow(s, static_cast<unsigned>(n)) -
              pow(Rat(n), static_cast<unsigned>(n)) * pow(kseq[0], static_cast<unsigned>(n - 1)) * kseq[n];
  InequalityReport rep = make_report(CheckId::MinkowskiFirst, {}, std::move(slack), homothetic, std::nullopt);
  rep.values = {{"S", s}};
  return rep;
}

InequalityReport check_af_logconcave(const QuermassSeq& kseq) {
  if (kseq.n < 2) throw Error(Errc::DimensionTooSmall, "log-concavity needs an interior index");
  std::optional<Rat> worst;
  int arg = 1;
  for (int i = 1; i < kseq.n; ++i) {
    Rat s = kseq[i] * kseq[i] - kseq[i - 1] * kseq[i + 1];
    if (!worst || s < *worst) {
      worst = std::move(s);
      arg = i;
    }
  }
  return make_report(CheckId::AfLogconcave, {{"i", arg}}, *worst, std::nullopt, std::nullopt);
}

std::pair<InequalityReport, InequalityReport> check_classical(const QuermassSeq& kseq, std::optional<bool> homothetic) {
  return {check_minkowski_first(kseq, homothetic), check_af_logconcave(kseq)};
}

std::vector<InequalityReport> run_suite(const SuiteInput& in, const std::vector<CheckId>& checks) {
  const QuermassSeq& w = in.kseq;
  const int n = w.n;
  std::vector<InequalityReport> out;
  for (CheckId id : checks) {
    switch (id) {
      case CheckId::LemmaConvexity:
        for (int i = 1; i <= n - 1; ++i) out.push_back(check_lemma_convexity(w, i, in.dim_m));
        break;
      case CheckId::Theorem1:
        for (int i = 0; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) out.push_back(check_theorem1(w, i, j, k, in.dim_m));
        break;
      case CheckId::ReverseIsop:
        if (n >= 2) out.push_back(check_reverse_isop(w, in.dim_m));
        break;
      case CheckId::Bonnesen2d:
        if (n == 2 && in.k && in.e) out.push_back(check_bonnesen2d(*in.k, *in.e));
        break;
      case CheckId::PropFij:
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i) out.push_back(check_prop_fij(w, i, j, in.dim_m));
        break;
      case CheckId::DiffIdentity:
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i) out.push_back(check_diff_identity(w, i, j, in.dim_m));
        break;
      case CheckId::TheoremExt:
        for (int l = 2; l <= n; ++l)
          for (int i = 0; i <= l; ++i)
            for (int j = i + 1; j <= l; ++j)
              for (int k = j + 1; k <= l; ++k) out.push_back(check_theorem_ext(w, i, j, k, l, in.dim_m));
        break;
      case CheckId::MinkowskiFirst:
        if (n >= 2) out.push_back(check_minkowski_first(w, in.homothetic));
        break;
      case CheckId::AfLogconcave:
        if (n >= 2 && std::all_of(w.values.begin(), w.values.end(), [](const Rat& v) { return v.sign() > 0; }))
          out.push_back(check_af_logconcave(w));
        break;
    }
  }
  return out;
}

SummandCase make_summand_case(const Polytope& m, const Polytope& e) {
  Polytope k = minkowski_sum(m, e);
  QuermassSeq mseq = quermassintegrals(m, e);
  QuermassSeq kseq = quermassintegrals(k, e);
  return {m, e, std::move(k), std::move(mseq), std::move(kseq)};
}

std::vector<InequalityReport> verify_summand_case(const SummandCase& c, const std::vector<CheckId>& checks) {
  SuiteInput in{c.kseq, c.m.affine_dim(), is_homothetic(c.k, c.e), &c.k, &c.e};
  return run_suite(in, checks);
}

void CampaignConfig::validate() const {
  if (ambient_dim != 2 && ambient_dim != 3) throw Error(Errc::InvalidArgument, "campaign dimension must be 2 or 3");
  if (trials < 1) throw Error(Errc::InvalidArgument, "trials must be >= 1");
  if (min_vertices < ambient_dim + 1 || max_vertices < min_vertices)
    throw Error(Errc::InvalidArgument, "vertex count range must satisfy dim+1 <= min <= max");
  if (coord_bound < 1) throw Error(Errc::InvalidArgument, "coordinate bound must be >= 1");
  if (checks.empty()) throw Error(Errc::InvalidArgument, "no checks selected");
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("QF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

struct TrialResult {
  std::vector<InequalityReport> reports;
  Polytope k;
  Polytope e;
  std::optional<Polytope> m;
  bool convexity_violation = false;
  bool non_summand_satisfying = false;
};

Polytope summand_family_member(const CampaignConfig& cfg, const Polytope& e, Rng& rng, int vertex_count) {
  const int d = cfg.ambient_dim;
  std::uniform_int_distribution<int> kind(0, 9);
  switch (kind(rng)) {
    case 0: return random_flat_polytope(d, 0, 1, cfg.coord_bound, rng);
    case 1:
    case 2: return random_flat_polytope(d, 1, vertex_count, cfg.coord_bound, rng);
    case 3:
      if (d == 3) return random_flat_polytope(d, 2, vertex_count, cfg.coord_bound, rng);
      break;
    case 4: {
      static const Rat factors[] = {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)};
      std::uniform_int_distribution<int> pick(0, 3);
      std::uniform_int_distribution<long> shift(-cfg.coord_bound, cfg.coord_bound);
      std::vector<Rat> t(static_cast<std::size_t>(d));
      for (auto& c : t) c = Rat(shift(rng));
      return translate(scale(e, factors[pick(rng)]), t);
    }
    default: break;
  }
  return random_polytope(d, vertex_count, cfg.coord_bound, rng, false);
}

TrialResult run_trial(const CampaignConfig& cfg, int trial) {
  Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
  std::uniform_int_distribution<int> vc(cfg.min_vertices, cfg.max_vertices);
  const int d = cfg.ambient_dim;
  Polytope e = random_polytope(d, vc(rng), cfg.coord_bound, rng, true);
  if (cfg.mode == CampaignMode::SummandPairs) {
    Polytope m = summand_family_member(cfg, e, rng, vc(rng));
    SummandCase c = make_summand_case(m, e);
    TrialResult r{verify_summand_case(c, cfg.checks), c.k, c.e, c.m};
    return r;
  }
  Polytope k = random_polytope(d, vc(rng), cfg.coord_bound, rng, true);
  const QuermassSeq kseq = quermassintegrals(k, e);
  SuiteInput in{kseq, std::nullopt, is_homothetic(k, e), &k, &e};
  TrialResult r{run_suite(in, cfg.checks), k, e, std::nullopt};
  r.convexity_violation = !is_convex(kseq.values).holds;
  const bool clean = std::none_of(r.reports.begin(), r.reports.end(), [](const auto& x) { return x.failed(); });
  r.non_summand_satisfying = clean && !is_summand(e, k);
  return r;
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  std::vector<std::optional<TrialResult>> results(static_cast<std::size_t>(cfg.trials));
  const unsigned threads = cfg.threads > 0 ? cfg.threads : default_thread_count();
  parallel_for(cfg.trials, threads, [&](int t) { results[static_cast<std::size_t>(t)] = run_trial(cfg, t); });

  CampaignSummary s;
  s.config = cfg;
  for (CheckId id : cfg.checks) s.counts[id];
  std::map<std::string, std::size_t> per_kind;
  auto keep = [&](int trial, const std::string& kind, const InequalityReport& rep, const TrialResult& r) {
    if (per_kind[kind]++ >= kMaxFindingsPerKind) return;
    s.findings.push_back({trial, kind, rep, r.k, r.e, r.m});
  };
  for (int t = 0; t < cfg.trials; ++t) {
    const TrialResult& r = *results[static_cast<std::size_t>(t)];
    for (const auto& rep : r.reports) {
      CheckCounts& c = s.counts[rep.check];
      switch (rep.status) {
        case Status::Holds: ++c.holds; break;
        case Status::Equality: ++c.equality; break;
        case Status::Violated: ++c.violated; ++s.violations; break;
      }
      if (rep.mismatch()) {
        ++c.mismatches;
        ++s.mismatches;
      }
      if (cfg.mode == CampaignMode::SummandPairs && rep.failed()) keep(t, "violation", rep, r);
    }
    if (cfg.mode == CampaignMode::ArbitraryPairs) {
      if (r.convexity_violation) {
        ++s.convexity_violations;
        auto it = std::find_if(r.reports.begin(), r.reports.end(), [](const auto& x) {
          return x.check == CheckId::LemmaConvexity && x.status == Status::Violated;
        });
        keep(t, "convexity_violation", it != r.reports.end() ? *it : check_lemma_convexity(quermassintegrals(r.k, r.e), 1), r);
      }
      if (r.non_summand_satisfying) {
        ++s.non_summand_satisfying;
        keep(t, "non_summand_satisfying", r.reports.empty() ? InequalityReport{} : r.reports.front(), r);
      }
    }
  }
  return s;
}

}  // namespace qf
