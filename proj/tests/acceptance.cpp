// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qf/exactnum.hpp"
#include "qf/oracle.hpp"
#include "qf/polytope.hpp"
#include "qf/random_bodies.hpp"
#include "qf/seqprops.hpp"
#include "qf/steiner.hpp"
#include "qf/verify.hpp"

using namespace qf;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<CheckId> kTheoremChecks{CheckId::LemmaConvexity, CheckId::Theorem1,     CheckId::ReverseIsop,
                                          CheckId::PropFij,        CheckId::DiffIdentity, CheckId::TheoremExt};

Polytope box(std::vector<Rat> sides) {
  const int d = static_cast<int>(sides.size());
  std::vector<Point> v;
  for (unsigned mask = 0; mask < (1U << d); ++mask) {
    Point p(sides.size());
    for (int c = 0; c < d; ++c) p[c] = (mask >> c) & 1U ? sides[c] : Rat(0);
    v.push_back(std::move(p));
  }
  return convex_hull(v, d);
}

Polytope triangle() { return convex_hull(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}}, 2); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

// Classical inequalities are tracked across every geometric output.
struct ClassicalTally {
  long outputs = 0;
  long homothetic = 0;
  long failures = 0;
  void add(const QuermassSeq& kseq, bool homothetic_pair) {
    ++outputs;
    if (homothetic_pair) ++homothetic;
    const auto [mf, af] = check_classical(kseq, homothetic_pair);
    if (mf.failed() || af.failed()) ++failures;
  }
} g_classical;

// Seeded summand pairs shared by the path-agreement and soundness criteria.
std::vector<SummandCase> g_pairs;

Polytope random_summand(int d, const Polytope& e, Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 9), vc(d + 1, 7);
  switch (kind(rng)) {
    case 0: return random_flat_polytope(d, 0, 1, 6, rng);
    case 1:
    case 2: return random_flat_polytope(d, 1, vc(rng), 6, rng);
    case 3:
      if (d == 3) return random_flat_polytope(d, 2, vc(rng), 4, rng);
      break;
    case 4: {
      std::uniform_int_distribution<long> num(1, 5), shift(-4, 4);
      std::vector<Rat> t(static_cast<std::size_t>(d));
      for (auto& c : t) c = Rat(shift(rng));
      return translate(scale(e, Rat(BigInt(num(rng)), BigInt(2))), t);
    }
    default: break;
  }
  return random_polytope(d, vc(rng), d == 2 ? 6 : 4, rng, false);
}

void build_pairs() {
  for (int t = 0; t < 150; ++t) {
    const int d = t < 100 ? 2 : 3;
    Rng rng(derive_seed(20260501, static_cast<std::uint64_t>(t)));
    std::uniform_int_distribution<int> vc(d + 1, d == 2 ? 7 : 6);
    const Polytope e = random_polytope(d, vc(rng), d == 2 ? 5 : 3, rng, true);
    g_pairs.push_back(make_summand_case(random_summand(d, e, rng), e));
  }
}

QuermassSeq seq(std::vector<Rat> v) {
  const int n = static_cast<int>(v.size()) - 1;
  return QuermassSeq(n, std::move(v));
}

void extractions(Outcome& o) {
  struct Case {
    Polytope k, e;
    QuermassSeq expected;
  };
  const Polytope seg = convex_hull(std::vector<Point>{{0, 0}, {1, 0}}, 2);
  const std::vector<Case> cases{
      {box({2, 2}), box({1, 1}), seq({4, 2, 1})},
      {box({2, 2, 2}), box({1, 1, 1}), seq({8, 4, 2, 1})},
      {box({1, 1}), triangle(), seq({1, 1, Rat(1, 2)})},
      {minkowski_sum(seg, box({1, 1})), box({1, 1}), seq({2, Rat(3, 2), 1})},
  };
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto start = Clock::now();
    const QuermassSeq w = quermassintegrals(cases[c].k, cases[c].e);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(w == cases[c].expected, "case " + std::to_string(c) + " value");
    o.require(secs < 1.0, "case " + std::to_string(c) + " runtime");
    g_classical.add(w, is_homothetic(cases[c].k, cases[c].e));
  }
  o.detail << "4 cases exact";
}

void path_agreement(Outcome& o) {
  build_pairs();
  int agree = 0;
  for (const auto& c : g_pairs) {
    const bool ok = c.kseq == parallel_body_seq(c.mseq, 1);
    agree += ok;
    o.require(ok, "pair mismatch");
  }
  o.detail << agree << "/" << g_pairs.size() << " pairs (100 planar, 50 spatial) agree";
}

void soundness(Outcome& o) {
  long reports = 0, equalities = 0, bad = 0;
  for (const auto& c : g_pairs) {
    const int dm = c.m.affine_dim();
    o.require(dim_eff(c.mseq) == dm, "dim_eff disagrees with affine dim");
    for (const auto& r : verify_summand_case(c, kTheoremChecks)) {
      ++reports;
      if (r.status == Status::Equality) ++equalities;
      if (r.failed() || !r.expected_equality) ++bad;
    }
    g_classical.add(c.kseq, is_homothetic(c.k, c.e));
  }
  o.require(bad == 0, "violation or equality mismatch");
  o.detail << reports << " reports, " << equalities << " equalities, " << bad << " failures";
}

// Positive log-concave sequence: a_{i+1} = a_i * r_i with non-increasing ratios.
std::vector<Rat> log_concave_tail(Rng& rng, int len) {
  std::uniform_int_distribution<long> num(1, 40), den(1, 12);
  std::vector<Rat> ratios;
  for (int i = 0; i + 1 < len; ++i) ratios.push_back(Rat(BigInt(num(rng)), BigInt(den(rng))));
  std::sort(ratios.begin(), ratios.end(), std::greater<>());
  std::vector<Rat> a{Rat(BigInt(num(rng)), BigInt(den(rng)))};
  for (const auto& r : ratios) a.push_back(a.back() * r);
  return a;
}

void combinatorial(Outcome& o) {
  long sequences = 0, reports = 0, equalities = 0, bad = 0;
  for (int t = 0; t < 200; ++t) {
    Rng rng(derive_seed(777, static_cast<std::uint64_t>(t)));
    const int n = 4 + t % 9;
    for (int dim : {n, 0, 1}) {
      std::vector<Rat> m(static_cast<std::size_t>(n - dim), Rat(0));
      for (auto& x : log_concave_tail(rng, dim + 1)) m.push_back(x);
      const QuermassSeq mseq(n, m);
      if (dim == n && !is_log_concave(mseq.values).holds) {
        o.require(false, "generator produced a non-log-concave sequence");
        continue;
      }
      const int de = dim_eff(mseq);
      o.require(de == dim, "dim_eff of prefix-zero variant");
      const SuiteInput in{parallel_body_seq(mseq, 1), de, std::nullopt, nullptr, nullptr};
      for (const auto& r : run_suite(in, kTheoremChecks)) {
        ++reports;
        if (r.status == Status::Equality) ++equalities;
        if (r.failed() || !r.expected_equality) ++bad;
      }
      ++sequences;
    }
  }
  o.require(bad == 0, "violation or equality mismatch");
  o.detail << sequences << " sequences (n = 4..12), " << reports << " reports, " << equalities << " equalities, " << bad
           << " failures";
}

Rat slack_at(const SeqVerdict& v, int i) {
  for (const auto& w : v.witnesses)
    if (w.indices.front() == i) return w.slack;
  return Rat(9999);
}

void witnesses(Outcome& o) {
  const std::vector<Rat> a{1, 2, 1}, b{Rat(3, 4), Rat(1, 2), Rat(1, 4)};
  const SeqVerdict a_conv = is_convex(a), b_conv = is_convex(b);
  o.require(is_log_concave(a).holds, "(1,2,1) log-concave");
  o.require(!a_conv.holds && slack_at(a_conv, 1) == -2, "(1,2,1) second difference -2");
  o.require(is_log_concave(b).holds, "(3/4,1/2,1/4) log-concave");
  o.require(b_conv.holds && slack_at(b_conv, 1) == 0, "(3/4,1/2,1/4) second difference 0");
  o.detail << "(1,2,1): d2 = " << slack_at(a_conv, 1) << "; (3/4,1/2,1/4): d2 = " << slack_at(b_conv, 1);
}

void counterexamples(Outcome& o) {
  CampaignConfig cfg;
  cfg.ambient_dim = 2;
  cfg.trials = 200;
  cfg.seed = 42;
  cfg.mode = CampaignMode::ArbitraryPairs;
  const CampaignSummary s = run_campaign(cfg);
  o.require(s.convexity_violations >= 1, "no convexity violation found");
  const QuermassSeq w = quermassintegrals(box({1, 1}), triangle());
  const InequalityReport r = check_theorem1(w, 0, 1, 2);
  o.require(r.slack == Rat(-1, 2) && r.status == Status::Violated, "canned pair slack");
  for (const auto& f : s.findings) g_classical.add(quermassintegrals(f.k, f.e), is_homothetic(f.k, f.e));
  o.detail << s.convexity_violations << " of 200 arbitrary pairs break convexity; canned pair slack " << r.slack;
}

void bonnesen_family(Outcome& o) {
  int exact = 0;
  for (int t = 0; t < 20; ++t) {
    Rng rng(derive_seed(1905, static_cast<std::uint64_t>(t)));
    std::uniform_int_distribution<int> vc(3, 7);
    std::uniform_int_distribution<long> num(1, 9), den(1, 4);
    const Polytope e = random_polytope(2, vc(rng), 5, rng, true);
    const Polytope l = random_flat_polytope(2, t % 4 == 0 ? 0 : 1, 3, 6, rng);
    const Rat r(BigInt(num(rng)), BigInt(den(rng)));
    const Polytope k = minkowski_sum(l, scale(e, r));
    const InequalityReport rep = check_bonnesen2d(k, e);
    const bool ok = rep.values[1].second == r && rep.values[0].second == 0 && relative_inradius(k, e) == r &&
                    !rep.failed();
    exact += ok;
    o.require(ok, "construction " + std::to_string(t));
    g_classical.add(quermassintegrals(k, e), is_homothetic(k, e));
  }
  o.detail << exact << "/20 constructions with inradius r and expression 0";
}

void closed_form(Outcome& o) {
  long cases = 0, exceptions = 0;
  for (unsigned N = 0; N <= 20; ++N)
    for (unsigned I = 0; I <= N; ++I)
      for (unsigned m = 0; m <= N; ++m) {
        ++cases;
        if (binom_alternating_sum(N, I, m) != binomial(N - m, I)) ++exceptions;
      }
  o.require(exceptions == 0, "closed form exception");
  o.detail << cases << " cases, " << exceptions << " exceptions";
}

void oracle_agreement(Outcome& o) {
  double worst = 0.0;
  int passed = 0;
  for (int t = 0; t < 10; ++t) {
    const int d = t < 6 ? 2 : 3;
    Rng rng(derive_seed(4242, static_cast<std::uint64_t>(t)));
    const Polytope e = random_polytope(d, d + 2, 3, rng, true);
    const Polytope k = t % 2 == 0 ? minkowski_sum(random_polytope(d, d + 2, 4, rng, false), e)
                                  : random_polytope(d, d + 3, 5, rng, true);
    const QuermassSeq w = quermassintegrals(k, e);
    const CrossCheckReport rep = cross_check(k, e, w, 1000000, derive_seed(99, static_cast<std::uint64_t>(t)));
    for (const auto& p : rep.points) worst = std::max(worst, std::abs(p.z));
    passed += rep.pass;
    o.require(rep.pass, "pair " + std::to_string(t));
    g_classical.add(w, is_homothetic(k, e));
  }
  const QuermassSeq w = quermassintegrals(box({2, 2}), box({1, 1}));
  const CrossCheckReport self = cross_check(box({2, 2}), box({1, 1}), corrupt_first_quermassintegral(w), 1000000, 7);
  o.require(!self.pass, "corrupted self-test passed");
  o.detail << passed << "/10 pairs pass, max |z| = " << worst << "; self-test " << (self.pass ? "passed" : "failed");
}

void classical(Outcome& o) {
  // explicit homothets so the equality branch is exercised
  for (int t = 0; t < 10; ++t) {
    const int d = 2 + t % 2;
    Rng rng(derive_seed(31, static_cast<std::uint64_t>(t)));
    const Polytope e = random_polytope(d, d + 3, 4, rng, true);
    const Polytope k = translate(scale(e, Rat(t + 2, 3)), std::vector<Rat>(static_cast<std::size_t>(d), Rat(t)));
    g_classical.add(quermassintegrals(k, e), is_homothetic(k, e));
  }
  o.require(g_classical.failures == 0, "classical inequality failed or equality mismatch");
  o.require(g_classical.homothetic > 0, "no homothetic pairs seen");
  o.detail << g_classical.outputs << " geometric outputs (" << g_classical.homothetic << " homothetic), "
           << g_classical.failures << " failures";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked exact extractions", 4.0, extractions},
      {2, "geometric and combinatorial paths agree", 60.0, path_agreement},
      {3, "theorem suite on summand pairs", 300.0, soundness},
      {4, "combinatorial suite in high dimension", 60.0, combinatorial},
      {5, "sequence witnesses", 1.0, witnesses},
      {6, "counterexamples without the summand hypothesis", 60.0, counterexamples},
      {7, "Bonnesen equality family", 60.0, bonnesen_family},
      {8, "alternating binomial closed form", 10.0, closed_form},
      {9, "Monte Carlo agreement", 120.0, oracle_agreement},
      {10, "classical inequalities", 60.0, classical},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(secs < c.limit_seconds, "runtime limit");
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- " << o.detail.str()
              << " [" << std::fixed << std::setprecision(2) << secs << "s]" << std::endl;
  }
  return all ? 0 : 1;
}
