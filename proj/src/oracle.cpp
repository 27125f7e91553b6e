#include "qf/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "qf/random_bodies.hpp"
#include "qf/verify.hpp"

namespace qf {

namespace {

constexpr std::uint64_t kChunk = 1U << 16;

struct FastFacet {
  std::vector<double> normal;
  bool normal_exact = true;  // all normal entries representable as doubles
  double offset = 0.0;
  const Facet* exact = nullptr;
};

class Membership {
 public:
  explicit Membership(const HalfspaceRep& h) : rep_(h) {
    for (const auto& f : rep_.facets) {
      FastFacet ff;
      ff.exact = &f;
      for (const auto& c : f.normal) {
        ff.normal_exact = ff.normal_exact && mpz_sizeinbase(c.get_mpz_t(), 2) < 53;
        ff.normal.push_back(c.get_d());
      }
      ff.offset = f.offset.to_double();
      fast_.push_back(std::move(ff));
    }
  }

  bool contains(const double* x, int d) const {
    for (const auto& f : fast_) {
      if (f.normal_exact && std::isfinite(f.offset)) {
        double s = -f.offset;
        double mag = std::abs(f.offset);
        for (int c = 0; c < d; ++c) {
          const double t = f.normal[c] * x[c];
          s += t;
          mag += std::abs(t);
        }
        const double bound = 16.0 * std::numeric_limits<double>::epsilon() * mag;
        if (s > bound) return false;
        if (s < -bound) continue;
      }
      Rat lhs(0);
      for (int c = 0; c < d; ++c) lhs += Rat(f.exact->normal[c]) * Rat::from_double(x[c]);
      if (lhs > f.exact->offset) return false;
    }
    return true;
  }

 private:
  const HalfspaceRep& rep_;
  std::vector<FastFacet> fast_;
};

}  // namespace

McEstimate mc_volume(const Polytope& p, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (!p.full_dimensional()) throw Error(Errc::NotFullDimensional, "Monte Carlo volume needs a full-dimensional body");
  if (samples < 1) throw Error(Errc::InvalidArgument, "samples must be >= 1");
  const int d = p.ambient_dim();
  const HalfspaceRep h = to_halfspaces(p);
  const Membership member(h);

  std::vector<double> lo(static_cast<std::size_t>(d)), width(static_cast<std::size_t>(d));
  Rat box_volume(1);
  for (int c = 0; c < d; ++c) {
    Rat mn = p.vertices().front()[c];
    Rat mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    // padded box [mn - (mx-mn)/2, mx + (mx-mn)/2]
    const Rat side = mx - mn;
    lo[c] = (mn - side / Rat(2)).to_double();
    width[c] = (Rat(2) * side).to_double();
    box_volume *= Rat(2) * side;
  }

  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double x[3];
    for (std::uint64_t ch = next++; ch < chunks; ch = next++) {
      Rng rng(derive_seed(seed, ch));
      const std::uint64_t count = std::min(kChunk, samples - ch * kChunk);
      std::uint64_t local = 0;
      for (std::uint64_t s = 0; s < count; ++s) {
        for (int c = 0; c < d; ++c) x[c] = lo[c] + width[c] * unit(rng);
        if (member.contains(x, d)) ++local;
      }
      hits[ch] = local;
    }
  };
  const unsigned workers =
      std::max<unsigned>(1, std::min<std::uint64_t>(threads > 0 ? threads : default_thread_count(), chunks));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::uint64_t total = 0;
  for (auto v : hits) total += v;
  const double box = box_volume.to_double();
  const double frac = static_cast<double>(total) / static_cast<double>(samples);
  McEstimate est;
  est.mean = box * frac;
  est.std_error = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
  est.samples = samples;
  est.seed = seed;
  return est;
}

CrossCheckReport cross_check(const Polytope& k, const Polytope& e, const QuermassSeq& kseq, std::uint64_t samples,
                             std::uint64_t seed, unsigned threads) {
  CrossCheckReport rep;
  rep.pass = true;
  const Rat lambdas[] = {Rat(0), Rat(1, 2), Rat(1), Rat(2)};
  std::uint64_t index = 0;
  for (const Rat& lambda : lambdas) {
    const Polytope body = lambda.is_zero() ? k : minkowski_sum(k, scale(e, lambda));
    CrossCheckPoint pt;
    pt.lambda = lambda;
    pt.exact = steiner_eval(kseq, lambda);
    pt.estimate = mc_volume(body, samples, derive_seed(seed, index++), threads);
    const double diff = pt.estimate.mean - pt.exact.to_double();
    if (pt.estimate.std_error > 0) {
      pt.z = diff / pt.estimate.std_error;
    } else {
      pt.z = diff == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    pt.pass = std::abs(pt.z) <= kCrossCheckSigma;
    rep.pass = rep.pass && pt.pass;
    rep.points.push_back(std::move(pt));
  }
  return rep;
}

CrossCheckReport cross_check(const Polytope& k, const Polytope& e, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads) {
  return cross_check(k, e, quermassintegrals(k, e), samples, seed, threads);
}

QuermassSeq corrupt_first_quermassintegral(const QuermassSeq& seq) {
  QuermassSeq out = seq;
  if (out.n >= 1) out.values[1] *= Rat(11, 10);
  return out;
}

}  // namespace qf
