#pragma once

#include <cstdint>
#include <vector>

#include "qf/polytope.hpp"
#include "qf/steiner.hpp"

namespace qf {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/**
 * Monte Carlo volume of a full-dimensional polytope.
 *
 * Points are drawn uniformly from the vertex bounding box padded to twice
 * its side length about its centre. Membership is decided exactly against
 * the facet inequalities (a floating-point filter answers when its error
 * bound allows, exact rationals otherwise). Sampling runs in fixed-size
 * chunks with their own substreams, so the estimate does not depend on
 * the worker count.
 */
McEstimate mc_volume(const Polytope& p, std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

struct CrossCheckPoint {
  Rat lambda;
  Rat exact;  // Steiner polynomial value
  McEstimate estimate;
  double z = 0.0;
  bool pass = false;
};

struct CrossCheckReport {
  std::vector<CrossCheckPoint> points;
  bool pass = false;
};

inline constexpr double kCrossCheckSigma = 4.0;

/// Compares mc_volume(K + lambda E) against the Steiner polynomial of kseq at
/// lambda in {0, 1/2, 1, 2}.
CrossCheckReport cross_check(const Polytope& k, const Polytope& e, const QuermassSeq& kseq, std::uint64_t samples,
                             std::uint64_t seed, unsigned threads = 0);
CrossCheckReport cross_check(const Polytope& k, const Polytope& e, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads = 0);

/// Sequence with W_1 inflated by 10%, for exercising the harness itself.
QuermassSeq corrupt_first_quermassintegral(const QuermassSeq& seq);

}  // namespace qf
