#pragma once

#include <span>
#include <vector>

#include "qf/exactnum.hpp"

namespace qf {

struct SeqWitness {
  std::vector<int> indices;
  Rat slack;
};

/**
 * Outcome of a sequence predicate.
 *
 * One witness per interior index i carrying the exact defining quantity:
 * the second difference a_{i-1} - 2a_i + a_{i+1} for concavity (holds when
 * every slack is <= 0) and convexity (holds when every slack is >= 0), and
 * a_i^2 - a_{i-1}a_{i+1} for log-concavity (holds when every slack is >= 0).
 */
struct SeqVerdict {
  bool holds = true;
  std::vector<SeqWitness> witnesses;
  std::vector<int> equality_indices;  // interior indices with zero slack
};

SeqVerdict is_concave(std::span<const Rat> a);
SeqVerdict is_convex(std::span<const Rat> a);
SeqVerdict is_log_concave(std::span<const Rat> a);

/// (k-j) a_i + (i-k) a_j + (j-i) a_k; non-positive for concave sequences,
/// non-negative for convex ones.
Rat three_term(std::span<const Rat> a, int i, int j, int k);

}  // namespace qf
