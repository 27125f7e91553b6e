#pragma once

#include <vector>

#include "qf/exactnum.hpp"
#include "qf/polytope.hpp"

namespace qf {

/// Relative quermassintegrals (W_0, ..., W_n) of a body K with respect to E.
struct QuermassSeq {
  int n = 0;
  std::vector<Rat> values;

  QuermassSeq() = default;
  QuermassSeq(int n, std::vector<Rat> values);

  const Rat& operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  friend bool operator==(const QuermassSeq&, const QuermassSeq&) = default;
};

/// f(z) = sum C(n,i) W_i z^i.
struct SteinerPoly {
  int n = 0;
  std::vector<Rat> coefficients;
};

SteinerPoly steiner_polynomial(const QuermassSeq& seq);

/// Interpolates vol(K + lambda E) at lambda = 0..n and divides by C(n,i).
QuermassSeq quermassintegrals(const Polytope& k, const Polytope& e);

/// vol(K + lambda E) = sum C(n,i) W_i lambda^i, lambda >= 0.
Rat steiner_eval(const QuermassSeq& seq, const Rat& lambda);

/// Sequence of M + lambda E from the sequence of M.
QuermassSeq parallel_body_seq(const QuermassSeq& mseq, const Rat& lambda);

/// n W_1.
Rat minkowski_content(const QuermassSeq& seq);

/// f_i^{(j)} = sum_{k=0}^{n-j} C(n-j,k) (-1)^k W_{i+k}, for 0 <= i <= j <= n.
Rat f_ij(const QuermassSeq& seq, int i, int j);

// n(n-1)...(n-j+1) sum_k C(n-j,k) W_{j+k} z^k; z may be negative.
Rat steiner_derivative(const QuermassSeq& seq, int j, const Rat& z);

}  // namespace qf
