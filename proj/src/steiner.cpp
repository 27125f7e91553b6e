#include "qf/steiner.hpp"

#include <string>

namespace qf {

QuermassSeq::QuermassSeq(int n_, std::vector<Rat> values_) : n(n_), values(std::move(values_)) {
  if (n < 0 || values.size() != static_cast<std::size_t>(n) + 1)
    throw Error(Errc::InvalidArgument, "sequence for n=" + std::to_string(n) + " needs n+1 values, got " +
                                           std::to_string(values.size()));
}

SteinerPoly steiner_polynomial(const QuermassSeq& seq) {
  SteinerPoly p{seq.n, {}};
  p.coefficients.reserve(seq.values.size());
  for (int i = 0; i <= seq.n; ++i) p.coefficients.push_back(Rat(binomial(seq.n, i)) * seq[i]);
  return p;
}

QuermassSeq quermassintegrals(const Polytope& k, const Polytope& e) {
  if (k.ambient_dim() != e.ambient_dim()) throw Error(Errc::DimensionMismatch, "K and E live in different dimensions");
  if (!e.full_dimensional())
    throw Error(Errc::LowDimensionalE, "E has affine dimension " + std::to_string(e.affine_dim()));
  const int n = k.ambient_dim();
  std::vector<Rat> nodes;
  std::vector<Rat> vols;
  for (int lambda = 0; lambda <= n; ++lambda) {
    nodes.emplace_back(lambda);
    vols.push_back(lambda == 0 ? volume(k) : volume(minkowski_sum(k, scale(e, Rat(lambda)))));
  }
  std::vector<Rat> c = solve_vandermonde(nodes, vols);
  for (int i = 0; i <= n; ++i) c[i] /= Rat(binomial(n, i));
  return QuermassSeq(n, std::move(c));
}

Rat steiner_eval(const QuermassSeq& seq, const Rat& lambda) {
  if (lambda.sign() < 0) throw Error(Errc::InvalidArgument, "steiner_eval is a volume only for lambda >= 0");
  return eval_polynomial(steiner_polynomial(seq).coefficients, lambda);
}

QuermassSeq parallel_body_seq(const QuermassSeq& mseq, const Rat& lambda) {
  if (lambda.sign() < 0) throw Error(Errc::InvalidArgument, "parallel body needs lambda >= 0");
  const int n = mseq.n;
  std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rat power(1);
    for (int i = 0; i <= n - k; ++i) {
      out[k] += Rat(binomial(n - k, i)) * mseq[k + i] * power;
      power *= lambda;
    }
  }
  return QuermassSeq(n, std::move(out));
}

Rat minkowski_content(const QuermassSeq& seq) {
  if (seq.n == 0) return Rat(0);
  return Rat(seq.n) * seq[1];
}

Rat f_ij(const QuermassSeq& seq, int i, int j) {
  if (i < 0 || i > j || j > seq.n)
    throw Error(Errc::IndexOrder, "f_ij needs 0 <= i <= j <= n, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  Rat sum(0);
  for (int k = 0; k <= seq.n - j; ++k) {
    const Rat term = Rat(binomial(seq.n - j, k)) * seq[i + k];
    if (k % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

Rat steiner_derivative(const QuermassSeq& seq, int j, const Rat& z) {
  if (j < 0 || j > seq.n) throw Error(Errc::IndexOrder, "derivative order out of range: " + std::to_string(j));
  Rat falling(1);
  for (int t = 0; t < j; ++t) falling *= Rat(seq.n - t);
  Rat sum(0);
  Rat power(1);
  for (int k = 0; k <= seq.n - j; ++k) {
    sum += Rat(binomial(seq.n - j, k)) * seq[j + k] * power;
    power *= z;
  }
  return falling * sum;
}

}  // namespace qf
