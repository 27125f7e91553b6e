#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qf/error.hpp"

namespace qf {

using BigInt = mpz_class;

/**
 * Exact rational number backed by GMP.
 *
 * The value is kept in lowest terms with a positive denominator after every
 * operation. Text form is "p/q" or "p" (optional leading minus).
 */
class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}
  Rat(const BigInt& value) : q_(value) {}
  Rat(const BigInt& num, const BigInt& den);

  static Rat parse(std::string_view text);
  /// Exact value of a finite double (every double is a dyadic rational).
  static Rat from_double(double value);

  std::string str() const;
  double to_double() const { return q_.get_d(); }

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  const mpq_class& raw() const { return q_; }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) {
    Rat r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class q_;
};

Rat abs(const Rat& r);
Rat pow(const Rat& base, unsigned exponent);

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Rank by exact Gaussian elimination.
  std::size_t rank() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> data_;
};

/// C(n, k), zero whenever k > n.
BigInt binomial(unsigned n, unsigned k);

/// Sum over t = 0..min(m, I) of (-1)^t C(N-t, I-t) C(m, t).
BigInt binom_alternating_sum(unsigned N, unsigned I, unsigned m);

/// Monomial coefficients c_0..c_d of the interpolating polynomial through
/// (nodes[j], values[j]). Newton divided differences, then basis change.
std::vector<Rat> solve_vandermonde(std::span<const Rat> nodes, std::span<const Rat> values);

/// Horner evaluation of sum c_i x^i.
Rat eval_polynomial(std::span<const Rat> coefficients, const Rat& x);

struct LinearConstraint {
  std::vector<Rat> coefficients;
  Rat bound;  // <a, x> <= bound
};

struct LpSolution {
  Rat value;
  std::vector<Rat> point;
};

/// Maximizes <objective, x> over free x subject to <a_f, x> <= b_f.
/// Two-phase dense tableau simplex with Bland's rule. Throws Infeasible or
/// Unbounded.
LpSolution exact_lp_max(std::span<const Rat> objective,
                        std::span<const LinearConstraint> constraints);

}  // namespace qf
