#include "qf/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <ostream>

namespace qf {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || den_text.empty() ||
      !std::all_of(den_text.begin(), den_text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw Error(Errc::ParseError, "malformed rational literal '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

Rat Rat::from_double(double value) {
  if (!std::isfinite(value)) throw Error(Errc::InvalidArgument, "non-finite double");
  Rat r;
  r.q_ = mpq_class(value);
  return r;
}

std::string Rat::str() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(Errc::InvalidArgument, "matrix dimensions must be positive");
}

std::size_t RatMatrix::rank() const {
  std::vector<Rat> a = data_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = rank; r < rows_; ++r) {
      if (!a[r * cols_ + col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (!pivot) continue;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(a[*pivot * cols_ + c], a[rank * cols_ + c]);
    const Rat p = a[rank * cols_ + col];
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      const Rat f = a[r * cols_ + col] / p;
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < cols_; ++c) a[r * cols_ + c] -= f * a[rank * cols_ + c];
    }
    ++rank;
  }
  return rank;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt binom_alternating_sum(unsigned N, unsigned I, unsigned m) {
  BigInt sum = 0;
  const unsigned top = std::min(m, I);
  for (unsigned t = 0; t <= top; ++t) {
    if (t > N) break;  // C(N-t, .) with negative upper index is zero
    BigInt term = binomial(N - t, I - t) * binomial(m, t);
    if (t % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<Rat> solve_vandermonde(std::span<const Rat> nodes, std::span<const Rat> values) {
  if (nodes.size() != values.size()) throw Error(Errc::InvalidArgument, "nodes and values differ in length");
  if (nodes.empty()) throw Error(Errc::EmptyInput, "no interpolation nodes");
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (nodes[a] == nodes[b]) throw Error(Errc::DuplicateNodes, "node " + nodes[a].str() + " repeated");

  const std::size_t d = nodes.size() - 1;
  std::vector<Rat> newton(values.begin(), values.end());
  for (std::size_t j = 1; j <= d; ++j)
    for (std::size_t i = d; i >= j; --i) newton[i] = (newton[i] - newton[i - 1]) / (nodes[i] - nodes[i - j]);

  // p(x) = newton[d]; p <- p * (x - nodes[i]) + newton[i] for i = d-1..0.
  std::vector<Rat> poly{newton[d]};
  for (std::size_t step = d; step-- > 0;) {
    std::vector<Rat> next(poly.size() + 1);
    for (std::size_t c = 0; c < poly.size(); ++c) {
      next[c + 1] += poly[c];
      next[c] -= poly[c] * nodes[step];
    }
    next[0] += newton[step];
    poly = std::move(next);
  }
  return poly;
}

Rat eval_polynomial(std::span<const Rat> coefficients, const Rat& x) {
  Rat acc(0);
  for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * x + coefficients[i];
  return acc;
}

namespace {

// Tableau over columns [x+ (n), x- (n), slack (m), artificial (a)] | rhs.
struct Tableau {
  std::vector<std::vector<Rat>> rows;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  Rat& rhs(std::size_t r) { return rows[r][columns]; }

  void pivot(std::size_t pr, std::size_t pc) {
    auto& prow = rows[pr];
    const Rat p = prow[pc];
    for (auto& v : prow) v /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr) continue;
      const Rat f = rows[r][pc];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c <= columns; ++c)
        if (!prow[c].is_zero()) rows[r][c] -= f * prow[c];
    }
    basis[pr] = pc;
  }

  // Maximizes cost over columns < usable. Returns false when unbounded.
  bool optimize(const std::vector<Rat>& cost, std::size_t usable) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < usable && !entering; ++c) {
        Rat reduced = cost[c];
        for (std::size_t r = 0; r < rows.size(); ++r)
          if (!rows[r][c].is_zero()) reduced -= cost[basis[r]] * rows[r][c];
        if (reduced.sign() > 0) entering = c;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rat best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rat& a = rows[r][*entering];
        if (a.sign() <= 0) continue;
        Rat ratio = rows[r][columns] / a;
        if (!leaving || ratio < best || (ratio == best && basis[r] < basis[*leaving])) {
          leaving = r;
          best = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }
};

}  // namespace

LpSolution exact_lp_max(std::span<const Rat> objective, std::span<const LinearConstraint> constraints) {
  const std::size_t n = objective.size();
  const std::size_t m = constraints.size();
  if (n == 0) throw Error(Errc::InvalidArgument, "LP without variables");
  for (const auto& c : constraints)
    if (c.coefficients.size() != n) throw Error(Errc::DimensionMismatch, "constraint arity differs from objective");

  std::size_t artificial_count = 0;
  for (const auto& c : constraints)
    if (c.bound.sign() < 0) ++artificial_count;

  Tableau t;
  const std::size_t slack0 = 2 * n;
  const std::size_t art0 = slack0 + m;
  t.columns = art0 + artificial_count;
  t.rows.assign(m, std::vector<Rat>(t.columns + 1));
  t.basis.resize(m);

  std::size_t next_art = art0;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = constraints[r];
    const bool flip = c.bound.sign() < 0;
    auto& row = t.rows[r];
    for (std::size_t v = 0; v < n; ++v) {
      row[v] = flip ? -c.coefficients[v] : c.coefficients[v];
      row[n + v] = -row[v];
    }
    row[slack0 + r] = flip ? Rat(-1) : Rat(1);
    row[t.columns] = flip ? -c.bound : c.bound;
    if (flip) {
      row[next_art] = 1;
      t.basis[r] = next_art++;
    } else {
      t.basis[r] = slack0 + r;
    }
  }

  if (artificial_count > 0) {
    std::vector<Rat> phase1(t.columns);
    for (std::size_t c = art0; c < t.columns; ++c) phase1[c] = -1;
    t.optimize(phase1, t.columns);
    for (std::size_t r = 0; r < m; ++r)
      if (t.basis[r] >= art0 && !t.rhs(r).is_zero()) throw Error(Errc::Infeasible, "constraints have no common point");
    // Drive zero-level artificials out where a structural pivot exists.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis[r] < art0) continue;
      for (std::size_t c = 0; c < art0; ++c) {
        if (!t.rows[r][c].is_zero()) {
          t.pivot(r, c);
          break;
        }
      }
    }
  }

  std::vector<Rat> phase2(t.columns);
  for (std::size_t v = 0; v < n; ++v) {
    phase2[v] = objective[v];
    phase2[n + v] = -objective[v];
  }
  if (!t.optimize(phase2, art0)) throw Error(Errc::Unbounded, "objective unbounded above");

  std::vector<Rat> x(n);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t b = t.basis[r];
    if (b < n) x[b] += t.rhs(r);
    else if (b < 2 * n) x[b - n] -= t.rhs(r);
  }
  Rat value(0);
  for (std::size_t v = 0; v < n; ++v) value += objective[v] * x[v];
  return {value, x};
}

}  // namespace qf
