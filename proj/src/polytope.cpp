#include "qf/polytope.hpp"

#include <algorithm>
#include <string>

#include "hull.hpp"

namespace qf {

namespace {

void require_dim(int dim) {
  if (dim != 2 && dim != 3) throw Error(Errc::InvalidArgument, "ambient dimension must be 2 or 3, got " + std::to_string(dim));
}

void require_same_dim(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw Error(Errc::DimensionMismatch, "bodies live in different dimensions");
}

void require_full(const Polytope& p, const char* what) {
  if (!p.full_dimensional()) throw Error(Errc::NotFullDimensional, std::string(what) + " is not full-dimensional");
}

template <typename Vec>
Rat dot(std::span<const Rat> x, const Vec& u) {
  Rat s(0);
  for (std::size_t c = 0; c < x.size(); ++c) s += x[c] * Rat(u[c]);
  return s;
}

// Solves the d x d system normals * x = rhs by Cramer's rule; nullopt if singular.
std::optional<Point> solve_small(const std::vector<const Facet*>& rows, const std::vector<Rat>& rhs, int d) {
  auto det2 = [](const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& e) -> BigInt { return a * e - b * c; };
  if (d == 2) {
    const auto& u = rows[0]->normal;
    const auto& v = rows[1]->normal;
    const BigInt det = det2(u[0], u[1], v[0], v[1]);
    if (det == 0) return std::nullopt;
    const Rat dr(det);
    return Point{(rhs[0] * Rat(v[1]) - rhs[1] * Rat(u[1])) / dr, (Rat(u[0]) * rhs[1] - Rat(v[0]) * rhs[0]) / dr};
  }
  const auto& a = rows[0]->normal;
  const auto& b = rows[1]->normal;
  const auto& c = rows[2]->normal;
  // cofactors of the matrix with rows a, b, c
  const std::array<BigInt, 3> bc{b[1] * c[2] - b[2] * c[1], b[2] * c[0] - b[0] * c[2], b[0] * c[1] - b[1] * c[0]};
  const std::array<BigInt, 3> ca{c[1] * a[2] - c[2] * a[1], c[2] * a[0] - c[0] * a[2], c[0] * a[1] - c[1] * a[0]};
  const std::array<BigInt, 3> ab{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  const BigInt det = a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2];
  if (det == 0) return std::nullopt;
  const Rat dr(det);
  Point x(3);
  for (int k = 0; k < 3; ++k) x[k] = (rhs[0] * Rat(bc[k]) + rhs[1] * Rat(ca[k]) + rhs[2] * Rat(ab[k])) / dr;
  return x;
}

}  // namespace

Polytope convex_hull(std::span<const Point> points, int ambient_dim) {
  require_dim(ambient_dim);
  if (points.empty()) throw Error(Errc::EmptyInput, "convex hull of no points");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != ambient_dim) throw Error(Errc::DimensionMismatch, "point arity differs from ambient dimension");
  const auto scaled = detail::to_integer(points, ambient_dim);
  const auto h = detail::hull(scaled.points, ambient_dim);
  std::vector<Point> verts;
  verts.reserve(h.vertices.size());
  for (std::size_t i : h.vertices) verts.push_back(points[i]);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return Polytope(ambient_dim, h.affine_dim, std::move(verts));
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  require_same_dim(p, q);
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      Point s(a.size());
      for (std::size_t c = 0; c < a.size(); ++c) s[c] = a[c] + b[c];
      sums.push_back(std::move(s));
    }
  return convex_hull(sums, p.ambient_dim());
}

Polytope scale(const Polytope& p, const Rat& factor) {
  if (factor.sign() < 0) throw Error(Errc::NegativeScale, "scale factor " + factor.str() + " is negative");
  std::vector<Point> pts = p.vertices();
  for (auto& v : pts)
    for (auto& c : v) c *= factor;
  return convex_hull(pts, p.ambient_dim());
}

Polytope translate(const Polytope& p, std::span<const Rat> offset) {
  if (static_cast<int>(offset.size()) != p.ambient_dim()) throw Error(Errc::DimensionMismatch, "translation arity");
  std::vector<Point> pts = p.vertices();
  for (auto& v : pts)
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += offset[c];
  return convex_hull(pts, p.ambient_dim());
}

Rat volume(const Polytope& p) {
  if (!p.full_dimensional()) return Rat(0);
  const int d = p.ambient_dim();
  const auto scaled = detail::to_integer(p.vertices(), d);
  const auto h = detail::hull(scaled.points, d);
  const auto& pts = scaled.points;
  BigInt acc = 0;
  if (d == 2) {
    for (std::size_t e = 0; e < h.ring.size(); ++e) {
      const auto& a = pts[h.ring[e]];
      const auto& b = pts[h.ring[(e + 1) % h.ring.size()]];
      acc += a[0] * b[1] - a[1] * b[0];
    }
    return Rat(acc, 2 * scaled.scale * scaled.scale);
  }
  for (const auto& t : h.triangles) {
    const auto& a = pts[t[0]];
    const auto& b = pts[t[1]];
    const auto& c = pts[t[2]];
    acc += a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
  }
  return Rat(acc, 6 * scaled.scale * scaled.scale * scaled.scale);
}

HalfspaceRep to_halfspaces(const Polytope& p) {
  require_full(p, "polytope");
  const int d = p.ambient_dim();
  const auto scaled = detail::to_integer(p.vertices(), d);
  const auto h = detail::hull(scaled.points, d);
  HalfspaceRep rep;
  rep.ambient_dim = d;
  for (const auto& g : h.facets) {
    Facet f;
    f.normal.assign(g.normal.begin(), g.normal.begin() + d);
    f.offset = Rat(g.offset, scaled.scale);
    rep.facets.push_back(std::move(f));
  }
  return rep;
}

Rat support(const Polytope& p, std::span<const Rat> direction) {
  if (static_cast<int>(direction.size()) != p.ambient_dim()) throw Error(Errc::DimensionMismatch, "direction arity");
  if (std::all_of(direction.begin(), direction.end(), [](const Rat& r) { return r.is_zero(); }))
    throw Error(Errc::ZeroDirection, "support function needs a non-zero direction");
  std::optional<Rat> best;
  for (const auto& v : p.vertices()) {
    Rat s = dot(v, direction);
    if (!best || s > *best) best = std::move(s);
  }
  return *best;
}

Rat support(const Polytope& p, std::span<const BigInt> direction) {
  std::vector<Rat> dir(direction.begin(), direction.end());
  return support(p, dir);
}

bool contains(const HalfspaceRep& h, std::span<const Rat> x) {
  for (const auto& f : h.facets)
    if (dot(x, f.normal) > f.offset) return false;
  return true;
}

std::optional<Polytope> minkowski_difference(const Polytope& k, const Polytope& e) {
  require_same_dim(k, e);
  require_full(k, "K");
  require_full(e, "E");
  const int d = k.ambient_dim();
  HalfspaceRep h = to_halfspaces(k);
  for (auto& f : h.facets) f.offset -= support(e, f.normal);

  const std::size_t nf = h.facets.size();
  std::vector<Point> found;
  std::vector<const Facet*> rows(static_cast<std::size_t>(d));
  std::vector<Rat> rhs(static_cast<std::size_t>(d));
  auto consider = [&](std::initializer_list<std::size_t> pick) {
    std::size_t r = 0;
    for (std::size_t i : pick) {
      rows[r] = &h.facets[i];
      rhs[r] = h.facets[i].offset;
      ++r;
    }
    auto x = solve_small(rows, rhs, d);
    if (x && contains(h, *x)) found.push_back(std::move(*x));
  };
  for (std::size_t a = 0; a < nf; ++a)
    for (std::size_t b = a + 1; b < nf; ++b) {
      if (d == 2) {
        consider({a, b});
        continue;
      }
      for (std::size_t c = b + 1; c < nf; ++c) consider({a, b, c});
    }
  if (found.empty()) return std::nullopt;
  return convex_hull(found, d);
}

bool is_summand(const Polytope& e, const Polytope& k) {
  const auto diff = minkowski_difference(k, e);
  if (!diff) return false;
  return minkowski_sum(*diff, e) == k;
}

Rat relative_inradius(const Polytope& k, const Polytope& e) {
  require_same_dim(k, e);
  require_full(k, "K");
  require_full(e, "E");
  const int d = k.ambient_dim();
  const HalfspaceRep h = to_halfspaces(k);
  std::vector<LinearConstraint> cons;
  cons.reserve(h.facets.size() + 1);
  for (const auto& f : h.facets) {
    LinearConstraint c;
    c.coefficients.assign(f.normal.begin(), f.normal.end());
    c.coefficients.push_back(support(e, f.normal));
    c.bound = f.offset;
    cons.push_back(std::move(c));
  }
  LinearConstraint nonneg;
  nonneg.coefficients.assign(static_cast<std::size_t>(d) + 1, Rat(0));
  nonneg.coefficients.back() = -1;
  nonneg.bound = 0;
  cons.push_back(std::move(nonneg));
  std::vector<Rat> objective(static_cast<std::size_t>(d) + 1, Rat(0));
  objective.back() = 1;
  return exact_lp_max(objective, cons).value;
}

bool is_homothetic(const Polytope& k, const Polytope& e) {
  require_same_dim(k, e);
  const int d = k.ambient_dim();
  // Any coordinate direction along which E has positive width fixes r.
  for (int axis = 0; axis < d; ++axis) {
    std::vector<Rat> u(static_cast<std::size_t>(d), Rat(0));
    u[axis] = 1;
    std::vector<Rat> minus(static_cast<std::size_t>(d), Rat(0));
    minus[axis] = -1;
    const Rat we = support(e, u) + support(e, minus);
    if (we.is_zero()) continue;
    const Rat r = (support(k, u) + support(k, minus)) / we;
    const Polytope scaled = scale(e, r);
    std::vector<Rat> t(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) t[c] = k.vertices().front()[c] - scaled.vertices().front()[c];
    return translate(scaled, t) == k;
  }
  return k.vertices().size() == 1;  // E is a point
}

}  // namespace qf
