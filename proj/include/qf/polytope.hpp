#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qf/exactnum.hpp"

namespace qf {

using Point = std::vector<Rat>;

/**
 * Convex polytope in R^2 or R^3 given by its vertices.
 *
 * Construction always goes through the convex hull, so the vertex list is
 * irredundant and sorted lexicographically; two polytopes are equal exactly
 * when their vertex lists are. Points and segments are valid polytopes.
 */
class Polytope {
 public:
  int ambient_dim() const { return ambient_dim_; }
  int affine_dim() const { return affine_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  bool full_dimensional() const { return affine_dim_ == ambient_dim_; }

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  friend Polytope convex_hull(std::span<const Point> points, int ambient_dim);
  Polytope(int ambient_dim, int affine_dim, std::vector<Point> vertices)
      : ambient_dim_(ambient_dim), affine_dim_(affine_dim), vertices_(std::move(vertices)) {}

  int ambient_dim_;
  int affine_dim_;
  std::vector<Point> vertices_;
};

struct Facet {
  std::vector<BigInt> normal;  // primitive integer outward normal
  Rat offset;                  // <normal, x> <= offset
  friend bool operator==(const Facet&, const Facet&) = default;
};

struct HalfspaceRep {
  int ambient_dim = 0;
  std::vector<Facet> facets;
};

Polytope convex_hull(std::span<const Point> points, int ambient_dim);

inline int affine_dim(const Polytope& p) { return p.affine_dim(); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope scale(const Polytope& p, const Rat& factor);
Polytope translate(const Polytope& p, std::span<const Rat> offset);

/// Lebesgue measure in the ambient dimension; zero for flat polytopes.
Rat volume(const Polytope& p);

HalfspaceRep to_halfspaces(const Polytope& p);

Rat support(const Polytope& p, std::span<const Rat> direction);
Rat support(const Polytope& p, std::span<const BigInt> direction);

/// K erosion E = {x : x + E inside K}; nullopt when empty.
std::optional<Polytope> minkowski_difference(const Polytope& k, const Polytope& e);

bool is_summand(const Polytope& e, const Polytope& k);

/// Largest r such that some translate of rE fits in K, via exact LP.
Rat relative_inradius(const Polytope& k, const Polytope& e);

/// True when K = rE + t for some r >= 0 and translation t.
bool is_homothetic(const Polytope& k, const Polytope& e);

bool contains(const HalfspaceRep& h, std::span<const Rat> x);

}  // namespace qf
