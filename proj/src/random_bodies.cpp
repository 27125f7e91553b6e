#include "qf/random_bodies.hpp"

#include <string>

namespace qf {

namespace {

constexpr int kMaxAttempts = 1000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_args(int dim, int vertex_count, int coord_bound) {
  if (dim != 2 && dim != 3) throw Error(Errc::InvalidArgument, "random bodies need dim 2 or 3");
  if (vertex_count < 1) throw Error(Errc::InvalidArgument, "vertex_count must be positive");
  if (coord_bound < 1) throw Error(Errc::InvalidArgument, "coord_bound must be >= 1");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) ^ index); }

Polytope random_polytope(int dim, int vertex_count, int coord_bound, Rng& rng, bool require_full) {
  check_args(dim, vertex_count, coord_bound);
  std::uniform_int_distribution<long> coord(0, coord_bound);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Point> pts(static_cast<std::size_t>(vertex_count), Point(static_cast<std::size_t>(dim)));
    for (auto& p : pts)
      for (auto& c : p) c = Rat(coord(rng));
    Polytope poly = convex_hull(pts, dim);
    if (!require_full || poly.full_dimensional()) return poly;
  }
  throw Error(Errc::DegenerateGeneration,
              "no full-dimensional hull after " + std::to_string(kMaxAttempts) + " draws");
}

Polytope random_polytope(int dim, int vertex_count, int coord_bound, std::uint64_t seed, bool require_full) {
  Rng rng(seed);
  return random_polytope(dim, vertex_count, coord_bound, rng, require_full);
}

Polytope random_flat_polytope(int dim, int flat_dim, int vertex_count, int coord_bound, Rng& rng) {
  check_args(dim, vertex_count, coord_bound);
  if (flat_dim < 0 || flat_dim > dim) throw Error(Errc::InvalidArgument, "flat dimension out of range");
  std::uniform_int_distribution<long> coord(0, coord_bound);
  std::uniform_int_distribution<long> dir(-3, 3);
  std::uniform_int_distribution<long> step(0, 3);
  Point base(static_cast<std::size_t>(dim));
  for (auto& c : base) c = Rat(coord(rng));
  std::vector<Point> basis;
  while (static_cast<int>(basis.size()) < flat_dim) {
    Point u(static_cast<std::size_t>(dim));
    bool nonzero = false;
    for (auto& c : u) {
      c = Rat(dir(rng));
      nonzero = nonzero || !c.is_zero();
    }
    if (nonzero) basis.push_back(std::move(u));
  }
  std::vector<Point> pts;
  pts.push_back(base);
  for (int v = 1; v < vertex_count && flat_dim > 0; ++v) {
    Point p = base;
    for (const auto& u : basis) {
      const Rat s(step(rng));
      for (int c = 0; c < dim; ++c) p[c] += s * u[c];
    }
    pts.push_back(std::move(p));
  }
  return convex_hull(pts, dim);
}

}  // namespace qf
