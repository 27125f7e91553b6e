#pragma once

#include <cstdint>
#include <random>

#include "qf/polytope.hpp"

namespace qf {

using Rng = std::mt19937_64;

/// Independent, reproducible generator seed for substream `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Hull of vertex_count integer points uniform in [0, coord_bound]^dim.
/// With require_full the draw is repeated until the hull is full-dimensional
/// (bounded attempts, then DegenerateGeneration).
Polytope random_polytope(int dim, int vertex_count, int coord_bound, std::uint64_t seed, bool require_full = false);
Polytope random_polytope(int dim, int vertex_count, int coord_bound, Rng& rng, bool require_full = false);

/// Random lattice polytope inside an affine flat of dimension flat_dim
/// (0 = point, 1 = segment, ...). The hull may come out lower-dimensional.
Polytope random_flat_polytope(int dim, int flat_dim, int vertex_count, int coord_bound, Rng& rng);

}  // namespace qf
