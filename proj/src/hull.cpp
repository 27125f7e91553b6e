#include "hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

namespace qf::detail {

namespace {

IPoint sub(const IPoint& a, const IPoint& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

IPoint cross(const IPoint& a, const IPoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

BigInt dot(const IPoint& a, const IPoint& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const IPoint& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

IPoint primitive(IPoint v) {
  BigInt g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), BigInt(abs(c)).get_mpz_t());
  if (g > 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return v;
}

// z-component of (a - o) x (b - o).
BigInt cross2(const IPoint& o, const IPoint& a, const IPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool lex_less(const IPoint& a, const IPoint& b) {
  for (int c = 0; c < 3; ++c) {
    const int s = cmp(a[c], b[c]);
    if (s != 0) return s < 0;
  }
  return false;
}

// Monotone chain over 2D coordinates (ax0, ax1) of the given points.
// Returns a ccw cycle without collinear points; size 1 or 2 when degenerate.
std::vector<std::size_t> chain2d(const std::vector<IPoint>& pts, std::vector<std::size_t> idx, int ax0, int ax1) {
  auto proj = [&](std::size_t i) { return IPoint{pts[i][ax0], pts[i][ax1], 0}; };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lex_less(proj(a), proj(b)); });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return proj(a) == proj(b); }),
            idx.end());
  if (idx.size() <= 2) return idx;
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && cross2(proj(h[k - 2]), proj(h[k - 1]), proj(i)) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lo = k + 1; t-- > 0;) {
    const std::size_t i = idx[t];
    while (k >= lo && cross2(proj(h[k - 2]), proj(h[k - 1]), proj(i)) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

struct Face {
  std::array<std::size_t, 3> v;
  IPoint normal;
  BigInt offset;
};

Face make_face(const std::vector<IPoint>& pts, std::size_t a, std::size_t b, std::size_t c) {
  IPoint n = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
  BigInt off = dot(n, pts[a]);
  return {{a, b, c}, std::move(n), std::move(off)};
}

HullResult hull3d(const std::vector<IPoint>& pts, const std::vector<std::size_t>& idx) {
  HullResult out;
  const std::size_t p0 = idx[0];
  std::optional<std::size_t> p1, p2, p3;
  for (std::size_t i : idx)
    if (pts[i] != pts[p0]) { p1 = i; break; }
  if (!p1) {
    out.affine_dim = 0;
    out.vertices = {p0};
    return out;
  }
  IPoint nrm;
  for (std::size_t i : idx) {
    nrm = cross(sub(pts[*p1], pts[p0]), sub(pts[i], pts[p0]));
    if (!is_zero(nrm)) { p2 = i; break; }
  }
  if (!p2) {
    out.affine_dim = 1;
    auto [lo, hi] = std::minmax_element(idx.begin(), idx.end(),
                                        [&](std::size_t a, std::size_t b) { return lex_less(pts[a], pts[b]); });
    out.vertices = {*lo, *hi};
    return out;
  }
  for (std::size_t i : idx)
    if (dot(nrm, sub(pts[i], pts[p0])) != 0) { p3 = i; break; }
  if (!p3) {
    out.affine_dim = 2;
    const int drop = nrm[0] != 0 ? 0 : (nrm[1] != 0 ? 1 : 2);
    const int a0 = drop == 0 ? 1 : 0;
    const int a1 = drop == 2 ? 1 : 2;
    out.vertices = chain2d(pts, idx, a0, a1);
    return out;
  }

  out.affine_dim = 3;
  std::vector<Face> faces;
  const std::array<std::size_t, 4> tet{p0, *p1, *p2, *p3};
  const std::array<std::array<int, 4>, 4> layout{{{0, 1, 2, 3}, {0, 3, 1, 2}, {1, 3, 2, 0}, {0, 2, 3, 1}}};
  for (const auto& l : layout) {
    Face f = make_face(pts, tet[l[0]], tet[l[1]], tet[l[2]]);
    if (dot(f.normal, pts[tet[l[3]]]) > f.offset) f = make_face(pts, tet[l[0]], tet[l[2]], tet[l[1]]);
    faces.push_back(std::move(f));
  }

  std::vector<bool> visible;
  for (std::size_t i : idx) {
    if (i == p0 || i == *p1 || i == *p2 || i == *p3) continue;
    visible.assign(faces.size(), false);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (dot(faces[f].normal, pts[i]) > faces[f].offset) {
        visible[f] = true;
        any = true;
      }
    }
    if (!any) continue;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      const auto& v = faces[f].v;
      for (int e = 0; e < 3; ++e) edges.emplace(v[e], v[(e + 1) % 3]);
    }
    std::vector<Face> next;
    next.reserve(faces.size() + 4);
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (!visible[f]) next.push_back(std::move(faces[f]));
    for (const auto& [a, b] : edges)
      if (!edges.contains({b, a})) next.push_back(make_face(pts, a, b, i));
    faces = std::move(next);
  }

  // Merge coplanar triangles into facets.
  std::map<std::pair<std::array<std::string, 3>, std::string>, std::size_t> seen;
  for (const auto& f : faces) {
    out.triangles.push_back(f.v);
    IPoint n = primitive(f.normal);
    BigInt off = dot(n, pts[f.v[0]]);
    auto key = std::make_pair(std::array<std::string, 3>{n[0].get_str(), n[1].get_str(), n[2].get_str()},
                              off.get_str());
    if (seen.emplace(std::move(key), out.facets.size()).second) out.facets.push_back({n, off});
  }

  std::set<std::size_t> used;
  for (const auto& t : out.triangles) used.insert(t.begin(), t.end());
  for (std::size_t i : used) {
    std::vector<const IPoint*> tight;
    for (const auto& g : out.facets)
      if (dot(g.normal, pts[i]) == g.offset) tight.push_back(&g.normal);
    bool spans = false;
    for (std::size_t a = 0; a < tight.size() && !spans; ++a)
      for (std::size_t b = a + 1; b < tight.size() && !spans; ++b) {
        const IPoint c = cross(*tight[a], *tight[b]);
        if (is_zero(c)) continue;
        for (std::size_t d = b + 1; d < tight.size() && !spans; ++d)
          if (dot(c, *tight[d]) != 0) spans = true;
      }
    if (spans) out.vertices.push_back(i);
  }
  return out;
}

}  // namespace

ScaledPoints to_integer(std::span<const Point> points, int dim) {
  ScaledPoints out;
  out.scale = 1;
  for (const auto& p : points)
    for (int c = 0; c < dim; ++c) mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), p[c].den().get_mpz_t());
  out.points.reserve(points.size());
  for (const auto& p : points) {
    IPoint ip{0, 0, 0};
    for (int c = 0; c < dim; ++c) ip[c] = p[c].num() * (out.scale / p[c].den());
    out.points.push_back(std::move(ip));
  }
  return out;
}

HullResult hull(const std::vector<IPoint>& points, int dim) {
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  if (dim == 3) return hull3d(points, idx);

  HullResult out;
  std::vector<std::size_t> ring = chain2d(points, idx, 0, 1);
  out.affine_dim = ring.size() >= 3 ? 2 : static_cast<int>(ring.size()) - 1;
  out.vertices = ring;
  if (out.affine_dim == 2) {
    for (std::size_t e = 0; e < ring.size(); ++e) {
      const IPoint& a = points[ring[e]];
      const IPoint& b = points[ring[(e + 1) % ring.size()]];
      IPoint n = primitive({b[1] - a[1], a[0] - b[0], 0});
      BigInt off = dot(n, a);
      out.facets.push_back({std::move(n), std::move(off)});
    }
    out.ring = std::move(ring);
  }
  return out;
}

}  // namespace qf::detail
