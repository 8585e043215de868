#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "bing/simplex.hpp"

namespace bing {

using Point3 = std::array<int, 3>;
using CubeSet = std::set<Point3>;

/// Integer lattice box [0,n0] x [0,n1] x [0,n2]. Vertex ids increase with
/// every coordinate, so sorted simplices are monotone lattice chains.
struct Grid3 {
  Point3 n{};

  int id(const Point3& p) const { return p[0] + (n[0] + 1) * (p[1] + (n[1] + 1) * p[2]); }
  Point3 point(int id) const {
    Point3 p;
    p[0] = id % (n[0] + 1);
    id /= n[0] + 1;
    p[1] = id % (n[1] + 1);
    p[2] = id / (n[1] + 1);
    return p;
  }
  int vertex_count() const { return (n[0] + 1) * (n[1] + 1) * (n[2] + 1); }
  bool has_cube(const Point3& c) const {
    for (int a = 0; a < 3; ++a)
      if (c[a] < 0 || c[a] >= n[a]) return false;
    return true;
  }
};

inline Point3 shifted(Point3 p, int axis, int by = 1) {
  p[static_cast<std::size_t>(axis)] += by;
  return p;
}

/// The six Kuhn tetrahedra of the unit cube at `c`.
template <typename Fn>
void kuhn_tets(const Grid3& g, const Point3& c, Fn&& fn) {
  std::array<int, 3> perm{0, 1, 2};
  do {
    Point3 p = c;
    std::array<int, 4> ids{};
    ids[0] = g.id(p);
    for (int k = 0; k < 3; ++k) {
      p = shifted(p, perm[static_cast<std::size_t>(k)]);
      ids[static_cast<std::size_t>(k) + 1] = g.id(p);
    }
    fn(Simplex{ids[0], ids[1], ids[2], ids[3]});
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// The two triangles of the unit square at `p` spanned by axes i and j.
template <typename Fn>
void square_triangles(const Grid3& g, const Point3& p, int i, int j, Fn&& fn) {
  int a = g.id(p), d = g.id(shifted(shifted(p, i), j));
  fn(Simplex{a, g.id(shifted(p, i)), d});
  fn(Simplex{a, g.id(shifted(p, j)), d});
}

/// Unit squares separating a cube of `inside` from a cube outside it, as
/// (lower corner, normal axis).
inline std::vector<std::pair<Point3, int>> boundary_squares(const CubeSet& inside) {
  std::vector<std::pair<Point3, int>> out;
  for (const auto& c : inside)
    for (int a = 0; a < 3; ++a) {
      if (!inside.count(shifted(c, a, -1))) out.push_back({c, a});
      if (!inside.count(shifted(c, a))) out.push_back({shifted(c, a), a});
    }
  return out;
}

/// All cubes with lower corner in [lo, hi).
inline CubeSet box(const Point3& lo, const Point3& hi) {
  CubeSet s;
  for (int x = lo[0]; x < hi[0]; ++x)
    for (int y = lo[1]; y < hi[1]; ++y)
      for (int z = lo[2]; z < hi[2]; ++z) s.insert({x, y, z});
  return s;
}

inline CubeSet operator-(CubeSet a, const CubeSet& b) {
  for (const auto& c : b) a.erase(c);
  return a;
}

inline CubeSet operator|(CubeSet a, const CubeSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

inline CubeSet operator&(const CubeSet& a, const CubeSet& b) {
  CubeSet s;
  for (const auto& c : a)
    if (b.count(c)) s.insert(c);
  return s;
}

}  // namespace bing
