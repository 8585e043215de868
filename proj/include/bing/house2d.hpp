#pragma once

#include <memory>
#include <vector>

#include "bing/grid.hpp"
#include "bing/thicken.hpp"

namespace bing {

struct House2D {
  std::shared_ptr<const SimplicialComplex> x;       // the house
  std::shared_ptr<const SimplicialComplex> sphere;  // boundary of its neighborhood
  SimplicialMap f;                                  // sphere -> house
};

namespace detail {

// Unit squares of the house on a lattice with one unit of margin. Rooms are
// stacked in z; each tube runs through one room and opens into the other,
// and a wall ties each tube to the outer shell.
inline std::vector<std::pair<Point3, int>> house_squares() {
  std::vector<std::pair<Point3, int>> sq;
  auto plane = [&](int axis, int at, int lo0, int hi0, int lo1, int hi1, auto&& skip) {
    int a = (axis + 1) % 3, b = (axis + 2) % 3;
    for (int u = lo0; u < hi0; ++u)
      for (int w = lo1; w < hi1; ++w) {
        Point3 p{};
        p[static_cast<std::size_t>(axis)] = at;
        p[static_cast<std::size_t>(a)] = u;
        p[static_cast<std::size_t>(b)] = w;
        if (!skip(p)) sq.push_back({p, axis});
      }
  };
  auto none = [](const Point3&) { return false; };
  auto in = [](const Point3& p, int x0, int x1, int y0, int y1) { return p[0] >= x0 && p[0] < x1 && p[1] >= y0 && p[1] < y1; };
  auto hole1 = [&](const Point3& p) { return in(p, 2, 4, 2, 4); };
  auto hole2 = [&](const Point3& p) { return in(p, 6, 8, 2, 4); };
  plane(2, 0, 0, 10, 0, 6, hole1);
  plane(2, 4, 0, 10, 0, 6, [&](const Point3& p) { return hole1(p) || hole2(p); });
  plane(2, 8, 0, 10, 0, 6, hole2);
  // outer shell
  plane(0, 0, 0, 6, 0, 8, none);
  plane(0, 10, 0, 6, 0, 8, none);
  plane(1, 0, 0, 8, 0, 10, none);
  plane(1, 6, 0, 8, 0, 10, none);
  // tubes
  for (int at : {2, 4}) plane(0, at, 2, 4, 0, 4, none);
  for (int at : {2, 4}) plane(1, at, 0, 4, 2, 4, none);
  for (int at : {6, 8}) plane(0, at, 2, 4, 4, 8, none);
  for (int at : {2, 4}) plane(1, at, 4, 8, 6, 8, none);
  // walls
  plane(1, 3, 0, 4, 0, 2, none);
  plane(1, 3, 4, 8, 8, 10, none);
  for (auto& [p, axis] : sq)
    for (auto& c : p) ++c;
  return sq;
}

}  // namespace detail

inline House2D build_house2d() {
  Grid3 g{{12, 8, 10}};
  std::vector<Simplex> tris;
  for (const auto& [p, axis] : detail::house_squares()) {
    int i = (axis + 1) % 3, j = (axis + 2) % 3;
    if (i > j) std::swap(i, j);
    square_triangles(g, p, i, j, [&](const Simplex& s) { tris.push_back(s); });
  }
  auto x = SimplicialComplex::from_tops(tris);
  std::map<int, std::array<double, 3>> coords;
  for (const auto& v : x.vertices()) {
    auto p = g.point(v.id);
    coords[v.id] = {double(p[0] - 1), double(p[1] - 1), double(p[2] - 1)};
  }
  x.set_coords(coords);

  std::vector<Simplex> tets;
  for (const auto& c : box({0, 0, 0}, g.n)) kuhn_tets(g, c, [&](const Simplex& s) { tets.push_back(s); });
  auto ambient = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_tops(tets));

  House2D h;
  h.x = std::make_shared<const SimplicialComplex>(std::move(x));
  auto t = thicken(h.x, star_of(ambient));
  h.sphere = t.source;
  h.f = t.map;
  return h;
}

}  // namespace bing
