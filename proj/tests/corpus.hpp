#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bing/complex.hpp"

namespace bing::testing {

using Tri = std::vector<std::vector<int>>;

inline SimplicialComplex make(const Tri& tops) {
  std::vector<Simplex> ss;
  for (const auto& t : tops) ss.emplace_back(t.begin(), t.end());
  return SimplicialComplex::from_tops(ss);
}

inline SimplicialComplex simplex(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  return make({v});
}

/// Boundary of the n-simplex, an (n-1)-sphere.
inline SimplicialComplex sphere(int n) {
  Tri t;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int i = 0; i <= n; ++i)
      if (i != skip) f.push_back(i);
    t.push_back(f);
  }
  return make(t);
}

inline SimplicialComplex cycle(int n) {
  Tri t;
  for (int i = 0; i < n; ++i) t.push_back({i, (i + 1) % n});
  return make(t);
}

inline SimplicialComplex theta() { return make({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

inline SimplicialComplex torus7() {
  Tri t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return make(t);
}

inline SimplicialComplex rp2() {
  return make({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2}, {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
}

inline SimplicialComplex moebius() {
  return make({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
}

inline SimplicialComplex octahedron() {
  return make({{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

inline SimplicialComplex cone_over_square() { return make({{4, 0, 1}, {4, 1, 2}, {4, 2, 3}, {4, 3, 0}}); }

/// Two disjoint copies of the same tops, the second shifted by `shift`.
inline SimplicialComplex disjoint_pair(const SimplicialComplex& k, int shift) {
  std::vector<Simplex> ss = k.facets();
  for (const auto& s : k.facets()) {
    std::vector<int> v;
    for (int x : s) v.push_back(x + shift);
    ss.emplace_back(v.begin(), v.end());
  }
  return SimplicialComplex::from_tops(ss);
}

/// Suspension with cone points a and b.
inline SimplicialComplex suspension(const SimplicialComplex& k, int a, int b) {
  std::vector<Simplex> ss;
  for (const auto& s : k.facets()) {
    ss.push_back(s.with(a));
    ss.push_back(s.with(b));
  }
  return SimplicialComplex::from_tops(ss);
}

/// Dunce hat: the second barycentric subdivision of a triangle ABC with
/// its sides identified as a a a^-1 (AB, BC and AC all run forward).
inline SimplicialComplex dunce_hat() {
  using P = std::array<int, 3>;  // barycentric coordinates scaled by 36
  auto center = [](const std::vector<P>& ps) {
    P c{0, 0, 0};
    for (const auto& p : ps)
      for (int i = 0; i < 3; ++i) c[i] += p[i];
    for (int i = 0; i < 3; ++i) c[i] /= static_cast<int>(ps.size());
    return c;
  };
  auto subdivide = [&](const std::vector<std::array<P, 3>>& tris) {
    std::vector<std::array<P, 3>> out;
    for (auto t : tris) {
      std::sort(t.begin(), t.end());
      do {
        out.push_back({t[0], center({t[0], t[1]}), center({t[0], t[1], t[2]})});
      } while (std::next_permutation(t.begin(), t.end()));
    }
    return out;
  };
  auto tris = subdivide(subdivide({{P{36, 0, 0}, P{0, 36, 0}, P{0, 0, 36}}}));
  std::map<P, int> ids;
  auto id = [&](const P& p) {
    int t = -1;
    if (p[2] == 0) t = p[1];        // AB from A
    else if (p[0] == 0) t = p[2];   // BC from B
    else if (p[1] == 0) t = p[2];   // AC from A
    if (t >= 0) return t % 36;
    return ids.emplace(p, 100 + static_cast<int>(ids.size())).first->second;
  };
  Tri out;
  for (const auto& t : tris) out.push_back({id(t[0]), id(t[1]), id(t[2])});
  return make(out);
}

struct Named {
  std::string name;
  SimplicialComplex k;
};

inline std::vector<Named> corpus() {
  std::vector<Named> c;
  for (int n = 0; n <= 3; ++n) c.push_back({"simplex" + std::to_string(n), simplex(n)});
  for (int n = 1; n <= 4; ++n) c.push_back({"sphere" + std::to_string(n - 1), sphere(n)});
  c.push_back({"cycle4", cycle(4)});
  c.push_back({"cycle5", cycle(5)});
  c.push_back({"theta", theta()});
  c.push_back({"wedge_circles", make({{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}})});
  c.push_back({"torus", torus7()});
  c.push_back({"rp2", rp2()});
  c.push_back({"moebius", moebius()});
  c.push_back({"octahedron", octahedron()});
  c.push_back({"cone_square", cone_over_square()});
  c.push_back({"two_triangles", disjoint_pair(simplex(2), 10)});
  c.push_back({"two_spheres", disjoint_pair(sphere(3), 10)});
  c.push_back({"sphere_wedge_circle", make({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {3, 4}, {4, 5}, {5, 3}})});
  c.push_back({"susp_rp2", suspension(rp2(), 20, 21)});
  c.push_back({"dunce_hat", dunce_hat()});
  c.push_back({"triangle_skeleton", make({{0, 1}, {1, 2}, {0, 2}, {3}})});
  return c;
}

// ---------------------------------------------------------------------------
// GF(2) Betti numbers by dense elimination, faces enumerated from the tops
// independently of the library's closure.

inline std::vector<long> gf2_betti(const SimplicialComplex& k) {
  std::vector<std::set<std::vector<int>>> faces;
  for (const auto& t : k.facets()) {
    std::vector<int> v(t.begin(), t.end());
    const int n = static_cast<int>(v.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> f;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) f.push_back(v[static_cast<std::size_t>(i)]);
      if (faces.size() < f.size()) faces.resize(f.size());
      faces[f.size() - 1].insert(f);
    }
  }
  const std::size_t top = faces.size();
  std::vector<long> rank(top + 1, 0);
  for (std::size_t d = 1; d < top; ++d) {
    std::map<std::vector<int>, std::size_t> row;
    for (const auto& f : faces[d - 1]) row.emplace(f, row.size());
    std::vector<std::vector<bool>> m;
    for (const auto& s : faces[d]) {
      std::vector<bool> col(row.size(), false);
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto f = s;
        f.erase(f.begin() + static_cast<long>(i));
        col[row.at(f)] = true;
      }
      m.push_back(col);
    }
    long r = 0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      auto piv = std::find_if(m.begin() + r, m.end(), [c](const auto& x) { return x[c]; });
      if (piv == m.end()) continue;
      std::iter_swap(m.begin() + r, piv);
      for (auto it = m.begin(); it != m.end(); ++it)
        if (it != m.begin() + r && (*it)[c])
          for (std::size_t i = 0; i < row.size(); ++i) (*it)[i] = (*it)[i] != m[static_cast<std::size_t>(r)][i];
      ++r;
    }
    rank[d] = r;
  }
  std::vector<long> b(top);
  for (std::size_t d = 0; d < top; ++d) b[d] = static_cast<long>(faces[d].size()) - rank[d] - rank[d + 1];
  return b;
}

}  // namespace bing::testing
