#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bing/simplex.hpp"

namespace bing {

struct Vertex {
  int id = 0;
  std::string tag;
};

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite abstract simplicial complex.
///
/// Simplices are kept per dimension in sorted order, so every derived
/// quantity (boundary matrices, reports, JSON) is deterministic. Instances
/// are immutable once built.
class SimplicialComplex {
 public:
  using Coords = std::array<double, 3>;

  SimplicialComplex() = default;

  /// Builds the downward closure of `tops`. Vertices referenced by a simplex
  /// but missing from `vertices` are added with an empty tag.
  static SimplicialComplex from_tops(std::vector<Vertex> vertices, const std::vector<Simplex>& tops) {
    SimplicialComplex k;
    k.vertices_ = std::move(vertices);
    std::unordered_set<int> known;
    for (const auto& v : k.vertices_) known.insert(v.id);
    std::unordered_set<Simplex, SimplexHash> seen;
    std::vector<Simplex> all;
    for (const auto& t : tops) {
      if (t.empty()) continue;
      for (int id : t)
        if (known.insert(id).second) k.vertices_.push_back({id, {}});
      t.for_each_face([&](const Simplex& f) {
        if (seen.insert(f).second) all.push_back(f);
      });
    }
    for (const auto& v : k.vertices_) {
      Simplex s{v.id};
      if (seen.insert(s).second) all.push_back(s);
    }
    k.store(std::move(all));
    return k;
  }

  static SimplicialComplex from_tops(const std::vector<Simplex>& tops) { return from_tops({}, tops); }

  /// Stores exactly the given simplices, without closure or normalization.
  /// Only `validate` should be trusted on the result.
  static SimplicialComplex unchecked(std::vector<Vertex> vertices, std::vector<Simplex> simplices) {
    SimplicialComplex k;
    k.vertices_ = std::move(vertices);
    k.store(std::move(simplices));
    return k;
  }

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  const std::vector<Simplex>& simplices(int k) const {
    static const std::vector<Simplex> none;
    return (k < 0 || k > dim()) ? none : by_dim_[static_cast<std::size_t>(k)];
  }
  std::size_t count(int k) const { return simplices(k).size(); }

  std::size_t total_simplices() const {
    std::size_t n = 0;
    for (const auto& v : by_dim_) n += v.size();
    return n;
  }

  /// Index of `s` within simplices(s.dim()), or -1.
  int index_of(const Simplex& s) const {
    int k = s.dim();
    if (k < 0 || k > dim()) return -1;
    const auto& m = index_[static_cast<std::size_t>(k)];
    auto it = m.find(s);
    return it == m.end() ? -1 : it->second;
  }
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }

  const Vertex* find_vertex(int id) const {
    auto it = vertex_pos_.find(id);
    return it == vertex_pos_.end() ? nullptr : &vertices_[it->second];
  }

  /// Maximal simplices in (dimension, lexicographic) order.
  const std::vector<Simplex>& facets() const { return facets_; }

  /// Maximal simplices containing vertex `id`.
  const std::vector<int>& facets_at(int id) const {
    static const std::vector<int> none;
    auto it = vertex_facets_.find(id);
    return it == vertex_facets_.end() ? none : it->second;
  }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& s) { return s.dim() == dim(); });
  }

  // Optional decorations. Orientation and labels are aligned with
  // simplices(dim()).
  const std::optional<std::vector<int>>& orientation() const { return orientation_; }
  void set_orientation(std::optional<std::vector<int>> o) { orientation_ = std::move(o); }

  const std::optional<std::vector<std::string>>& top_labels() const { return labels_; }
  void set_top_labels(std::optional<std::vector<std::string>> l) { labels_ = std::move(l); }

  const std::map<int, Coords>& coords() const { return coords_; }
  void set_coords(std::map<int, Coords> c) { coords_ = std::move(c); }

  /// Subcomplex generated by the given simplices (which must belong here).
  SimplicialComplex subcomplex(const std::vector<Simplex>& gens) const {
    std::vector<Vertex> vs;
    std::set<int> ids;
    for (const auto& g : gens) ids.insert(g.begin(), g.end());
    for (int id : ids) vs.push_back(*find_vertex(id));
    return from_tops(std::move(vs), gens);
  }

 private:
  void store(std::vector<Simplex> all) {
    int maxd = -1;
    for (const auto& s : all) maxd = std::max(maxd, s.dim());
    by_dim_.assign(static_cast<std::size_t>(maxd + 1), {});
    for (auto& s : all) by_dim_[static_cast<std::size_t>(s.dim())].push_back(s);
    index_.assign(by_dim_.size(), {});
    for (std::size_t k = 0; k < by_dim_.size(); ++k) {
      auto& v = by_dim_[k];
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      index_[k].reserve(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) index_[k].emplace(v[i], static_cast<int>(i));
    }
    std::sort(vertices_.begin(), vertices_.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_pos_[vertices_[i].id] = i;
    compute_facets();
  }

  void compute_facets() {
    facets_.clear();
    vertex_facets_.clear();
    for (int k = dim(); k >= 0; --k) {
      const auto& level = by_dim_[static_cast<std::size_t>(k)];
      std::vector<char> covered(level.size(), 0);
      if (k < dim()) {
        for (const auto& up : by_dim_[static_cast<std::size_t>(k + 1)])
          for (std::size_t i = 0; i < up.size(); ++i) {
            auto it = index_[static_cast<std::size_t>(k)].find(up.facet(i));
            if (it != index_[static_cast<std::size_t>(k)].end()) covered[static_cast<std::size_t>(it->second)] = 1;
          }
      }
      for (std::size_t i = 0; i < level.size(); ++i)
        if (!covered[i]) facets_.push_back(level[i]);
    }
    std::sort(facets_.begin(), facets_.end());
    for (std::size_t i = 0; i < facets_.size(); ++i)
      for (int id : facets_[i]) vertex_facets_[id].push_back(static_cast<int>(i));
  }

  std::vector<Vertex> vertices_;
  std::unordered_map<int, std::size_t> vertex_pos_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
  std::vector<Simplex> facets_;
  std::unordered_map<int, std::vector<int>> vertex_facets_;
  std::optional<std::vector<int>> orientation_;
  std::optional<std::vector<std::string>> labels_;
  std::map<int, Coords> coords_;
};

/// For each k-simplex, the indices of the (k+1)-simplices containing it.
inline std::vector<std::vector<int>> cofaces(const SimplicialComplex& k, int dim) {
  std::vector<std::vector<int>> out(k.count(dim));
  const auto& up = k.simplices(dim + 1);
  for (std::size_t j = 0; j < up.size(); ++j)
    for (std::size_t i = 0; i < up[j].size(); ++i) {
      int f = k.index_of(up[j].facet(i));
      if (f >= 0) out[static_cast<std::size_t>(f)].push_back(static_cast<int>(j));
    }
  return out;
}

inline long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  for (int d = 0; d <= k.dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(k.count(d));
  return chi;
}

}  // namespace bing
