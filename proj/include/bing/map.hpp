#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "bing/complex.hpp"

namespace bing {

/// Vertex-level map between complexes.
struct SimplicialMap {
  std::shared_ptr<const SimplicialComplex> source;
  std::shared_ptr<const SimplicialComplex> target;
  std::map<int, int> vertex_map;

  int operator()(int v) const {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) throw TopologyError("map undefined on vertex " + std::to_string(v));
    return it->second;
  }

  /// Image vertex set of a source simplex (possibly lower-dimensional).
  Simplex image(const Simplex& s) const {
    std::vector<int> ids;
    for (int v : s) ids.push_back((*this)(v));
    return Simplex(ids.begin(), ids.end());
  }
};

/// A source facet whose image is not a simplex of the target, if any.
inline std::optional<Simplex> simpliciality_violation(const SimplicialMap& f) {
  for (const auto& s : f.source->facets()) {
    for (int v : s)
      if (!f.vertex_map.count(v)) return s;
    if (!f.target->contains(f.image(s))) return s;
  }
  return std::nullopt;
}

/// A source simplex on which f is not injective, if any.
inline std::optional<Simplex> degeneracy(const SimplicialMap& f) {
  for (const auto& s : f.source->facets())
    if (f.image(s).size() != s.size()) return s;
  return std::nullopt;
}

inline bool is_nondegenerate(const SimplicialMap& f) { return !degeneracy(f).has_value(); }

}  // namespace bing
