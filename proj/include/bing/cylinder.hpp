#pragma once

#include <algorithm>
#include <memory>
#include <unordered_set>

#include "bing/collapse.hpp"
#include "bing/complex_ops.hpp"
#include "bing/map.hpp"

namespace bing {

/// Triangulated mapping cylinder (source x [0,1] disjoint-union target) /
/// (x,1) ~ f(x). Source vertices are shifted by `offset` so the two ends
/// never share ids; target vertices keep their ids.
struct MappingCylinder {
  std::shared_ptr<const SimplicialComplex> total;
  SimplicialMap base_inclusion;  // target -> total
  SimplicialMap top_inclusion;   // source -> total
  SimplicialMap projection;      // total -> target
  int offset = 0;
  CollapseSequence collapse_to_base;
};

/// Each ordered source simplex [v0 < ... < vk] contributes the cells
/// [v0 .. vi, f(vi) .. f(vk)], i = 0..k, with target vertices last.
inline MappingCylinder mapping_cylinder(const SimplicialMap& f, std::uint64_t seed = 0) {
  if (auto bad = simpliciality_violation(f)) throw TopologyError("map is not simplicial");
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  int offset = 0;
  for (const auto& v : tgt.vertices()) offset = std::max(offset, v.id + 1);

  std::vector<Vertex> vs;
  for (const auto& v : tgt.vertices()) vs.push_back({v.id, "base"});
  for (const auto& v : src.vertices()) vs.push_back({v.id + offset, "top"});

  std::vector<Simplex> tops;
  for (const auto& s : src.facets())
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> ids;
      for (std::size_t a = 0; a <= i; ++a) ids.push_back(s[a] + offset);
      for (std::size_t a = i; a < s.size(); ++a) ids.push_back(f(s[a]));
      tops.push_back(Simplex(ids.begin(), ids.end()));
    }
  for (const auto& t : tgt.facets()) tops.push_back(t);

  MappingCylinder c;
  c.offset = offset;
  auto total = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_tops(std::move(vs), tops));
  c.total = total;
  c.base_inclusion = {f.target, total, {}};
  c.top_inclusion = {f.source, total, {}};
  c.projection = {total, f.target, {}};
  for (const auto& v : tgt.vertices()) {
    c.base_inclusion.vertex_map[v.id] = v.id;
    c.projection.vertex_map[v.id] = v.id;
  }
  for (const auto& v : src.vertices()) {
    c.top_inclusion.vertex_map[v.id] = v.id + offset;
    c.projection.vertex_map[v.id + offset] = f(v.id);
  }

  std::unordered_set<Simplex, SimplexHash> keep;
  for (int d = 0; d <= tgt.dim(); ++d)
    for (const auto& s : tgt.simplices(d)) keep.insert(s);
  c.collapse_to_base = greedy_collapse(*total, seed, keep);
  return c;
}

/// True when the collapse certificate replays legally and stops exactly at
/// the base copy of the target.
inline bool collapses_to_base(const MappingCylinder& c) {
  auto residue = replay(*c.total, c.collapse_to_base.steps);
  const auto& base = *c.base_inclusion.source;
  if (residue.total_simplices() != base.total_simplices()) return false;
  for (int d = 0; d <= base.dim(); ++d)
    for (const auto& s : base.simplices(d))
      if (!residue.contains(s)) return false;
  return true;
}

/// The top copy of the source inside the cylinder, which stands in for the
/// boundary of the regular neighborhood.
inline SimplicialComplex boundary_of_cylinder(const MappingCylinder& c) {
  const auto& src = *c.top_inclusion.source;
  auto verdict = is_closed_pseudomanifold(src, src.dim());
  if (!verdict.ok) throw TopologyError("cylinder source is not closed: " + verdict.reason);
  std::vector<Vertex> vs;
  for (const auto& v : src.vertices()) vs.push_back({v.id + c.offset, "boundary"});
  std::vector<Simplex> tops;
  for (const auto& s : src.facets()) tops.push_back(c.top_inclusion.image(s));
  return SimplicialComplex::from_tops(std::move(vs), tops);
}

}  // namespace bing
