#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "bing/complex.hpp"

namespace bing {

struct CollapseStep {
  Simplex free_face;
  Simplex coface;
};

struct CollapseSequence {
  std::vector<CollapseStep> steps;
  SimplicialComplex residue;
};

namespace detail {

/// Mutable face-incidence state used by the collapse routines.
class CollapseState {
 public:
  explicit CollapseState(const SimplicialComplex& k) : k_(k) {
    const int d = k.dim();
    up_.resize(static_cast<std::size_t>(d + 1));
    alive_.resize(static_cast<std::size_t>(d + 1));
    count_.resize(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
      up_[static_cast<std::size_t>(i)] = cofaces(k, i);
      alive_[static_cast<std::size_t>(i)].assign(k.count(i), 1);
      count_[static_cast<std::size_t>(i)].resize(k.count(i));
      for (std::size_t j = 0; j < k.count(i); ++j)
        count_[static_cast<std::size_t>(i)][j] = static_cast<int>(up_[static_cast<std::size_t>(i)][j].size());
    }
  }

  /// The unique alive coface if (dim, idx) is free, else -1.
  int free_partner(int dim, int idx) const {
    const auto ud = static_cast<std::size_t>(dim), ui = static_cast<std::size_t>(idx);
    if (!alive_[ud][ui] || count_[ud][ui] != 1 || dim == k_.dim()) return -1;
    for (int c : up_[ud][ui])
      if (alive_[ud + 1][static_cast<std::size_t>(c)])
        return count_[ud + 1][static_cast<std::size_t>(c)] == 0 ? c : -1;
    return -1;
  }

  /// Removes the pair and returns the faces whose status may have changed.
  std::vector<std::pair<int, int>> apply(int dim, int idx, int co) {
    std::vector<std::pair<int, int>> touched;
    remove(dim + 1, co, touched);
    remove(dim, idx, touched);
    return touched;
  }

  bool alive(int dim, int idx) const { return alive_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)]; }

  std::vector<Simplex> alive_simplices() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= k_.dim(); ++d)
      for (std::size_t j = 0; j < k_.count(d); ++j)
        if (alive_[static_cast<std::size_t>(d)][j]) out.push_back(k_.simplices(d)[j]);
    return out;
  }

  std::size_t alive_count() const {
    std::size_t n = 0;
    for (const auto& a : alive_) n += static_cast<std::size_t>(std::count(a.begin(), a.end(), 1));
    return n;
  }

  std::string key() const {
    std::string s;
    for (const auto& a : alive_) s.append(a.begin(), a.end());
    return s;
  }

  const SimplicialComplex& complex() const { return k_; }

 private:
  void remove(int dim, int idx, std::vector<std::pair<int, int>>& touched) {
    alive_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)] = 0;
    if (dim == 0) return;
    const auto& s = k_.simplices(dim)[static_cast<std::size_t>(idx)];
    for (std::size_t i = 0; i < s.size(); ++i) {
      int f = k_.index_of(s.facet(i));
      --count_[static_cast<std::size_t>(dim - 1)][static_cast<std::size_t>(f)];
      touched.push_back({dim - 1, f});
      // Faces of f may become free once f is maximal.
      if (dim >= 2) {
        const auto& fs = k_.simplices(dim - 1)[static_cast<std::size_t>(f)];
        for (std::size_t t = 0; t < fs.size(); ++t) touched.push_back({dim - 2, k_.index_of(fs.facet(t))});
      }
    }
  }

  const SimplicialComplex& k_;
  std::vector<std::vector<std::vector<int>>> up_;
  std::vector<std::vector<char>> alive_;
  std::vector<std::vector<int>> count_;
};

inline SimplicialComplex residue_of(const SimplicialComplex& k, const std::vector<Simplex>& alive) {
  std::vector<Vertex> vs;
  for (const auto& s : alive)
    if (s.size() == 1) vs.push_back(*k.find_vertex(s[0]));
  auto r = SimplicialComplex::from_tops(std::move(vs), alive);
  r.set_coords(k.coords());
  return r;
}

}  // namespace detail

/// Every simplex with exactly one proper coface, paired with that coface.
inline std::vector<CollapseStep> free_faces(const SimplicialComplex& k) {
  detail::CollapseState st(k);
  std::vector<CollapseStep> out;
  for (int d = k.dim() - 1; d >= 0; --d)
    for (std::size_t j = 0; j < k.count(d); ++j) {
      int c = st.free_partner(d, static_cast<int>(j));
      if (c >= 0) out.push_back({k.simplices(d)[j], k.simplices(d + 1)[static_cast<std::size_t>(c)]});
    }
  return out;
}

/// Greedy maximal collapse. Candidates are taken by descending dimension,
/// then by a seed-dependent order (seed 0: lexicographic). Simplices listed
/// in `keep` are never removed.
inline CollapseSequence greedy_collapse(const SimplicialComplex& k, std::uint64_t seed = 0,
                                        const std::unordered_set<Simplex, SimplexHash>& keep = {}) {
  detail::CollapseState st(k);
  std::vector<std::vector<std::uint64_t>> rank(static_cast<std::size_t>(k.dim() + 1));
  std::mt19937_64 rng(seed);
  for (int d = 0; d <= k.dim(); ++d) {
    auto& r = rank[static_cast<std::size_t>(d)];
    r.resize(k.count(d));
    std::iota(r.begin(), r.end(), 0);
    if (seed != 0) std::shuffle(r.begin(), r.end(), rng);
  }
  // (-dim, rank, dim, idx), smallest first.
  using Item = std::tuple<int, std::uint64_t, int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  auto push = [&](int d, int i) {
    if (d < k.dim()) queue.push({-d, rank[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)], d, i});
  };
  for (int d = 0; d < k.dim(); ++d)
    for (std::size_t j = 0; j < k.count(d); ++j) push(d, static_cast<int>(j));

  CollapseSequence seq;
  while (!queue.empty()) {
    auto [nd, rk, d, i] = queue.top();
    queue.pop();
    int c = st.free_partner(d, i);
    if (c < 0) continue;
    const auto& face = k.simplices(d)[static_cast<std::size_t>(i)];
    const auto& co = k.simplices(d + 1)[static_cast<std::size_t>(c)];
    if (!keep.empty() && (keep.count(face) || keep.count(co))) continue;
    seq.steps.push_back({face, co});
    for (auto [td, ti] : st.apply(d, i, c)) push(td, ti);
  }
  seq.residue = detail::residue_of(k, st.alive_simplices());
  return seq;
}

/// Replays `steps` on `k`, checking legality of each; returns the residue.
inline SimplicialComplex replay(const SimplicialComplex& k, const std::vector<CollapseStep>& steps) {
  detail::CollapseState st(k);
  for (std::size_t n = 0; n < steps.size(); ++n) {
    const auto& s = steps[n];
    int i = k.index_of(s.free_face);
    int c = k.index_of(s.coface);
    if (i < 0 || c < 0 || s.coface.dim() != s.free_face.dim() + 1 || !s.free_face.is_face_of(s.coface) ||
        st.free_partner(s.free_face.dim(), i) != c)
      throw TopologyError("illegal collapse step " + std::to_string(n));
    st.apply(s.free_face.dim(), i, c);
  }
  return detail::residue_of(k, st.alive_simplices());
}

enum class Collapsibility { Yes, No, Inconclusive };

struct CollapsibilityResult {
  Collapsibility verdict = Collapsibility::Inconclusive;
  std::vector<CollapseStep> certificate;  // set when verdict is Yes
  std::size_t nodes = 0;
};

/// Exhaustive depth-first search over collapse orders, with memoization on
/// visited states. "No" is reported only after the search space is
/// exhausted; "Yes" carries a certificate that reaches a single vertex.
inline CollapsibilityResult is_collapsible(const SimplicialComplex& k, std::size_t node_budget) {
  CollapsibilityResult res;
  if (k.empty()) return res;
  std::unordered_set<std::string> seen;
  std::vector<CollapseStep> path;
  bool exhausted_budget = false;

  std::function<bool(detail::CollapseState&)> dfs = [&](detail::CollapseState& st) -> bool {
    if (st.alive_count() == 1) return true;
    if (res.nodes >= node_budget) {
      exhausted_budget = true;
      return false;
    }
    ++res.nodes;
    if (!seen.insert(st.key()).second) return false;
    for (int d = k.dim() - 1; d >= 0; --d)
      for (std::size_t j = 0; j < k.count(d); ++j) {
        int c = st.free_partner(d, static_cast<int>(j));
        if (c < 0) continue;
        detail::CollapseState next = st;
        next.apply(d, static_cast<int>(j), c);
        path.push_back({k.simplices(d)[j], k.simplices(d + 1)[static_cast<std::size_t>(c)]});
        if (dfs(next)) return true;
        path.pop_back();
        if (exhausted_budget) return false;
      }
    return false;
  };

  detail::CollapseState st(k);
  if (dfs(st)) {
    res.verdict = Collapsibility::Yes;
    res.certificate = path;
  } else {
    res.verdict = exhausted_budget ? Collapsibility::Inconclusive : Collapsibility::No;
  }
  return res;
}

inline const char* to_string(Collapsibility c) {
  switch (c) {
    case Collapsibility::Yes: return "yes";
    case Collapsibility::No: return "no";
    default: return "inconclusive";
  }
}

}  // namespace bing
