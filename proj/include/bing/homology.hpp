#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bing/complex.hpp"
#include "bing/snf.hpp"

namespace bing {

enum class Coefficients { Z, Z2 };

/// Boundary matrix of degree k: rows are (k-1)-simplices, columns are
/// k-simplices, both in the complex's sorted order. Simplices are oriented
/// by increasing vertex id.
inline SparseMatrix boundary_matrix(const SimplicialComplex& k, int degree) {
  SparseMatrix m;
  m.rows = k.count(degree - 1);
  const auto& cells = k.simplices(degree);
  m.cols.resize(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j)
    for (std::size_t i = 0; i < cells[j].size(); ++i) {
      int r = k.index_of(cells[j].facet(i));
      if (r < 0) throw TopologyError("boundary face missing; complex is not closed under faces");
      m.cols[j].push_back({r, facet_sign(i)});
    }
  return m;
}

/// Boundary matrices d_1 .. d_dim (index 0 holds d_1).
inline std::vector<SparseMatrix> boundary_matrices(const SimplicialComplex& k) {
  std::vector<SparseMatrix> out;
  for (int d = 1; d <= k.dim(); ++d) out.push_back(boundary_matrix(k, d));
  return out;
}

/// Product a * b of sparse matrices, as a dense-free check of d d = 0.
inline bool composes_to_zero(const SparseMatrix& lower, const SparseMatrix& upper) {
  for (const auto& col : upper.cols) {
    std::vector<std::pair<int, std::int64_t>> acc;
    for (auto [mid, v] : col)
      for (auto [r, w] : lower.cols[static_cast<std::size_t>(mid)]) {
        bool found = false;
        for (auto& [rr, x] : acc)
          if (rr == r) {
            x += v * w;
            found = true;
          }
        if (!found) acc.push_back({r, v * w});
      }
    for (auto [r, x] : acc)
      if (x != 0) return false;
  }
  return true;
}

struct HomologyProfile {
  Coefficients coefficients = Coefficients::Z;
  std::vector<long> betti;
  std::vector<std::vector<std::string>> torsion;  // per degree, decimal strings

  bool has_torsion() const {
    for (const auto& t : torsion)
      if (!t.empty()) return true;
    return false;
  }
  /// Reduced homology vanishes (over the chosen coefficients).
  bool is_acyclic() const {
    if (betti.empty() || betti[0] != 1 || has_torsion()) return false;
    for (std::size_t i = 1; i < betti.size(); ++i)
      if (betti[i] != 0) return false;
    return true;
  }
};

inline HomologyProfile homology(const SimplicialComplex& k, Coefficients coeffs = Coefficients::Z) {
  HomologyProfile h;
  h.coefficients = coeffs;
  const int top = k.dim();
  if (top < 0) return h;
  const std::int64_t p = coeffs == Coefficients::Z2 ? 2 : 0;
  // rank[d] = rank of d_d, d = 1..top; factors of d_{d+1} give torsion in degree d.
  std::vector<InvariantFactors> inv(static_cast<std::size_t>(top + 2));
  for (int d = 1; d <= top; ++d) inv[static_cast<std::size_t>(d)] = invariant_factors(boundary_matrix(k, d), p);
  h.betti.resize(static_cast<std::size_t>(top + 1));
  h.torsion.resize(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) {
    long r_in = d >= 1 ? static_cast<long>(inv[static_cast<std::size_t>(d)].rank) : 0;
    long r_out = d + 1 <= top ? static_cast<long>(inv[static_cast<std::size_t>(d + 1)].rank) : 0;
    h.betti[static_cast<std::size_t>(d)] = static_cast<long>(k.count(d)) - r_in - r_out;
    if (d + 1 <= top)
      for (const auto& f : inv[static_cast<std::size_t>(d + 1)].nonunit)
        h.torsion[static_cast<std::size_t>(d)].push_back(f.str());
  }
  return h;
}

/// Faces of codimension one on which the Z/2 boundary of a top-cell chain
/// is nonzero. `weights` is aligned with simplices(dim()).
inline std::vector<Simplex> z2_boundary(const SimplicialComplex& k, const std::vector<long>& weights) {
  const int d = k.dim();
  const auto& tops = k.simplices(d);
  if (weights.size() != tops.size()) throw std::invalid_argument("chain length does not match top cells");
  std::vector<long> acc(k.count(d - 1), 0);
  for (std::size_t j = 0; j < tops.size(); ++j) {
    if (weights[j] % 2 == 0) continue;
    for (std::size_t i = 0; i < tops[j].size(); ++i) acc[static_cast<std::size_t>(k.index_of(tops[j].facet(i)))] ^= 1;
  }
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i]) out.push_back(k.simplices(d - 1)[i]);
  return out;
}

struct FundamentalCycle {
  std::optional<std::vector<long>> chain;  // all-ones top chain when it is a Z/2 cycle
  std::optional<Simplex> witness;          // a face where the boundary survives
};

inline FundamentalCycle fundamental_cycle(const SimplicialComplex& k) {
  FundamentalCycle fc;
  std::vector<long> ones(k.count(k.dim()), 1);
  auto b = z2_boundary(k, ones);
  if (b.empty())
    fc.chain = std::move(ones);
  else
    fc.witness = b.front();
  return fc;
}

}  // namespace bing
