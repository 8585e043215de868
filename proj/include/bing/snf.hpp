#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bing {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SnfDecomposition {
  std::vector<BigInt> d;  // nonzero diagonal entries, d[i] | d[i+1]
  std::size_t rank = 0;
  std::optional<IntMatrix> U;  // rows x rows, unimodular
  std::optional<IntMatrix> V;  // cols x cols, unimodular
};

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

/// Smith normal form with minimal-absolute-value pivoting. Ties break by
/// row-major index order, so the result is deterministic. When
/// `with_transforms` is set, U * A * V equals the diagonal matrix of `d`.
inline SnfDecomposition smith_normal_form(const IntMatrix& a, bool with_transforms = false) {
  const std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  IntMatrix D = a;
  IntMatrix U = with_transforms ? identity_matrix(m) : IntMatrix{};
  IntMatrix V = with_transforms ? identity_matrix(n) : IntMatrix{};

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(D[i], D[j]);
    if (with_transforms) std::swap(U[i], U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : D) std::swap(row[i], row[j]);
    if (with_transforms)
      for (auto& row : V) std::swap(row[i], row[j]);
  };
  // row_i += q * row_j
  auto add_row = [&](std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < n; ++c)
      if (D[j][c] != 0) D[i][c] += q * D[j][c];
    if (with_transforms)
      for (std::size_t c = 0; c < m; ++c)
        if (U[j][c] != 0) U[i][c] += q * U[j][c];
  };
  // col_i += q * col_j
  auto add_col = [&](std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < m; ++r)
      if (D[r][j] != 0) D[r][i] += q * D[r][j];
    if (with_transforms)
      for (std::size_t r = 0; r < n; ++r)
        if (V[r][j] != 0) V[r][i] += q * V[r][j];
  };

  SnfDecomposition out;
  const std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    // Minimal nonzero |entry| in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D[i][j] != 0) {
          BigInt v = abs(D[i][j]);
          if (!best || v < best_abs) {
            best = {i, j};
            best_abs = v;
          }
        }
    if (!best) break;
    swap_rows(t, best->first);
    swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (D[i][t] != 0) {
          BigInt q = D[i][t] / D[t][t];
          add_row(i, t, -q);
          if (D[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (D[t][j] != 0) {
          BigInt q = D[t][j] / D[t][t];
          add_col(j, t, -q);
          if (D[t][j] != 0) clean = false;
        }
      if (!clean) {
        // A remainder smaller than the pivot survived; move the smallest
        // entry of the pivot row/column into place and repeat.
        std::size_t bi = t, bj = t;
        BigInt bv = abs(D[t][t]);
        for (std::size_t i = t + 1; i < m; ++i)
          if (D[i][t] != 0 && abs(D[i][t]) < bv) bv = abs(D[i][t]), bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[t][j] != 0 && abs(D[t][j]) < bv) bv = abs(D[t][j]), bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility: the pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D[t][t] < 0) {
      for (std::size_t c = 0; c < n; ++c) D[t][c] = -D[t][c];
      if (with_transforms)
        for (std::size_t c = 0; c < m; ++c) U[t][c] = -U[t][c];
    }
    out.d.push_back(D[t][t]);
  }
  out.rank = out.d.size();
  if (with_transforms) {
    out.U = std::move(U);
    out.V = std::move(V);
  }
  return out;
}

/// Sparse integer matrix stored by columns: (row, value) pairs.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> cols;

  IntMatrix to_dense() const {
    IntMatrix m(rows, std::vector<BigInt>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (auto [r, v] : cols[j]) m[static_cast<std::size_t>(r)][j] = v;
    return m;
  }
};

struct InvariantFactors {
  std::size_t rank = 0;
  std::vector<BigInt> nonunit;  // invariant factors greater than 1, ascending
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  ArithmeticOverflow() : std::overflow_error("integer overflow in sparse elimination") {}
};

namespace detail {

/// Unit-pivot Schur-complement elimination. Each step pivots on a +-1 entry
/// (a unimodular row and column operation that splits off an invariant
/// factor 1), preferring pivots of low Markowitz cost. With modulus p > 0
/// arithmetic is in Z/p and every nonzero entry is a unit.
class UnitEliminator {
 public:
  UnitEliminator(const SparseMatrix& a, std::int64_t modulus) : p_(modulus) {
    cols_.resize(a.cols.size());
    rows_.resize(a.rows);
    for (std::size_t j = 0; j < a.cols.size(); ++j)
      for (auto [r, v] : a.cols[j]) {
        std::int64_t x = reduce(v);
        if (x == 0) continue;
        cols_[j].push_back({r, x});
        rows_[static_cast<std::size_t>(r)].push_back({static_cast<int>(j), x});
      }
  }

  std::size_t run() {
    using Item = std::pair<std::size_t, int>;  // (nnz, column)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (std::size_t j = 0; j < cols_.size(); ++j)
      if (!cols_[j].empty()) queue.push({cols_[j].size(), static_cast<int>(j)});
    std::size_t eliminated = 0;
    std::vector<char> removed_col(cols_.size(), 0);
    while (!queue.empty()) {
      auto [nnz, c] = queue.top();
      queue.pop();
      auto& col = cols_[static_cast<std::size_t>(c)];
      if (removed_col[static_cast<std::size_t>(c)] || col.empty()) continue;
      if (nnz != col.size()) {
        queue.push({col.size(), c});
        continue;
      }
      // Unit entry whose row is shortest; ties by row index.
      int pr = -1;
      std::size_t best = 0;
      for (auto [r, v] : col) {
        if (!is_unit(v)) continue;
        std::size_t len = rows_[static_cast<std::size_t>(r)].size();
        if (pr < 0 || len < best || (len == best && r < pr)) pr = r, best = len;
      }
      if (pr < 0) continue;  // no unit here now; may reappear after updates
      pivot(pr, c, queue);
      removed_col[static_cast<std::size_t>(c)] = 1;
      ++eliminated;
    }
    return eliminated;
  }

  /// Remaining nonzero block after elimination, densified.
  IntMatrix residual() const {
    std::vector<int> rmap(rows_.size(), -1);
    std::vector<int> live_cols;
    int nr = 0;
    for (std::size_t j = 0; j < cols_.size(); ++j)
      if (!cols_[j].empty()) {
        live_cols.push_back(static_cast<int>(j));
        for (auto [r, v] : cols_[j])
          if (rmap[static_cast<std::size_t>(r)] < 0) rmap[static_cast<std::size_t>(r)] = nr++;
      }
    IntMatrix m(static_cast<std::size_t>(nr), std::vector<BigInt>(live_cols.size(), 0));
    for (std::size_t k = 0; k < live_cols.size(); ++k)
      for (auto [r, v] : cols_[static_cast<std::size_t>(live_cols[k])])
        m[static_cast<std::size_t>(rmap[static_cast<std::size_t>(r)])][k] = v;
    return m;
  }

 private:
  using Entry = std::pair<int, std::int64_t>;

  std::int64_t reduce(std::int64_t v) const {
    if (p_ == 0) return v;
    v %= p_;
    return v < 0 ? v + p_ : v;
  }
  bool is_unit(std::int64_t v) const { return p_ == 0 ? (v == 1 || v == -1) : v != 0; }

  static std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr) {
      std::int64_t q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return t < 0 ? t + p : t;
  }

  static std::int64_t get(const std::vector<Entry>& v, int key) {
    for (auto [k, x] : v)
      if (k == key) return x;
    return 0;
  }
  static void set(std::vector<Entry>& v, int key, std::int64_t x) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i].first == key) {
        if (x == 0) {
          v[i] = v.back();
          v.pop_back();
        } else {
          v[i].second = x;
        }
        return;
      }
    if (x != 0) v.push_back({key, x});
  }

  template <typename Queue>
  void pivot(int r, int c, Queue& queue) {
    auto col = cols_[static_cast<std::size_t>(c)];  // copies: both get rewritten
    auto row = rows_[static_cast<std::size_t>(r)];
    const std::int64_t a = get(col, r);
    // a_ij -= a_ic * a_rj / a
    const std::int64_t inv = p_ == 0 ? a : inverse_mod(a, p_);  // a = +-1 is its own inverse over Z
    for (auto [i, aic] : col) {
      if (i == r) continue;
      std::int64_t f;
      if (p_ == 0) {
        if (__builtin_mul_overflow(aic, inv, &f)) throw ArithmeticOverflow();
      } else {
        f = static_cast<std::int64_t>((static_cast<__int128>(aic) * inv) % p_);
      }
      for (auto [j, arj] : row) {
        if (j == c) continue;
        std::int64_t cur = get(cols_[static_cast<std::size_t>(j)], i), delta, next;
        if (p_ == 0) {
          if (__builtin_mul_overflow(f, arj, &delta) || __builtin_sub_overflow(cur, delta, &next)) throw ArithmeticOverflow();
        } else {
          next = reduce(cur - static_cast<std::int64_t>((static_cast<__int128>(f) * arj) % p_));
        }
        set(cols_[static_cast<std::size_t>(j)], i, next);
        set(rows_[static_cast<std::size_t>(i)], j, next);
      }
    }
    // Drop pivot row and column.
    for (auto [i, v] : col) set(rows_[static_cast<std::size_t>(i)], c, 0);
    for (auto [j, v] : row) {
      set(cols_[static_cast<std::size_t>(j)], r, 0);
      if (j != c) queue.push({cols_[static_cast<std::size_t>(j)].size(), j});
    }
    cols_[static_cast<std::size_t>(c)].clear();
    rows_[static_cast<std::size_t>(r)].clear();
  }

  std::int64_t p_;
  std::vector<std::vector<Entry>> cols_;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace detail

/// Rank and non-unit invariant factors of a sparse integer matrix. With
/// modulus p > 0, the rank over Z/p (p prime) and no factors.
inline InvariantFactors invariant_factors(const SparseMatrix& a, std::int64_t modulus = 0) {
  InvariantFactors out;
  try {
    detail::UnitEliminator e(a, modulus);
    out.rank = e.run();
    IntMatrix rest = e.residual();
    if (!rest.empty()) {
      if (modulus != 0) throw std::logic_error("residual block over a field");
      auto snf = smith_normal_form(rest);
      for (const auto& d : snf.d) {
        ++out.rank;
        if (d != 1) out.nonunit.push_back(d);
      }
    }
  } catch (const ArithmeticOverflow&) {
    if (modulus != 0) throw;
    auto snf = smith_normal_form(a.to_dense());
    out = {};
    out.rank = snf.rank;
    for (const auto& d : snf.d)
      if (d != 1) out.nonunit.push_back(d);
  }
  return out;
}

}  // namespace bing
