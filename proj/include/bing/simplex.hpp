#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace bing {

/// A simplex as a sorted set of vertex ids, stored inline.
///
/// Every complex handled here has dimension at most 7 (products of a
/// 3-complex with an interval give 4-simplices, barycentric subdivisions of
/// those stay within the same bound), so the vertex list lives in a fixed
/// array and simplices never allocate.
class Simplex {
 public:
  static constexpr std::size_t kMaxVertices = 8;

  Simplex() = default;

  Simplex(std::initializer_list<int> ids) { assign(ids.begin(), ids.end()); }

  explicit Simplex(std::span<const int> ids) { assign(ids.begin(), ids.end()); }

  template <typename It>
  Simplex(It first, It last) {
    assign(first, last);
  }

  /// Builds a simplex without sorting or deduplicating. Used by validation
  /// code that must see malformed input as it was written.
  static Simplex raw(std::span<const int> ids) {
    Simplex s;
    if (ids.size() > kMaxVertices) throw std::length_error("simplex too large");
    s.n_ = static_cast<std::uint8_t>(ids.size());
    std::copy(ids.begin(), ids.end(), s.v_.begin());
    return s;
  }

  std::size_t size() const { return n_; }
  int dim() const { return static_cast<int>(n_) - 1; }
  bool empty() const { return n_ == 0; }

  int operator[](std::size_t i) const { return v_[i]; }
  const int* begin() const { return v_.data(); }
  const int* end() const { return v_.data() + n_; }

  bool contains(int id) const { return std::binary_search(begin(), end(), id); }

  /// Position of `id` in the sorted vertex list, or -1.
  int position(int id) const {
    auto it = std::lower_bound(begin(), end(), id);
    return (it != end() && *it == id) ? static_cast<int>(it - begin()) : -1;
  }

  /// The codimension-one face opposite the vertex at position `i`.
  Simplex facet(std::size_t i) const {
    Simplex f;
    for (std::size_t k = 0; k < n_; ++k)
      if (k != i) f.v_[f.n_++] = v_[k];
    return f;
  }

  Simplex without(int id) const {
    int p = position(id);
    return p < 0 ? *this : facet(static_cast<std::size_t>(p));
  }

  Simplex with(int id) const {
    if (contains(id)) return *this;
    std::vector<int> ids(begin(), end());
    ids.push_back(id);
    return Simplex(ids.begin(), ids.end());
  }

  /// True if every vertex of this simplex is a vertex of `other`.
  bool is_face_of(const Simplex& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }

  /// Calls `fn` on every nonempty face, including the simplex itself.
  template <typename Fn>
  void for_each_face(Fn&& fn) const {
    const unsigned full = (1u << n_);
    for (unsigned mask = 1; mask < full; ++mask) {
      Simplex f;
      for (std::size_t k = 0; k < n_; ++k)
        if (mask & (1u << k)) f.v_[f.n_++] = v_[k];
      fn(f);
    }
  }

  bool has_duplicates() const {
    std::array<int, kMaxVertices> tmp = v_;
    std::sort(tmp.begin(), tmp.begin() + n_);
    return std::adjacent_find(tmp.begin(), tmp.begin() + n_) != tmp.begin() + n_;
  }

  bool is_sorted() const { return std::is_sorted(begin(), end()); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend bool operator<(const Simplex& a, const Simplex& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  friend std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    os << '[';
    for (std::size_t i = 0; i < s.n_; ++i) os << (i ? "," : "") << s.v_[i];
    return os << ']';
  }

 private:
  template <typename It>
  void assign(It first, It last) {
    n_ = 0;
    for (; first != last; ++first) {
      if (n_ == kMaxVertices) throw std::length_error("simplex too large");
      v_[n_++] = static_cast<int>(*first);
    }
    std::sort(v_.begin(), v_.begin() + n_);
    auto e = std::unique(v_.begin(), v_.begin() + n_);
    n_ = static_cast<std::uint8_t>(e - v_.begin());
  }

  std::array<int, kMaxVertices> v_{};
  std::uint8_t n_ = 0;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ s.size();
    for (int x : s) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Sign of the face obtained by deleting position `i`: (-1)^i.
inline int facet_sign(std::size_t i) { return (i % 2 == 0) ? 1 : -1; }

}  // namespace bing
