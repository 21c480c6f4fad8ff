#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace locdom {

/// Fixed-capacity set of small non-negative indices packed into 64-bit words.
/// The Tag parameter keeps vertex sets and edge sets from being mixed up.
template <class Tag, std::size_t Words>
class IndexSet {
 public:
  static constexpr std::size_t kCapacity = Words * 64;

  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> members) {
    for (auto i : members) insert(i);
  }

  static IndexSet first_n(std::size_t count) {
    IndexSet s;
    for (std::size_t w = 0; w < Words && count > 0; ++w) {
      if (count >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        count -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << count) - 1;
        count = 0;
      }
    }
    return s;
  }

  static IndexSet from_indices(const std::vector<std::size_t>& members) {
    IndexSet s;
    for (auto i : members) s.insert(i);
    return s;
  }

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool intersects(const IndexSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if ((words_[w] & o.words_[w]) != 0) return true;
    return false;
  }

  /// Largest member plus one, or 0 for the empty set.
  std::size_t bound() const {
    for (std::size_t w = Words; w-- > 0;)
      if (words_[w] != 0) return w * 64 + 64 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return 0;
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < Words; ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < Words; ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  IndexSet& operator-=(const IndexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  /// Total order on the raw words; used only for sorting signatures.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    for (std::size_t w = Words; w-- > 0;)
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::uint64_t word(std::size_t w) const { return words_[w]; }

 private:
  std::array<std::uint64_t, Words> words_{};
};

struct VertexTag {};
struct EdgeTag {};

using VertexSubset = IndexSet<VertexTag, 1>;
using EdgeSubset = IndexSet<EdgeTag, 2>;

}  // namespace locdom
