#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace snc {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

/// Largest order supported by the bit-row kernels.
inline constexpr std::size_t kMaxVertices = 4096;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) noexcept {
  return (n + kWordBits - 1) / kWordBits;
}

inline std::size_t popcount(std::span<const Word> a) noexcept {
  std::size_t c = 0;
  for (Word w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

/// |a & b| without materialising the intersection.
inline std::size_t popcount_and(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t c = 0;
  const std::size_t k = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < k; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept {
  const std::size_t k = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < k; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

/// Calls f(v) for every set bit, in increasing order.
template <class F>
void for_each_bit(std::span<const Word> words, F&& f) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word w = words[i];
    while (w) {
      const auto b = static_cast<std::size_t>(std::countr_zero(w));
      f(static_cast<Vertex>(i * kWordBits + b));
      w &= w - 1;
    }
  }
}

/// Subset of {0, ..., n-1} stored as an n-bit mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);
  VertexSet(std::size_t universe, std::span<const Word> words);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return popcount(words_); }
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  std::optional<Vertex> first() const noexcept;
  std::vector<Vertex> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for_each_bit(words_, std::forward<F>(f));
  }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool is_subset_of(const VertexSet& other) const noexcept;
  bool disjoint_from(const VertexSet& other) const noexcept;

 private:
  void check_universe(const VertexSet& other) const;
  void clear_tail() noexcept;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace snc
