#include "snc/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace snc {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {
  if (universe > kMaxVertices)
    throw std::invalid_argument("vertex set universe " + std::to_string(universe) +
                                " exceeds kMaxVertices");
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Word> words) : VertexSet(universe) {
  if (words.size() != words_.size()) throw std::invalid_argument("word count does not match universe");
  std::copy(words.begin(), words.end(), words_.begin());
  clear_tail();
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.clear_tail();
  return s;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

std::optional<Vertex> VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i])
      return static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i])));
  return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) throw std::invalid_argument("vertex sets over different universes");
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet c(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  c.clear_tail();
  return c;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  if (other.universe_ != universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool VertexSet::disjoint_from(const VertexSet& other) const noexcept {
  return !intersects(words_, other.words_);
}

void VertexSet::clear_tail() noexcept {
  const std::size_t rem = universe_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

}  // namespace snc
