#include "chordsplit/vertex_set.h"

#include <stdexcept>

namespace chordsplit {

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) {
    if (v < 0 || v >= universe) {
      throw std::out_of_range("vertex outside set universe");
    }
    insert(v);
  }
}

VertexSet VertexSet::Full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

int VertexSet::size() const {
  int count = 0;
  for (uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool VertexSet::empty() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

Vertex VertexSet::first() const {
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
    }
  }
  return -1;
}

Vertex VertexSet::next(Vertex v) const {
  Vertex start = v + 1;
  if (start >= universe_) return -1;
  size_t w = static_cast<size_t>(start) >> 6;
  uint64_t bits = words_[w] & (~uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(bits));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

VertexList VertexSet::ToList() const {
  VertexList out;
  out.reserve(static_cast<size_t>(size()));
  ForEach([&](Vertex v) { out.push_back(v); });
  return out;
}

bool VertexSet::IsSubsetOf(const VertexSet& other) const {
  for (size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::Intersects(const VertexSet& other) const {
  for (size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

VertexSet VertexSet::Complement() const {
  return Full(universe_) - *this;
}

}  // namespace chordsplit
