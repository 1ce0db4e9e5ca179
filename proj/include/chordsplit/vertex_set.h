#ifndef CHORDSPLIT_VERTEX_SET_H_
#define CHORDSPLIT_VERTEX_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace chordsplit {

using Vertex = int;

// Sorted list of distinct vertices. Used wherever a set must stay small in
// memory on large graphs (cliques, components, certificates).
using VertexList = std::vector<Vertex>;

// Fixed-universe bitset over the vertices 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  // All vertices of the universe.
  static VertexSet Full(int universe);

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) { words_[static_cast<size_t>(v) >> 6] |= Bit(v); }
  void erase(Vertex v) { words_[static_cast<size_t>(v) >> 6] &= ~Bit(v); }

  int size() const;
  bool empty() const;

  // Smallest member, or -1 when empty.
  Vertex first() const;
  // Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const;

  template <typename F>
  void ForEach(F&& f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  VertexList ToList() const;

  bool IsSubsetOf(const VertexSet& other) const;
  bool Intersects(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  // Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Complement within the universe.
  VertexSet Complement() const;

  bool operator==(const VertexSet& other) const = default;

  std::span<const uint64_t> words() const { return words_; }

 private:
  static uint64_t Bit(Vertex v) { return uint64_t{1} << (v & 63); }

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace chordsplit

#endif  // CHORDSPLIT_VERTEX_SET_H_
