#include "chordsplit/patterns.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace chordsplit {
namespace {

Pattern Make(std::string name, int n, std::vector<Edge> edges) {
  return Pattern{std::move(name), Graph::FromEdges(n, edges)};
}

Pattern Cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Make("c" + std::to_string(n), n, std::move(edges));
}

std::vector<Pattern> BuildCatalog() {
  std::vector<Pattern> out;
  out.push_back(Make("2k2", 4, {{0, 1}, {2, 3}}));
  for (int n = 4; n <= 7; ++n) out.push_back(Cycle(n));
  out.push_back(Make("2p3", 6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}));
  out.push_back(Make("k3+p3", 6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {4, 5}}));
  out.push_back(Make("2k3", 6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
  // Triangles v1v2v3 and v3v4v5 sharing v3.
  out.push_back(Make("butterfly", 5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));
  // Triangles v1v2v3 and v4v5v6 joined by v3v4.
  out.push_back(Make("extended-butterfly", 6,
                     {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}}));
  // P5 v1..v5, v6 adjacent to v1 and v2.
  out.push_back(Make("extended-co-p", 6,
                     {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 0}, {5, 1}}));
  // P4 v1..v4, v5 adjacent to v3.
  out.push_back(Make("chair", 5, {{0, 1}, {1, 2}, {2, 3}, {4, 2}}));
  out.push_back(Make("extended-chair", 6,
                     {{0, 1}, {1, 2}, {2, 3}, {4, 2}, {5, 0}, {5, 1}}));
  // P4 v1..v4, v5 adjacent to all of them.
  out.push_back(Make("gem", 5,
                     {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}));
  // Gem plus v6 adjacent to v3 and v4.
  out.push_back(Make("double-gem", 6,
                     {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3},
                      {5, 2}, {5, 3}}));
  return out;
}

constexpr std::array<std::string_view, 8> kSmeFixed = {
    "2p3",           "k3+p3",         "2k3",           "butterfly",
    "extended-butterfly", "extended-co-p", "extended-chair", "double-gem"};

class InducedSearch {
 public:
  InducedSearch(const Graph& g, const Pattern& p)
      : g_(g), p_(p.graph), map_(static_cast<size_t>(p_.num_vertices()), -1),
        used_(static_cast<size_t>(g.num_vertices()), 0) {
    for (Vertex i = 0; i < p_.num_vertices(); ++i) {
      Vertex anchor = -1;
      for (Vertex j : p_.neighbors(i)) {
        if (j < i) {
          anchor = j;
          break;
        }
      }
      anchors_.push_back(anchor);
    }
  }

  bool Run() { return Place(0); }
  const std::vector<Vertex>& map() const { return map_; }

 private:
  bool Fits(Vertex i, Vertex c) const {
    if (used_[c] || g_.degree(c) < p_.degree(i)) return false;
    for (Vertex j = 0; j < i; ++j) {
      if (g_.adjacent(c, map_[j]) != p_.adjacent(i, j)) return false;
    }
    return true;
  }

  bool Try(Vertex i, Vertex c) {
    if (!Fits(i, c)) return false;
    map_[i] = c;
    used_[c] = 1;
    if (Place(i + 1)) return true;
    used_[c] = 0;
    map_[i] = -1;
    return false;
  }

  bool Place(Vertex i) {
    if (i == p_.num_vertices()) return true;
    if (anchors_[i] != -1) {
      for (Vertex c : g_.neighbors(map_[anchors_[i]])) {
        if (Try(i, c)) return true;
      }
    } else {
      for (Vertex c = 0; c < g_.num_vertices(); ++c) {
        if (Try(i, c)) return true;
      }
    }
    return false;
  }

  const Graph& g_;
  const Graph& p_;
  std::vector<Vertex> anchors_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

void Extend(const Graph& g, int h, Vertex root, VertexList& current,
            std::vector<Vertex> extension,
            const std::function<bool(const VertexList&)>& visit, bool& stop) {
  if (static_cast<int>(current.size()) == h) {
    VertexList sorted = current;
    std::sort(sorted.begin(), sorted.end());
    if (!visit(sorted)) stop = true;
    return;
  }
  while (!extension.empty() && !stop) {
    Vertex w = extension.back();
    extension.pop_back();
    std::vector<Vertex> next = extension;
    for (Vertex u : g.neighbors(w)) {
      if (u <= root) continue;
      bool exclusive = true;
      for (Vertex s : current) {
        if (u == s || g.adjacent(u, s)) {
          exclusive = false;
          break;
        }
      }
      if (exclusive) next.push_back(u);
    }
    current.push_back(w);
    Extend(g, h, root, current, std::move(next), visit, stop);
    current.pop_back();
  }
}

}  // namespace

const std::vector<Pattern>& Catalog() {
  static const std::vector<Pattern> catalog = BuildCatalog();
  return catalog;
}

const Pattern* FindPattern(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const Pattern& p : Catalog()) {
    if (p.name == lower) return &p;
  }
  return nullptr;
}

std::span<const std::string_view> SmeFixedPatternNames() { return kSmeFixed; }

std::optional<Embedding> FindInduced(const Graph& g, const Pattern& p) {
  if (p.size() > g.num_vertices()) return std::nullopt;
  InducedSearch search(g, p);
  if (!search.Run()) return std::nullopt;
  return Embedding{p.name, search.map()};
}

void ForEachConnectedSet(const Graph& g, int h,
                         const std::function<bool(const VertexList&)>& visit) {
  if (h < 1) throw std::invalid_argument("connected set size must be at least 1");
  bool stop = false;
  for (Vertex root = 0; root < g.num_vertices() && !stop; ++root) {
    VertexList current{root};
    std::vector<Vertex> extension;
    for (Vertex w : g.neighbors(root)) {
      if (w > root) extension.push_back(w);
    }
    Extend(g, h, root, current, std::move(extension), visit, stop);
  }
}

std::optional<APairWitness> FindAPair(const Graph& g, int h) {
  if (h < 1) throw std::invalid_argument("A_h search needs h >= 1");
  std::vector<VertexList> sets;
  std::vector<VertexSet> closed;
  std::optional<APairWitness> found;
  ForEachConnectedSet(g, h, [&](const VertexList& set) {
    VertexSet members(g.num_vertices(), set);
    for (size_t i = 0; i < sets.size(); ++i) {
      if (!members.Intersects(closed[i])) {
        found = APairWitness{h, sets[i], set};
        return false;
      }
    }
    sets.push_back(set);
    closed.push_back(members | g.Neighborhood(members));
    return true;
  });
  return found;
}

std::optional<VertexList> HimCheck(const Graph& g, const VertexSet& subset) {
  for (auto& component : Components(g, subset).components) {
    if (component.size() >= 3) return std::move(component);
  }
  return std::nullopt;
}

VertexList GrowConnectedSubset(const Graph& g, const VertexList& component, int size) {
  if (size < 1 || static_cast<int>(component.size()) < size) {
    throw std::invalid_argument("component smaller than the requested subset");
  }
  VertexSet allowed(g.num_vertices(), component);
  VertexSet seen(g.num_vertices());
  VertexList out{component.front()};
  seen.insert(component.front());
  for (size_t head = 0; head < out.size() && static_cast<int>(out.size()) < size; ++head) {
    for (Vertex w : g.neighbors(out[head])) {
      if (allowed.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        out.push_back(w);
        if (static_cast<int>(out.size()) == size) break;
      }
    }
  }
  if (static_cast<int>(out.size()) < size) {
    throw std::invalid_argument("component is not connected");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chordsplit
