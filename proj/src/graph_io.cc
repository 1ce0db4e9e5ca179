#include "chordsplit/graph_io.h"

#include <charconv>
#include <cstdint>
#include <vector>

namespace chordsplit {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

int SixBits(char c) {
  auto value = static_cast<unsigned char>(c);
  if (value < 63 || value > 126) {
    throw ParseError("graph6: character outside 63..126 (code " +
                     std::to_string(value) + ")");
  }
  return value - kBias;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Graph ParseGraph6(std::string_view record) {
  if (record.starts_with(kGraph6Header)) record.remove_prefix(kGraph6Header.size());
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r')) {
    record.remove_suffix(1);
  }
  if (record.empty()) throw ParseError("graph6: empty record");

  // Size field N(n).
  int64_t n = 0;
  size_t pos = 0;
  if (record[0] != '~') {
    n = SixBits(record[0]);
    pos = 1;
  } else if (record.size() >= 2 && record[1] == '~') {
    if (record.size() < 8) throw ParseError("graph6: truncated size field");
    for (size_t i = 2; i < 8; ++i) n = (n << 6) | SixBits(record[i]);
    pos = 8;
  } else {
    if (record.size() < 4) throw ParseError("graph6: truncated size field");
    for (size_t i = 1; i < 4; ++i) n = (n << 6) | SixBits(record[i]);
    pos = 4;
  }
  if (n > (int64_t{1} << 24)) {
    throw ParseError("graph6: vertex count " + std::to_string(n) + " too large");
  }

  const int64_t bits = n * (n - 1) / 2;
  const int64_t expected = (bits + 5) / 6;
  const int64_t actual = static_cast<int64_t>(record.size() - pos);
  if (actual < expected) {
    throw ParseError("graph6: record too short for n = " + std::to_string(n));
  }
  if (actual > expected) {
    throw ParseError("graph6: trailing characters after adjacency data");
  }

  std::vector<Edge> edges;
  int64_t k = 0;
  int current = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) current = SixBits(record[pos + static_cast<size_t>(k / 6)]);
      if ((current >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    int pad_mask = (1 << (6 - k % 6)) - 1;
    if ((current & pad_mask) != 0) throw ParseError("graph6: non-zero padding bits");
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string WriteGraph6(const Graph& g) {
  const int64_t n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  const size_t header_size = out.size();
  const int64_t bits = n * (n - 1) / 2;
  std::vector<uint8_t> groups(static_cast<size_t>((bits + 5) / 6), 0);
  for (const auto& [i, j] : g.Edges()) {
    const int64_t k = int64_t{j} * (j - 1) / 2 + i;
    groups[static_cast<size_t>(k / 6)] |= static_cast<uint8_t>(1 << (5 - k % 6));
  }
  out.resize(header_size + groups.size());
  for (size_t i = 0; i < groups.size(); ++i) {
    out[header_size + i] = static_cast<char>(groups[i] + kBias);
  }
  return out;
}

Graph ParseEdgeList(std::string_view text) {
  struct Pair {
    int64_t a, b;
    int line;
  };
  std::vector<Pair> pairs;
  int line_no = 0;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    int64_t values[2];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int i = 0; i < 2; ++i) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == ',')) ++p;
      auto [next, ec] = std::from_chars(p, end, values[i]);
      if (ec != std::errc() || values[i] < 0) {
        throw ParseError("edge list: expected two non-negative integers", line_no);
      }
      p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end) throw ParseError("edge list: trailing characters", line_no);
    pairs.push_back({values[0], values[1], line_no});
  }
  if (pairs.empty()) return Graph();

  bool header = false;
  {
    const Pair& h = pairs.front();
    if (h.b == static_cast<int64_t>(pairs.size() - 1)) {
      header = true;
      for (size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i].a >= h.a || pairs[i].b >= h.a) header = false;
      }
    }
  }

  int64_t n = 0;
  size_t first = 0;
  if (header) {
    n = pairs.front().a;
    first = 1;
  } else {
    for (const Pair& p : pairs) n = std::max({n, p.a + 1, p.b + 1});
  }
  if (n > (int64_t{1} << 28)) throw ParseError("edge list: vertex count too large");

  std::vector<Edge> edges;
  for (size_t i = first; i < pairs.size(); ++i) {
    if (pairs[i].a == pairs[i].b) {
      throw ParseError("edge list: self-loop at vertex " + std::to_string(pairs[i].a),
                       pairs[i].line);
    }
    edges.emplace_back(static_cast<Vertex>(pairs[i].a), static_cast<Vertex>(pairs[i].b));
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string WriteEdgeList(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (const auto& [u, v] : g.Edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace chordsplit
