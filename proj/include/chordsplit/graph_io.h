#ifndef CHORDSPLIT_GRAPH_IO_H_
#define CHORDSPLIT_GRAPH_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "chordsplit/graph.h"

namespace chordsplit {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}

  // 1-based line of the offending record, 0 when unknown.
  int line() const { return line_; }

 private:
  int line_;
};

// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
// line terminators are accepted. Throws ParseError on a malformed size
// field, a character outside 63..126, a wrong record length, or non-zero
// padding bits.
Graph ParseGraph6(std::string_view record);

// Canonical graph6 record (no header, no newline).
std::string WriteGraph6(const Graph& g);

// Parses the edge-list format: an optional "n m" header line followed by one
// "u v" pair per line, 0-based. Blank lines and '#' comments are ignored.
//
// The first line is read as a header when its second number equals the
// number of remaining edge lines and every remaining endpoint is below its
// first number. Without a header, n is one more than the largest endpoint.
Graph ParseEdgeList(std::string_view text);

// "n m" header followed by the edges in lexicographic order.
std::string WriteEdgeList(const Graph& g);

}  // namespace chordsplit

#endif  // CHORDSPLIT_GRAPH_IO_H_
