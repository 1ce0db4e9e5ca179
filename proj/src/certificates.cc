#include "chordsplit/certificates.h"

#include <charconv>
#include <stdexcept>

namespace chordsplit {

std::string GraphClass::Name() const {
  switch (kind) {
    case Kind::kChordal: return "chordal";
    case Kind::kSplit: return "split";
    case Kind::kGoodClique: return "kgs(" + std::to_string(k) + ")";
    case Kind::kSme: return "sme";
  }
  return "";
}

GraphClass GraphClass::Parse(const std::string& name) {
  if (name == "chordal") return Chordal();
  if (name == "split") return Split();
  if (name == "sme") return Sme();
  if (name.starts_with("kgs(") && name.ends_with(")")) {
    int k = 0;
    const char* first = name.data() + 4;
    const char* last = name.data() + name.size() - 1;
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && k >= 0) return GoodClique(k);
  }
  throw std::invalid_argument("unknown graph class '" + name +
                              "' (expected chordal, split, kgs(k) or sme)");
}

}  // namespace chordsplit
