#ifndef CHORDSPLIT_REPORT_H_
#define CHORDSPLIT_REPORT_H_

#include <string>
#include <vector>

#include "chordsplit/certificates.h"
#include "json.hpp"

namespace chordsplit {

// JSON forms of certificates and witnesses. Every object carries a "type":
// peo, split-partition, good-clique, sme-partition, hole, pattern, a-pair.
nlohmann::ordered_json PeoJson(const std::vector<Vertex>& ordering);
nlohmann::ordered_json ToJson(const SplitPartition& partition);
nlohmann::ordered_json ToJson(const GoodCliqueCertificate& cert);
nlohmann::ordered_json ToJson(const SmePartition& partition);
nlohmann::ordered_json ToJson(const RejectionWitness& witness);

// One class decision with its evidence, already verified against the graph.
struct ClassVerdict {
  GraphClass cls;
  bool accepted = false;
  nlohmann::ordered_json evidence;
  double millis = 0.0;
};

// Decides chordal, split, kgs(k) for each k in `ks`, and sme, in that order.
// Throws std::logic_error if any certificate or witness fails verification.
std::vector<ClassVerdict> Classify(const Graph& g, const std::vector<int>& ks);

// Decides a single class.
ClassVerdict Decide(const Graph& g, const GraphClass& cls);

// {"input", "class", "verdict", "certificate" | "witness", "millis"} on one
// line. With `timing` false, millis is 0.
std::string JsonLine(const std::string& input, const ClassVerdict& verdict, bool timing);

// "<input> <class> yes|no <type> key=value ..." on one line.
std::string TextLine(const std::string& input, const ClassVerdict& verdict, bool timing);

}  // namespace chordsplit

#endif  // CHORDSPLIT_REPORT_H_
