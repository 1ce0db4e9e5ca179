#ifndef CHORDSPLIT_VERIFY_H_
#define CHORDSPLIT_VERIFY_H_

#include <string>

#include "chordsplit/certificates.h"

namespace chordsplit {

// Outcome of a certificate check. `reason` explains a failure.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict Pass() { return {}; }
  static Verdict Fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

// Certificate checks. These share nothing with the recognizers beyond
// Graph::adjacent and the neighbor lists.
Verdict VerifyGoodClique(const Graph& g, const GoodCliqueCertificate& cert);
Verdict VerifySplitPartition(const Graph& g, const SplitPartition& partition);
Verdict VerifySmePartition(const Graph& g, const SmePartition& partition);
Verdict VerifyPeo(const Graph& g, const std::vector<Vertex>& ordering);

Verdict VerifyHole(const Graph& g, const HoleWitness& hole);
Verdict VerifyEmbedding(const Graph& g, const Embedding& embedding);
Verdict VerifyAPair(const Graph& g, const APairWitness& pair);
Verdict VerifyWitness(const Graph& g, const RejectionWitness& witness);

// Checks the witness and that it certifies non-membership in `cls`: holes
// reject every class; an A_h pair rejects kgs(h-1) (split when h = 2, and
// sme when h = 3); a fixed pattern rejects the classes that forbid it.
Verdict VerifyRejection(const Graph& g, const RejectionWitness& witness,
                        const GraphClass& cls);

}  // namespace chordsplit

#endif  // CHORDSPLIT_VERIFY_H_
