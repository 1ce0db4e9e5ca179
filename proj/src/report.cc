#include "chordsplit/report.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "chordsplit/recognizers.h"
#include "chordsplit/verify.h"

namespace chordsplit {
namespace {

using json = nlohmann::ordered_json;

json EdgesJson(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [x, y] : edges) out.push_back({x, y});
  return out;
}

void Check(const Verdict& verdict, const std::string& what) {
  if (!verdict) throw std::logic_error(what + " failed verification: " + verdict.reason);
}

ClassVerdict Accept(const GraphClass& cls, json evidence) { return {cls, true, evidence, 0.0}; }

ClassVerdict Reject(const Graph& g, const GraphClass& cls, const RejectionWitness& witness) {
  Check(VerifyRejection(g, witness, cls), cls.Name() + " witness");
  return {cls, false, ToJson(witness), 0.0};
}

ClassVerdict DecideUntimed(const Graph& g, const GraphClass& cls) {
  switch (cls.kind) {
    case GraphClass::Kind::kChordal: {
      ChordalityResult r = IsChordal(g);
      if (r.chordal()) {
        Check(VerifyPeo(g, r.elimination.ordering), "perfect elimination ordering");
        return Accept(cls, PeoJson(r.elimination.ordering));
      }
      return Reject(g, cls, *r.hole);
    }
    case GraphClass::Kind::kSplit: {
      SplitResult r = RecognizeSplit(g);
      if (const auto* p = std::get_if<SplitPartition>(&r)) {
        Check(VerifySplitPartition(g, *p), "split partition");
        return Accept(cls, ToJson(*p));
      }
      return Reject(g, cls, std::get<RejectionWitness>(r));
    }
    case GraphClass::Kind::kGoodClique: {
      CertifiedResult r = FindKGoodCertified(g, cls.k);
      if (r.accepted()) {
        const auto& cert = std::get<GoodCliqueCertificate>(r.outcome);
        Check(VerifyGoodClique(g, cert), "good clique");
        return Accept(cls, ToJson(cert));
      }
      return Reject(g, cls, std::get<RejectionWitness>(r.outcome));
    }
    case GraphClass::Kind::kSme: {
      if (auto partition = RecognizeSmeLinear(g)) {
        Check(VerifySmePartition(g, *partition), "split-matching-extended partition");
        return Accept(cls, ToJson(*partition));
      }
      SmeResult r = RecognizeSme(g);
      if (std::holds_alternative<SmePartition>(r)) {
        throw std::logic_error("split-matching-extended recognizers disagree");
      }
      return Reject(g, cls, std::get<RejectionWitness>(r));
    }
  }
  throw std::logic_error("unknown graph class");
}

std::string Compact(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

}  // namespace

json PeoJson(const std::vector<Vertex>& ordering) {
  return {{"type", "peo"}, {"ordering", ordering}};
}

json ToJson(const SplitPartition& partition) {
  return {{"type", "split-partition"},
          {"clique", partition.clique},
          {"independent", partition.independent}};
}

json ToJson(const GoodCliqueCertificate& cert) {
  return {{"type", "good-clique"},
          {"k", cert.k},
          {"clique", cert.clique},
          {"components", cert.decomposition.components}};
}

json ToJson(const SmePartition& partition) {
  return {{"type", "sme-partition"},
          {"clique", partition.clique},
          {"independent", partition.independent},
          {"matching", EdgesJson(partition.matching)}};
}

json ToJson(const RejectionWitness& witness) {
  if (const auto* hole = std::get_if<HoleWitness>(&witness)) {
    return {{"type", "hole"}, {"cycle", hole->cycle}};
  }
  if (const auto* e = std::get_if<Embedding>(&witness)) {
    return {{"type", "pattern"}, {"name", e->pattern}, {"map", e->map}};
  }
  const auto& pair = std::get<APairWitness>(witness);
  return {{"type", "a-pair"}, {"h", pair.h}, {"x", pair.x}, {"y", pair.y}};
}

ClassVerdict Decide(const Graph& g, const GraphClass& cls) {
  const auto start = std::chrono::steady_clock::now();
  ClassVerdict verdict = DecideUntimed(g, cls);
  verdict.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return verdict;
}

std::vector<ClassVerdict> Classify(const Graph& g, const std::vector<int>& ks) {
  std::vector<ClassVerdict> out;
  out.push_back(Decide(g, GraphClass::Chordal()));
  out.push_back(Decide(g, GraphClass::Split()));
  for (int k : ks) out.push_back(Decide(g, GraphClass::GoodClique(k)));
  out.push_back(Decide(g, GraphClass::Sme()));
  return out;
}

std::string JsonLine(const std::string& input, const ClassVerdict& verdict, bool timing) {
  json line = {{"input", input},
               {"class", verdict.cls.Name()},
               {"verdict", verdict.accepted ? "accept" : "reject"}};
  line[verdict.accepted ? "certificate" : "witness"] = verdict.evidence;
  line["millis"] = timing ? std::round(verdict.millis * 1000.0) / 1000.0 : 0.0;
  return line.dump();
}

std::string TextLine(const std::string& input, const ClassVerdict& verdict, bool timing) {
  std::string out = input + " " + verdict.cls.Name() + (verdict.accepted ? " yes " : " no ");
  out += verdict.evidence.at("type").get<std::string>();
  for (const auto& [key, value] : verdict.evidence.items()) {
    if (key != "type") out += " " + key + "=" + Compact(value);
  }
  if (timing) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), " %.3fms", verdict.millis);
    out += buffer;
  }
  return out;
}

}  // namespace chordsplit
