#include "qint/json_io.hpp"

namespace qint {

Json to_json(const FeWitness& w, const std::optional<std::string>& equation) {
  Json j = Json::object();
  if (equation) {
    j["equation"] = *equation;
  }
  j["m"] = w.m;
  j["n"] = w.n;
  j["lhs"] = to_string(w.lhs);
  j["rhs"] = to_string(w.rhs);
  return j;
}

Json to_json(const FeVerdict& v, const std::optional<FracPoly>& h) {
  Json j = Json::object();
  j["status"] = v.pass ? "pass" : "fail";
  j["witness"] = v.witness ? to_json(*v.witness) : Json();
  j["h"] = h ? Json(to_string(*h)) : Json();
  return j;
}

Json to_json(const Classification& c, const std::optional<FracPoly>& h) {
  Json j = Json::object();
  j["status"] = to_string(c.kind);
  if (c.failed && c.failed->witness) {
    j["witness"] = to_json(*c.failed->witness, c.failed->equation);
  } else {
    j["witness"] = Json();
  }
  j["h"] = h ? Json(to_string(*h)) : Json();
  return j;
}

Json to_json(const MultitermVerdict& v) {
  Json j = Json::object();
  j["status"] = v.pass ? "pass" : "fail";
  j["expected"] = to_string(v.expected);
  j["actual"] = to_string(v.actual);
  return j;
}

Json to_json(const RingLawReport& r) {
  Json j = Json::object();
  j["status"] = r.pass ? "pass" : "fail";
  j["pairs_checked"] = r.pairs_checked;
  j["triples_checked"] = r.triples_checked;
  Json violations = Json::array();
  for (const RingLawViolation& v : r.violations) {
    Json entry = Json::object();
    entry["law"] = v.law;
    Json operands = Json::array();
    for (const Int& op : v.operands) {
      operands.push_back(op.str());
    }
    entry["operands"] = operands;
    violations.push_back(entry);
  }
  j["violations"] = violations;
  return j;
}

Json to_json(const DecompositionProof& p) {
  Json j = Json::object();
  j["identity"] = p.identity;
  Json parts = Json::array();
  for (const IntSet& part : p.parts) {
    parts.push_back(to_string(part));
  }
  j["parts"] = parts;
  j["witness"] = p.witness ? Json(*p.witness) : Json();
  j["status"] = p.pass ? "pass" : "fail";
  return j;
}

Json to_json(const DirectSumResult& r) {
  Json j = Json::object();
  j["direct"] = r.direct;
  j["sum"] = to_string(r.sum);
  if (r.element) {
    Json w = Json::object();
    w["element"] = *r.element;
    Json reps = Json::array();
    for (const Representation& rep : r.representations) {
      reps.push_back(Json::array({rep.a, rep.b}));
    }
    w["representations"] = reps;
    j["witness"] = w;
  } else {
    j["witness"] = Json();
  }
  return j;
}

Json to_json(const GenfunReport& r) {
  Json j = Json::object();
  j["status"] = r.pass ? "pass" : "fail";
  Json list = Json::array();
  for (const IdentityOutcome& o : r.outcomes) {
    Json entry = Json::object();
    entry["identity"] = o.identity;
    entry["applicable"] = o.applicable;
    if (o.applicable) {
      entry["status"] = o.pass ? "pass" : "fail";
    } else {
      entry["note"] = o.note;
    }
    list.push_back(entry);
  }
  j["identities"] = list;
  return j;
}

}  // namespace qint
