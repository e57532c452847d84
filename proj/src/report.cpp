#include "ordertype/report.hpp"

#include "ordertype/errors.hpp"
#include "ordertype/evaluate.hpp"

namespace ordertype {

namespace {

const char* sideName(UPoint::Side s) {
  switch (s) {
    case UPoint::Side::Neg: return "neg";
    case UPoint::Side::Mid: return "mid";
    case UPoint::Side::Pos: return "pos";
  }
  return "?";
}

[[noreturn]] void malformed(const Json& j) {
  throw OrderError(ErrorKind::InvalidCode, "malformed point code " + j.dump());
}

template <class F>
auto guarded(const Json& j, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    malformed(j);  // a bad literal inside a code is a bad code
  } catch (const OrderError&) {
    throw;
  } catch (const std::exception&) {
    malformed(j);
  }
}

Json levelJson(const LevelProfile& l) {
  return {{"smallHead", l.smallHead}, {"smallTail", l.smallTail}, {"condensesToOne", l.condensesToOne},
          {"rightIdentity", l.rightIdentity}};
}

Json counterexample(const Counterexample& c) {
  Json inputs = Json::array();
  for (const auto& t : c.inputs) inputs.push_back(t.toString());
  return {{"inputs", inputs}, {"lhs", c.lhs.toString()}, {"rhs", c.rhs.toString()}, {"verdict", verdictName(c.verdict)}};
}

Json documentHead(const std::string& input, const Evaluation& e) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["input"] = input;
  j["normalized"] = e.operand.toString();
  j["result"] = e.result.toString();
  return j;
}

}  // namespace

Json toJson(const UPoint& u) {
  Json j{{"side", sideName(u.side)}, {"index", u.index.toString()}, {"spine", u.spine}};
  if (!u.spine) j["value"] = u.value.str();
  return j;
}

UPoint uPointFromJson(const Json& j) {
  return guarded(j, [&] {
    const std::string side = j.at("side").get<std::string>();
    UPoint u;
    if (side == "neg") u.side = UPoint::Side::Neg;
    else if (side == "mid") u.side = UPoint::Side::Mid;
    else if (side == "pos") u.side = UPoint::Side::Pos;
    else malformed(j);
    u.index = Ordinal::parse(j.at("index").get<std::string>());
    u.spine = j.at("spine").get<bool>();
    if (!u.spine) u.value = Rational(j.at("value").get<std::string>());
    if (!u.valid()) malformed(j);
    return u;
  });
}

Json toJson(const PointCode& p) {
  using Tag = PointCode::Tag;
  switch (p.tag) {
    case Tag::Nat: return {{"tag", "nat"}, {"value", p.n}};
    case Tag::Int: return {{"tag", "int"}, {"value", p.z}};
    case Tag::Rat: return {{"tag", "rat"}, {"value", p.q.str()}};
    case Tag::Ord: return {{"tag", "ord"}, {"value", p.a.toString()}};
    case Tag::Ord2: return {{"tag", "ord2"}, {"blocks", p.a.toString()}, {"offset", p.b.toString()}};
    case Tag::U: return {{"tag", "u"}, {"value", toJson(p.u)}};
    case Tag::Part: return {{"tag", "part"}, {"index", p.n}, {"code", toJson(p.child())}};
    case Tag::Pair: return {{"tag", "pair"}, {"outer", toJson(p.outer())}, {"inner", toJson(p.inner())}};
  }
  return {};
}

PointCode pointCodeFromJson(const Json& j) {
  return guarded(j, [&]() -> PointCode {
    const std::string tag = j.at("tag").get<std::string>();
    if (tag == "nat") return PointCode::nat(j.at("value").get<std::uint64_t>());
    if (tag == "int") return PointCode::integer(j.at("value").get<std::int64_t>());
    if (tag == "rat") return PointCode::rational(Rational(j.at("value").get<std::string>()));
    if (tag == "ord") return PointCode::ordinal(Ordinal::parse(j.at("value").get<std::string>()));
    if (tag == "ord2")
      return PointCode::ordinalPair(Ordinal::parse(j.at("blocks").get<std::string>()),
                                    Ordinal::parse(j.at("offset").get<std::string>()));
    if (tag == "u") return PointCode::upoint(uPointFromJson(j.at("value")));
    if (tag == "part") return PointCode::part(j.at("index").get<std::uint64_t>(), pointCodeFromJson(j.at("code")));
    if (tag == "pair") return PointCode::pair(pointCodeFromJson(j.at("outer")), pointCodeFromJson(j.at("inner")));
    malformed(j);
  });
}

Json toJson(const Profile& p) {
  return {{"card", p.card.toString()},
          {"cofin", cofinalityName(p.cofin)},
          {"coin", cofinalityName(p.coin)},
          {"hasFirst", p.hasFirst},
          {"hasLast", p.hasLast},
          {"fc", levelJson(p.finite)},
          {"cc", levelJson(p.countable)}};
}

Json toJson(const ConsistencyReport& r) {
  return {{"cofinalityForm", r.cofinalityForm},
          {"tailForm", r.tailForm},
          {"cardinalityForm", r.cardinalityForm},
          {"consistent", r.consistent()}};
}

Json toJson(const LawReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["structure"] = r.structure;
  j["sample"] = r.sample;
  j["terms"] = Json::array();
  for (const auto& t : r.terms) j["terms"].push_back(t.toString());
  j["laws"] = Json::array();
  for (const auto& law : r.laws) {
    Json l{{"law", law.law}, {"checked", law.checked}, {"passed", law.passed()}};
    l["counterexamples"] = Json::array();
    for (const auto& c : law.refuted) l["counterexamples"].push_back(counterexample(c));
    l["unverified"] = Json::array();
    for (const auto& c : law.unverified) l["unverified"].push_back(counterexample(c));
    j["laws"].push_back(l);
  }
  if (r.structure == "semigroup") {
    j["caseHits"] = r.caseHits;
    j["allCasesHit"] = r.allCasesHit();
  }
  j["passed"] = r.passed();
  return j;
}

Json toJson(const EmbedResult& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["embeddable"] = r.embeddable;
  if (!r.certificate) {
    j["reason"] = r.reason;
    return j;
  }
  const EmbedCertificate& c = *r.certificate;
  j["target"] = c.target;
  j["construction"] = c.construction;
  j["spine"] = Json::array();
  for (const auto& s : c.spine)
    j["spine"].push_back({{"source", s.source ? toJson(*s.source) : Json("NEW")}, {"target", toJson(s.target)}});
  j["gaps"] = Json::array();
  for (const auto& g : c.gaps) {
    Json pts = Json::array();
    for (const auto& [code, q] : g.points) pts.push_back({{"source", toJson(code)}, {"rational", q.str()}});
    j["gaps"].push_back({{"side", sideName(g.side)}, {"index", g.index.toString()}, {"order", g.gapOrder.toString()},
                         {"points", pts}});
  }
  j["verifiedPairs"] = c.verifiedPairs;
  return j;
}

Json toJson(const OracleReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["points"] = r.points;
  j["pairs"] = r.pairs;
  j["classShape"] = r.shape.toString();
  j["shapeAgrees"] = r.shapeAgrees;
  j["mismatchCount"] = r.mismatchCount;
  j["monotonicityViolations"] = r.monotonicityViolations;
  j["mismatches"] = Json::array();
  for (const auto& m : r.mismatches)
    j["mismatches"].push_back(
        {{"p", toJson(m.p)}, {"q", toJson(m.q)}, {"interval", m.interval.toString()}, {"sameClass", m.sameClass}});
  j["passed"] = r.passed();
  return j;
}

Json evalDocument(const std::string& input) {
  const Evaluation e = evaluate(input);
  Json j = documentHead(input, e);
  if (e.condensation) {
    j["level"] = levelName(*e.level);
    j["flags"] = {{"mergeLeft", e.condensation->mergeLeft}, {"mergeRight", e.condensation->mergeRight}};
  }
  j["profile"] = toJson(profile(e.result));
  return j;
}

Json classifyDocument(const std::string& input) {
  const Evaluation e = evaluate(input);
  Json j = documentHead(input, e);
  j["profile"] = toJson(profile(e.result));
  return j;
}

Json tfaeDocument(const std::string& input) {
  const Evaluation e = evaluate(input);
  Json j = documentHead(input, e);
  j["tfae"] = toJson(checkTFAE(e.result));
  return j;
}

}  // namespace ordertype
