#include "ordertype/ledger.hpp"

#include <json.hpp>
#include <map>

#include "ordertype/errors.hpp"
#include "ordertype/normalize.hpp"
#include "ordertype/parse.hpp"

namespace ordertype {

namespace detail {
extern const std::string_view kLedgerJson;
}

namespace {

Cardinality parseCard(const std::string& s) {
  if (s == "ALEPH0") return Cardinality::aleph0();
  if (s == "ALEPH1") return Cardinality::aleph1();
  if (s == "ALEPH2PLUS") return Cardinality::aleph2Plus();
  throw OrderError(ErrorKind::InvalidArgument, "ledger: bad cardinality " + s);
}

AtomLevelRow parseLevelRow(const nlohmann::json& j) {
  AtomLevelRow row;
  row.smallHead = j.at("smallHead").get<bool>();
  row.smallTail = j.at("smallTail").get<bool>();
  row.quotient = normalize(toTerm(parseExpr(j.at("quotient").get<std::string>())));
  row.mergeLeft = j.at("mergeLeft").get<bool>();
  row.mergeRight = j.at("mergeRight").get<bool>();
  row.note = j.at("note").get<std::string>();
  return row;
}

}  // namespace

std::string_view ledgerText() { return detail::kLedgerJson; }

std::vector<AtomRow> parseLedger(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  std::vector<AtomRow> rows;
  for (const auto& a : doc.at("atoms")) {
    const OrderTerm atom = normalize(toTerm(parseExpr(a.at("atom").get<std::string>())));
    rows.push_back(AtomRow{atom.kind(), parseCard(a.at("card").get<std::string>()),
                           parseCofinality(a.at("cofin").get<std::string>()),
                           parseCofinality(a.at("coin").get<std::string>()),
                           parseLevelRow(a.at("fc")), parseLevelRow(a.at("cc"))});
  }
  return rows;
}

const AtomRow& atomRow(Kind kind) {
  static const std::map<Kind, AtomRow> table = [] {
    std::map<Kind, AtomRow> m;
    for (auto& row : parseLedger(ledgerText())) m.emplace(row.kind, row);
    return m;
  }();
  auto it = table.find(kind);
  if (it == table.end())
    throw OrderError(ErrorKind::InvalidArgument, "no ledger row for " + OrderTerm::atom(kind).toString());
  return it->second;
}

}  // namespace ordertype
