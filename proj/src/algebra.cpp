#include "ordertype/algebra.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "ordertype/classify.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/normalize.hpp"

namespace ordertype {

OrderTerm multiply(const OrderTerm& m, const OrderTerm& l, Level level) {
  return cc(normalProduct(normalize(m), normalize(l)), level).quotient;
}

int membershipCase(bool a, bool b, bool c) {
  static constexpr int table[2][2][2] = {
      // a = X
      {{8, 7}, {6, 4}},
      // a = S
      {{5, 3}, {2, 1}},
  };
  return table[a][b][c];
}

bool LawReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.passed(); });
}

bool LawReport::allCasesHit() const {
  return std::all_of(caseHits.begin(), caseHits.end(), [](std::size_t n) { return n > 0; });
}

namespace {

const Level kOmega = Level::Countable;

// Records one equation; Unknown is kept apart from refutation.
void expectEqual(LawResult& law, std::vector<OrderTerm> inputs, const OrderTerm& lhs, const OrderTerm& rhs) {
  ++law.checked;
  const Verdict v = eqOrderType(lhs, rhs);
  if (v == Verdict::Equal) return;
  Counterexample ce{std::move(inputs), lhs, rhs, v};
  (v == Verdict::NotEqual ? law.refuted : law.unverified).push_back(std::move(ce));
}

void expectMember(LawResult& law, std::vector<OrderTerm> inputs, const OrderTerm& product, bool member) {
  ++law.checked;
  if (!member) law.refuted.push_back({std::move(inputs), product, product, Verdict::NotEqual});
}

std::vector<OrderTerm> normalized(const std::vector<OrderTerm>& sample) {
  std::vector<OrderTerm> out;
  for (const auto& t : sample) out.push_back(normalize(t));
  return out;
}

}  // namespace

LawReport checkLeftRegularBand(const std::vector<OrderTerm>& sample, std::string description) {
  LawReport report{"band", std::move(description), normalized(sample), {}, {}};
  const auto& s = report.terms;
  for (const auto& t : s)
    if (!isRightIdentity(t, kOmega))
      throw OrderError(ErrorKind::InvalidSample, t.toString() + " is not a right identity");

  LawResult closure{"closure"}, idem{"idempotence"}, assoc{"associativity"}, regular{"xyx=xy"};
  for (const auto& x : s) {
    expectEqual(idem, {x}, mulOmega(x, x), x);
    for (const auto& y : s) {
      const OrderTerm xy = mulOmega(x, y);
      expectMember(closure, {x, y}, xy, isRightIdentity(xy, kOmega));
      expectEqual(regular, {x, y}, mulOmega(xy, x), xy);
      for (const auto& z : s) expectEqual(assoc, {x, y, z}, mulOmega(xy, z), mulOmega(x, mulOmega(y, z)));
    }
  }
  report.laws = {closure, idem, assoc, regular};
  return report;
}

LawReport checkSemigroup(const std::vector<OrderTerm>& sample, std::string description) {
  LawReport report{"semigroup", std::move(description), normalized(sample), {}, {}};
  const auto& s = report.terms;
  std::vector<bool> inS;
  for (const auto& t : s) {
    if (!cc(t, kOmega).quotient.is(Kind::Single))
      throw OrderError(ErrorKind::InvalidSample, t.toString() + " does not condense to a point");
    inS.push_back(isRightIdentity(t, kOmega));
  }
  LawResult closure{"closure"}, assoc{"associativity"};
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      const OrderTerm xy = mulOmega(s[i], s[j]);
      expectMember(closure, {s[i], s[j]}, xy, cc(xy, kOmega).quotient.is(Kind::Single));
      for (std::size_t k = 0; k < s.size(); ++k) {
        ++report.caseHits[static_cast<std::size_t>(membershipCase(inS[i], inS[j], inS[k]) - 1)];
        expectEqual(assoc, {s[i], s[j], s[k]}, mulOmega(xy, s[k]), mulOmega(s[i], mulOmega(s[j], s[k])));
      }
    }
  }
  report.laws = {closure, assoc};
  return report;
}

ClosureTable closureTable(const std::vector<OrderTerm>& generators, Level level) {
  ClosureTable table;
  table.level = level;
  std::vector<OrderTerm> gens = normalized(generators);
  for (const auto& g : gens)
    if (!cc(g, level).quotient.is(Kind::Single))
      throw OrderError(ErrorKind::InvalidSample, g.toString() + " does not condense to a point");
  std::stable_partition(gens.begin(), gens.end(), [&](const OrderTerm& g) {
    return structuralProfile(g).card.isSmall(level);
  });
  for (const auto& g : gens) table.small.push_back(structuralProfile(g).card.isSmall(level));
  for (const auto& row : gens) {
    std::vector<OrderTerm> cells;
    for (const auto& col : gens) cells.push_back(multiply(row, col, level));
    table.cells.push_back(std::move(cells));
  }
  table.generators = std::move(gens);
  return table;
}

namespace {

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ClosureTable::toCsv() const {
  std::ostringstream out;
  out << csvField(level == Level::Countable ? "mulw" : "mulf");
  for (const auto& g : generators) out << ',' << csvField(g.toString());
  out << "\r\n";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    out << csvField(generators[i].toString());
    for (const auto& cell : cells[i]) out << ',' << csvField(cell.toString());
    out << "\r\n";
  }
  return out.str();
}

std::string ClosureTable::toJson() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["level"] = levelName(level);
  j["generators"] = nlohmann::json::array();
  for (std::size_t i = 0; i < generators.size(); ++i)
    j["generators"].push_back({{"term", generators[i].toString()}, {"small", static_cast<bool>(small[i])}});
  j["cells"] = nlohmann::json::array();
  for (const auto& row : cells) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(cell.toString());
    j["cells"].push_back(r);
  }
  return j.dump(2);
}

}  // namespace ordertype
