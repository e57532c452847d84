// ordcalc: command-line front end over the C interface.
// Exit codes: 0 ok, 1 a checked property failed, 2 bad input, 3 unsupported.
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordertype/ordertype.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kViolation = 1, kBadInput = 2, kUnsupported = 3 };

struct Failure {
  int code;
};

int exitFor(ot_status s) {
  switch (s) {
    case OT_OK: return kOk;
    case OT_E_INVALID_SAMPLE:
    case OT_E_VERIFICATION: return kViolation;
    case OT_E_SYNTAX:
    case OT_E_ARITY:
    case OT_E_INVALID_ARGUMENT:
    case OT_E_NO_ENDPOINT:
    case OT_E_INVALID_CODE: return kBadInput;
    default: return kUnsupported;
  }
}

// Throws Failure after printing a diagnostic for any non-ok status.
void check(ot_status s) {
  if (s == OT_OK) return;
  std::cerr << "ordcalc: " << ot_status_name(s) << ": " << ot_last_error() << "\n";
  throw Failure{exitFor(s)};
}

struct TermDeleter {
  void operator()(ot_term* t) const { ot_term_free(t); }
};
struct ListDeleter {
  void operator()(ot_terms* l) const { ot_terms_free(l); }
};
using Term = std::unique_ptr<ot_term, TermDeleter>;
using List = std::unique_ptr<ot_terms, ListDeleter>;

std::string take(char* s) {
  std::string out(s);
  ot_string_free(s);
  return out;
}

Term parseTerm(const std::string& text) {
  ot_term* t = nullptr;
  check(ot_term_parse(text.c_str(), &t));
  return Term(t);
}

std::string show(const ot_term* t) {
  char* s = nullptr;
  check(ot_term_string(t, &s));
  return take(s);
}

ot_level parseLevel(const std::string& s) { return s == "fc" ? OT_FINITE : OT_COUNTABLE; }

struct Options {
  bool json = false;
  std::string expr;
  std::string structure;
  std::vector<std::string> gens;
  int depth = 2;
  std::uint64_t seed = ot_default_seed();
  std::size_t max = 8;
  std::string level = "cc";
  std::string format = "csv";
  std::size_t samples = 500;
  std::size_t pairs = 1000;
};

void printProfile(const Json& p) {
  std::cout << "cardinality     " << p["card"].get<std::string>() << "\n"
            << "cofinality      " << p["cofin"].get<std::string>() << "\n"
            << "coinitiality    " << p["coin"].get<std::string>() << "\n"
            << "first / last    " << p["hasFirst"] << " / " << p["hasLast"] << "\n";
  for (const char* level : {"fc", "cc"}) {
    const Json& l = p[level];
    std::cout << level << ": condenses to one " << l["condensesToOne"] << ", right identity " << l["rightIdentity"]
              << ", small head " << l["smallHead"] << ", small tail " << l["smallTail"] << "\n";
  }
}

int runEval(const Options& o) {
  char* raw = nullptr;
  check(ot_eval_json(o.expr.c_str(), &raw));
  const Json doc = Json::parse(take(raw));
  if (o.json) std::cout << doc.dump(2) << "\n";
  else std::cout << doc["result"].get<std::string>() << "\n";
  return kOk;
}

int runClassify(const Options& o) {
  char* raw = nullptr;
  check(ot_classify_json(o.expr.c_str(), &raw));
  const Json doc = Json::parse(take(raw));
  if (o.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << doc["normalized"].get<std::string>() << "\n";
    printProfile(doc["profile"]);
  }
  return kOk;
}

int runTfae(const Options& o) {
  char* raw = nullptr;
  check(ot_tfae_json(o.expr.c_str(), &raw));
  const Json doc = Json::parse(take(raw));
  const Json& r = doc["tfae"];
  if (o.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << doc["normalized"].get<std::string>() << "\n"
              << "cofinality form   " << r["cofinalityForm"] << "\n"
              << "tail form         " << r["tailForm"] << "\n"
              << "cardinality form  " << r["cardinalityForm"] << "\n"
              << (r["consistent"].get<bool>() ? "consistent" : "INCONSISTENT") << "\n";
  }
  return r["consistent"].get<bool>() ? kOk : kViolation;
}

List listFrom(const std::vector<std::string>& exprs) {
  List list(ot_terms_new());
  for (const auto& e : exprs) {
    Term t = parseTerm(e);
    check(ot_terms_push(list.get(), t.get()));
  }
  return list;
}

// Sample for a law check drawn from generated terms: right identities for
// the band; for the semigroup, alternately right identities and other
// orders condensing to a point so that every membership pattern occurs.
List generatedSample(const Options& o, bool band, std::string& description) {
  ot_terms* raw = nullptr;
  check(ot_generate(o.depth, o.depth >= 2 ? 40 : 0, o.seed, &raw));
  List all(raw);
  std::vector<const ot_term*> s, x;
  for (std::size_t i = 0; i < ot_terms_size(all.get()); ++i) {
    const ot_term* t = ot_terms_at(all.get(), i);
    int ri = 0, one = 0;
    check(ot_right_identity(t, OT_COUNTABLE, &ri));
    check(ot_condenses_to_one(t, OT_COUNTABLE, &one));
    if (ri) s.push_back(t);
    else if (one) x.push_back(t);
  }
  List sample(ot_terms_new());
  std::size_t si = 0, xi = 0;
  while (ot_terms_size(sample.get()) < o.max && (si < s.size() || (!band && xi < x.size()))) {
    if (si < s.size()) check(ot_terms_push(sample.get(), s[si++]));
    if (!band && xi < x.size() && ot_terms_size(sample.get()) < o.max) check(ot_terms_push(sample.get(), x[xi++]));
  }
  description = "generated depth " + std::to_string(o.depth) + " seed " + std::to_string(o.seed) + ", first " +
                std::to_string(ot_terms_size(sample.get()));
  return sample;
}

int runCheck(const Options& o) {
  const bool band = o.structure == "band";
  std::string description = "given";
  List sample = o.gens.empty() ? generatedSample(o, band, description) : listFrom(o.gens);
  char* raw = nullptr;
  int passed = 0;
  check(band ? ot_check_band_json(sample.get(), description.c_str(), &raw, &passed)
             : ot_check_semigroup_json(sample.get(), description.c_str(), &raw, &passed));
  const Json doc = Json::parse(take(raw));
  if (o.json) {
    std::cout << doc.dump(2) << "\n";
    return passed ? kOk : kViolation;
  }
  std::cout << doc["structure"].get<std::string>() << " over " << doc["terms"].size() << " terms ("
            << doc["sample"].get<std::string>() << ")\n";
  for (const auto& law : doc["laws"]) {
    std::cout << "  " << law["law"].get<std::string>() << ": " << (law["passed"].get<bool>() ? "pass" : "FAIL")
              << " (" << law["checked"] << " checked, " << law["counterexamples"].size() << " refuted, "
              << law["unverified"].size() << " unverified)\n";
    for (const auto& c : law["counterexamples"])
      std::cout << "    " << c["inputs"].dump() << ": " << c["lhs"].get<std::string>() << " vs "
                << c["rhs"].get<std::string>() << "\n";
  }
  if (doc.contains("caseHits")) std::cout << "  membership cases hit: " << doc["caseHits"].dump() << "\n";
  std::cout << (passed ? "PASS" : "FAIL") << "\n";
  return passed ? kOk : kViolation;
}

int runTable(const Options& o) {
  List gens = listFrom(o.gens);
  char* raw = nullptr;
  check(ot_table(gens.get(), parseLevel(o.level), o.format == "json" || o.json ? OT_FORMAT_JSON : OT_FORMAT_CSV, &raw));
  std::cout << take(raw);
  if (o.format == "json" || o.json) std::cout << "\n";
  return kOk;
}

int runEmbed(const Options& o) {
  Term t = parseTerm(o.expr);
  char* raw = nullptr;
  int embeddable = 0;
  check(ot_embed_json(t.get(), o.samples, o.seed, &raw, &embeddable));
  const Json doc = Json::parse(take(raw));
  if (o.json) {
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::cout << show(t.get()) << "\n";
  if (!embeddable) {
    std::cout << "not embeddable: " << doc["reason"].get<std::string>() << "\n";
    return kOk;
  }
  std::size_t fresh = 0;
  for (const auto& s : doc["spine"]) fresh += s["source"].is_string();
  std::cout << "embeds into " << doc["target"].get<std::string>() << " (" << doc["construction"].get<std::string>()
            << ")\n"
            << "  spine points " << doc["spine"].size() << " (" << fresh << " new)\n"
            << "  gap maps     " << doc["gaps"].size() << "\n"
            << "  verified on  " << doc["verifiedPairs"] << " sampled pairs\n";
  return kOk;
}

int runOracle(const Options& o) {
  Term t = parseTerm(o.expr);
  char* raw = nullptr;
  int passed = 0;
  check(ot_oracle_json(t.get(), parseLevel(o.level), o.pairs, o.seed, &raw, &passed));
  const Json doc = Json::parse(take(raw));
  if (o.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << show(t.get()) << " at " << o.level << "\n"
              << "  class shape        " << doc["classShape"].get<std::string>()
              << (doc["shapeAgrees"].get<bool>() ? "" : " (DISAGREES with the quotient)") << "\n"
              << "  pairs              " << doc["pairs"] << " over " << doc["points"] << " points\n"
              << "  mismatches         " << doc["mismatchCount"] << "\n"
              << "  order violations   " << doc["monotonicityViolations"] << "\n";
    for (const auto& m : doc["mismatches"])
      std::cout << "    " << m["p"].dump() << " / " << m["q"].dump() << ": interval " << m["interval"].get<std::string>()
                << ", same class " << m["sameClass"] << "\n";
    std::cout << (passed ? "PASS" : "FAIL") << "\n";
  }
  return passed ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-type calculator: condensations, products and embeddings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print the JSON document (schema 1)");

  const auto levelCheck = CLI::IsMember({"cc", "fc"});

  auto* eval = app.add_subcommand("eval", "Evaluate an expression (cc, fc, mulw, mulf allowed)");
  eval->add_option("expr", o.expr)->required();
  auto* classify = app.add_subcommand("classify", "Profile of an order type");
  classify->add_option("expr", o.expr)->required();
  auto* tfae = app.add_subcommand("tfae", "Check the three right-identity characterisations agree");
  tfae->add_option("expr", o.expr)->required();

  auto* chk = app.add_subcommand("check", "Check the band or semigroup laws");
  chk->add_option("structure", o.structure)->required()->check(CLI::IsMember({"band", "semigroup"}));
  auto* gensOpt = chk->add_option("--gens", o.gens, "Sample expressions")->expected(1, -1);
  chk->add_option("--depth", o.depth, "Generation depth")->excludes(gensOpt);
  chk->add_option("--seed", o.seed, "Generation seed")->excludes(gensOpt);
  chk->add_option("--max", o.max, "Largest generated sample")->excludes(gensOpt);

  auto* table = app.add_subcommand("table", "Product table of generators");
  table->add_option("--gens", o.gens, "Generator expressions")->expected(0, -1);
  table->add_option("--level", o.level)->check(levelCheck);
  table->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* embed = app.add_subcommand("embed", "Embed into the lengthened rational line U");
  embed->add_option("expr", o.expr)->required();
  embed->add_option("--samples", o.samples, "Sampled pairs to verify");
  embed->add_option("--seed", o.seed);

  auto* oracle = app.add_subcommand("oracle", "Compare class indices with the interval oracle");
  oracle->add_option("expr", o.expr)->required();
  oracle->add_option("--pairs", o.pairs);
  oracle->add_option("--seed", o.seed);
  oracle->add_option("--level", o.level)->check(levelCheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*eval) return runEval(o);
    if (*classify) return runClassify(o);
    if (*tfae) return runTfae(o);
    if (*chk) return runCheck(o);
    if (*table) return runTable(o);
    if (*embed) return runEmbed(o);
    if (*oracle) return runOracle(o);
  } catch (const Failure& f) {
    return f.code;
  }
  return kBadInput;
}
