// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <string>

#include "json.hpp"
#include "ordertype/ordertype.h"

namespace {

struct TermDel {
  void operator()(ot_term* t) const { ot_term_free(t); }
};
struct TermsDel {
  void operator()(ot_terms* t) const { ot_terms_free(t); }
};
using Term = std::unique_ptr<ot_term, TermDel>;
using Terms = std::unique_ptr<ot_terms, TermsDel>;

Term parse(const char* text) {
  ot_term* t = nullptr;
  REQUIRE(ot_term_parse(text, &t) == OT_OK);
  return Term(t);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ot_string_free(s);
  return out;
}

std::string str(const ot_term* t) {
  char* s = nullptr;
  REQUIRE(ot_term_string(t, &s) == OT_OK);
  return take(s);
}

Terms list(std::initializer_list<const char*> texts) {
  Terms l(ot_terms_new());
  for (const char* t : texts) REQUIRE(ot_terms_push(l.get(), parse(t).get()) == OT_OK);
  return l;
}

}  // namespace

TEST_CASE("version, seed and status names") {
  CHECK(std::string(ot_version()).size() > 0);
  CHECK(ot_default_seed() == 20240601u);
  CHECK(std::string(ot_status_name(OT_OK)) == "ok");
  CHECK(std::string(ot_status_name(OT_E_SYNTAX)) != std::string(ot_status_name(OT_E_ARITY)));
}

TEST_CASE("parsing, printing and errors") {
  const Term t = parse("1 + w");
  CHECK(str(t.get()) == "w");
  const Term c(ot_term_clone(t.get()));
  CHECK(ot_term_same(t.get(), c.get()) == 1);

  ot_term* bad = nullptr;
  CHECK(ot_term_parse("w + + 1", &bad) == OT_E_SYNTAX);
  CHECK(bad == nullptr);
  CHECK(std::string(ot_last_error()).size() > 0);
  CHECK(ot_last_error_offset() == 4);

  CHECK(ot_term_parse("cc(w, q)", &bad) == OT_E_ARITY);
  CHECK(ot_term_parse(nullptr, &bad) == OT_E_INVALID_ARGUMENT);
  CHECK(ot_term_parse("w", nullptr) == OT_E_INVALID_ARGUMENT);
  CHECK(ot_term_parse("18446744073709551615 + 1", &bad) == OT_E_UNSUPPORTED);
}

TEST_CASE("engine calls") {
  const Term w1p = parse("w1 + 1");
  ot_term* q = nullptr;
  int left = 0, right = 0;
  REQUIRE(ot_condense(w1p.get(), OT_COUNTABLE, &q, &left, &right) == OT_OK);
  CHECK(str(Term(q).get()) == "2");
  CHECK(left == 1);
  CHECK(right == 1);

  ot_term* m = nullptr;
  REQUIRE(ot_multiply(w1p.get(), parse("w1").get(), OT_COUNTABLE, &m) == OT_OK);
  CHECK(str(Term(m).get()) == "w1 + 1");

  ot_term* r = nullptr;
  REQUIRE(ot_reverse(parse("w + 1").get(), &r) == OT_OK);
  CHECK(str(Term(r).get()) == "1 + w*");

  ot_verdict v = OT_UNKNOWN;
  REQUIRE(ot_equal(parse("w* + w").get(), parse("z").get(), &v) == OT_OK);
  CHECK(v == OT_EQUAL);
  REQUIRE(ot_equal(parse("w1").get(), parse("w1*").get(), &v) == OT_OK);
  CHECK(v == OT_NOT_EQUAL);

  int flag = -1;
  REQUIRE(ot_right_identity(parse("w1").get(), OT_COUNTABLE, &flag) == OT_OK);
  CHECK(flag == 1);
  REQUIRE(ot_right_identity(parse("q").get(), OT_COUNTABLE, &flag) == OT_OK);
  CHECK(flag == 0);
  REQUIRE(ot_condenses_to_one(parse("w").get(), OT_FINITE, &flag) == OT_OK);
  CHECK(flag == 1);
  REQUIRE(ot_condenses_to_one(parse("w1 + 1").get(), OT_COUNTABLE, &flag) == OT_OK);
  CHECK(flag == 0);
}

TEST_CASE("term lists and generation") {
  ot_terms* gen = nullptr;
  REQUIRE(ot_generate(2, 20, ot_default_seed(), &gen) == OT_OK);
  const Terms g(gen);
  CHECK(ot_terms_size(g.get()) > 20);
  CHECK(ot_terms_at(g.get(), 0) != nullptr);
  CHECK(ot_terms_at(g.get(), ot_terms_size(g.get())) == nullptr);
}

TEST_CASE("json documents") {
  char* out = nullptr;
  REQUIRE(ot_eval_json("cc(w1 + 1)", &out) == OT_OK);
  const auto e = nlohmann::json::parse(take(out));
  CHECK(e["schema"] == 1);
  CHECK(e["normalized"] == "w1 + 1");
  CHECK(e["result"] == "2");
  CHECK(e["level"] == "cc");
  CHECK(e["flags"]["mergeLeft"] == true);

  REQUIRE(ot_classify_json("w1", &out) == OT_OK);
  const auto c = nlohmann::json::parse(take(out));
  CHECK(c["profile"]["cofin"] == "w1");
  CHECK(c["profile"]["cc"]["rightIdentity"] == true);

  REQUIRE(ot_tfae_json("q", &out) == OT_OK);
  CHECK(nlohmann::json::parse(take(out)).contains("tfae"));

  CHECK(ot_eval_json("cc(", &out) == OT_E_SYNTAX);
}

TEST_CASE("laws, tables, embedding and oracle") {
  char* out = nullptr;
  int passed = 0;
  REQUIRE(ot_check_band_json(list({"w1", "w1*", "U"}).get(), "given", &out, &passed) == OT_OK);
  CHECK(passed == 1);
  CHECK(nlohmann::json::parse(take(out))["structure"] == "band");
  CHECK(ot_check_band_json(list({"w1", "q"}).get(), "given", &out, &passed) == OT_E_INVALID_SAMPLE);

  REQUIRE(ot_check_semigroup_json(list({"w1", "q", "U"}).get(), "given", &out, &passed) == OT_OK);
  CHECK(passed == 1);
  take(out);

  REQUIRE(ot_table(list({"w1", "q"}).get(), OT_COUNTABLE, OT_FORMAT_CSV, &out) == OT_OK);
  CHECK(take(out) == "mulw,q,w1\r\nq,1,q\r\nw1,1,w1\r\n");
  REQUIRE(ot_table(list({"w1", "q"}).get(), OT_COUNTABLE, OT_FORMAT_JSON, &out) == OT_OK);
  CHECK(nlohmann::json::parse(take(out))["level"] == "cc");

  int emb = -1;
  REQUIRE(ot_embed_json(parse("w1").get(), 200, 5, &out, &emb) == OT_OK);
  CHECK(emb == 1);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["target"] == "U");
  CHECK(j["construction"] == "increasing-spine");
  REQUIRE(ot_embed_json(parse("w1 + 1").get(), 200, 5, &out, &emb) == OT_OK);
  CHECK(emb == 0);
  take(out);

  REQUIRE(ot_oracle_json(parse("w1 * z + q").get(), OT_COUNTABLE, 300, 5, &out, &passed) == OT_OK);
  CHECK(passed == 1);
  CHECK(nlohmann::json::parse(take(out))["shapeAgrees"] == true);
}
