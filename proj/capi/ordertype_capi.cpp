#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "ordertype/algebra.hpp"
#include "ordertype/classify.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/equality.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/generate.hpp"
#include "ordertype/ordertype.h"
#include "ordertype/parse.hpp"
#include "ordertype/report.hpp"

struct ot_term {
  ordertype::OrderTerm value;
};

struct ot_terms {
  std::vector<ordertype::OrderTerm> items;
  std::vector<ot_term> views;  // stable borrowed handles, rebuilt on push
};

namespace {

using namespace ordertype;

thread_local std::string lastError;
thread_local std::size_t lastOffset = 0;

ot_status statusOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return OT_E_SYNTAX;
    case ErrorKind::Arity: return OT_E_ARITY;
    case ErrorKind::UnsupportedFragment: return OT_E_UNSUPPORTED;
    case ErrorKind::NoEndpoint: return OT_E_NO_ENDPOINT;
    case ErrorKind::InvalidCode: return OT_E_INVALID_CODE;
    case ErrorKind::InvalidSample: return OT_E_INVALID_SAMPLE;
    case ErrorKind::VerificationFailed: return OT_E_VERIFICATION;
    case ErrorKind::InvalidArgument: return OT_E_INVALID_ARGUMENT;
  }
  return OT_E_INTERNAL;
}

// Runs f, translating exceptions into status codes.
template <class F>
ot_status guard(F&& f) {
  lastError.clear();
  lastOffset = 0;
  try {
    f();
    return OT_OK;
  } catch (const ParseError& e) {
    lastError = e.what();
    lastOffset = e.position();
    return statusOf(e.kind());
  } catch (const OrderError& e) {
    lastError = e.what();
    return statusOf(e.kind());
  } catch (const std::bad_alloc&) {
    lastError = "out of memory";
  } catch (const std::exception& e) {
    lastError = e.what();
  }
  return OT_E_INTERNAL;
}

ot_status nullArgument() {
  lastError = "null argument";
  return OT_E_INVALID_ARGUMENT;
}

char* copyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ot_term* wrap(OrderTerm t) { return new ot_term{std::move(t)}; }

Level levelOf(ot_level level) {
  if (level != OT_FINITE && level != OT_COUNTABLE) throw OrderError(ErrorKind::InvalidArgument, "unknown level");
  return level == OT_FINITE ? Level::Finite : Level::Countable;
}

void rebuildViews(ot_terms* list) {
  list->views.clear();
  list->views.reserve(list->items.size());
  for (const auto& t : list->items) list->views.push_back(ot_term{t});
}

}  // namespace

extern "C" {

const char* ot_version(void) { return "1.0.0"; }
uint64_t ot_default_seed(void) { return kDefaultSeed; }

const char* ot_status_name(ot_status status) {
  switch (status) {
    case OT_OK: return "ok";
    case OT_E_SYNTAX: return "syntax";
    case OT_E_ARITY: return "arity";
    case OT_E_UNSUPPORTED: return "unsupported-fragment";
    case OT_E_NO_ENDPOINT: return "no-endpoint";
    case OT_E_INVALID_CODE: return "invalid-code";
    case OT_E_INVALID_SAMPLE: return "invalid-sample";
    case OT_E_VERIFICATION: return "verification-failed";
    case OT_E_INVALID_ARGUMENT: return "invalid-argument";
    case OT_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ot_last_error(void) { return lastError.c_str(); }
size_t ot_last_error_offset(void) { return lastOffset; }
void ot_string_free(char* s) { std::free(s); }

ot_status ot_term_parse(const char* text, ot_term** out) {
  if (!text || !out) return nullArgument();
  return guard([&] { *out = wrap(parse(text)); });
}

ot_term* ot_term_clone(const ot_term* t) { return t ? new ot_term{t->value} : nullptr; }
void ot_term_free(ot_term* t) { delete t; }

ot_status ot_term_string(const ot_term* t, char** out) {
  if (!t || !out) return nullArgument();
  return guard([&] { *out = copyString(t->value.toString()); });
}

int ot_term_same(const ot_term* a, const ot_term* b) { return a && b && a->value == b->value; }

ot_status ot_condense(const ot_term* t, ot_level level, ot_term** quotient, int* merge_left, int* merge_right) {
  if (!t || !quotient) return nullArgument();
  return guard([&] {
    const CondResult r = cc(t->value, levelOf(level));
    if (merge_left) *merge_left = r.mergeLeft;
    if (merge_right) *merge_right = r.mergeRight;
    *quotient = wrap(r.quotient);
  });
}

ot_status ot_multiply(const ot_term* m, const ot_term* l, ot_level level, ot_term** out) {
  if (!m || !l || !out) return nullArgument();
  return guard([&] { *out = wrap(multiply(m->value, l->value, levelOf(level))); });
}

ot_status ot_reverse(const ot_term* t, ot_term** out) {
  if (!t || !out) return nullArgument();
  return guard([&] { *out = wrap(reverse(t->value)); });
}

ot_status ot_equal(const ot_term* a, const ot_term* b, ot_verdict* out) {
  if (!a || !b || !out) return nullArgument();
  return guard([&] {
    switch (eqOrderType(a->value, b->value)) {
      case Verdict::Equal: *out = OT_EQUAL; break;
      case Verdict::NotEqual: *out = OT_NOT_EQUAL; break;
      case Verdict::Unknown: *out = OT_UNKNOWN; break;
    }
  });
}

ot_status ot_right_identity(const ot_term* t, ot_level level, int* out) {
  if (!t || !out) return nullArgument();
  return guard([&] { *out = profile(t->value).at(levelOf(level)).rightIdentity; });
}

ot_status ot_condenses_to_one(const ot_term* t, ot_level level, int* out) {
  if (!t || !out) return nullArgument();
  return guard([&] { *out = profile(t->value).at(levelOf(level)).condensesToOne; });
}

ot_terms* ot_terms_new(void) { return new (std::nothrow) ot_terms(); }
void ot_terms_free(ot_terms* list) { delete list; }

ot_status ot_terms_push(ot_terms* list, const ot_term* t) {
  if (!list || !t) return nullArgument();
  return guard([&] {
    list->items.push_back(t->value);
    rebuildViews(list);
  });
}

size_t ot_terms_size(const ot_terms* list) { return list ? list->items.size() : 0; }

const ot_term* ot_terms_at(const ot_terms* list, size_t index) {
  return list && index < list->views.size() ? &list->views[index] : nullptr;
}

ot_status ot_generate(int depth, size_t random_count, uint64_t seed, ot_terms** out) {
  if (!out) return nullArgument();
  return guard([&] {
    if (depth < 0) throw OrderError(ErrorKind::InvalidArgument, "depth must be non-negative");
    auto list = std::make_unique<ot_terms>();
    list->items = generateTerms({.depth = depth, .randomCount = random_count, .seed = seed});
    rebuildViews(list.get());
    *out = list.release();
  });
}

ot_status ot_eval_json(const char* expr, char** json) {
  if (!expr || !json) return nullArgument();
  return guard([&] { *json = copyString(evalDocument(expr).dump(2)); });
}

ot_status ot_classify_json(const char* expr, char** json) {
  if (!expr || !json) return nullArgument();
  return guard([&] { *json = copyString(classifyDocument(expr).dump(2)); });
}

ot_status ot_tfae_json(const char* expr, char** json) {
  if (!expr || !json) return nullArgument();
  return guard([&] { *json = copyString(tfaeDocument(expr).dump(2)); });
}

ot_status ot_check_band_json(const ot_terms* sample, const char* description, char** json, int* passed) {
  if (!sample || !json) return nullArgument();
  return guard([&] {
    const LawReport r = checkLeftRegularBand(sample->items, description ? description : "given");
    if (passed) *passed = r.passed();
    *json = copyString(toJson(r).dump(2));
  });
}

ot_status ot_check_semigroup_json(const ot_terms* sample, const char* description, char** json, int* passed) {
  if (!sample || !json) return nullArgument();
  return guard([&] {
    const LawReport r = checkSemigroup(sample->items, description ? description : "given");
    if (passed) *passed = r.passed();
    *json = copyString(toJson(r).dump(2));
  });
}

ot_status ot_table(const ot_terms* generators, ot_level level, ot_format format, char** out) {
  if (!generators || !out) return nullArgument();
  return guard([&] {
    const ClosureTable table = closureTable(generators->items, levelOf(level));
    *out = copyString(format == OT_FORMAT_JSON ? table.toJson() : table.toCsv());
  });
}

ot_status ot_embed_json(const ot_term* t, size_t samples, uint64_t seed, char** json, int* embeddable) {
  if (!t || !json) return nullArgument();
  return guard([&] {
    const EmbedResult r = embedIntoU(t->value, samples, seed);
    if (embeddable) *embeddable = r.embeddable;
    *json = copyString(toJson(r).dump(2));
  });
}

ot_status ot_oracle_json(const ot_term* t, ot_level level, size_t pairs, uint64_t seed, char** json, int* passed) {
  if (!t || !json) return nullArgument();
  return guard([&] {
    const OracleReport r = checkOracle(t->value, levelOf(level), pairs, seed);
    if (passed) *passed = r.passed();
    *json = copyString(toJson(r).dump(2));
  });
}

}  // extern "C"
