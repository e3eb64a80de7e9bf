#include "cutgroup/cutgroup.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "chartable.hpp"
#include "corpus.hpp"
#include "cut.hpp"
#include "perm_group.hpp"
#include "verifier.hpp"

using namespace cutgroup;

struct cg_group {
  PermGroup group;
};

namespace {

thread_local std::string last_error;

cg_status fail(cg_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <typename F>
cg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(static_cast<cg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CG_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(CG_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cg_status emit(const std::string& s, char** out) {
  *out = dup(s);
  return CG_OK;
}

VerifyOptions to_options(const cg_verify_options* o) {
  VerifyOptions v;
  if (!o) return v;
  v.suites = o->suites;
  v.max_order = o->max_order == 0 ? UINT64_MAX : o->max_order;
  v.table_cap = o->table_cap;
  v.jobs = o->jobs == 0 ? 1 : o->jobs;
  v.timings = o->timings != 0;
  v.enforce_hypotheses = o->enforce_hypotheses != 0;
  return v;
}

#define CG_REQUIRE(cond) \
  if (!(cond)) return fail(CG_INVALID_ARGUMENT, "null argument: " #cond)

}  // namespace

extern "C" {

const char* cg_last_error(void) { return last_error.c_str(); }

const char* cg_status_name(cg_status s) {
  switch (s) {
    case CG_OK: return "ok";
    case CG_INVALID_ARGUMENT: return "invalid argument";
    case CG_DEGREE_MISMATCH: return "degree mismatch";
    case CG_NOT_A_PERMUTATION: return "not a permutation";
    case CG_CAP_EXCEEDED: return "cap exceeded";
    case CG_NOT_A_MEMBER: return "not a member";
    case CG_NOT_NORMAL: return "not normal";
    case CG_NO_DIXON_PRIME: return "no Dixon prime";
    case CG_SPLITTING_FAILURE: return "eigenspace splitting failure";
    case CG_LIFTING_FAILURE: return "character lifting failure";
    case CG_OVERFLOW: return "arithmetic overflow";
    case CG_PARSE_ERROR: return "parse error";
    case CG_IO_ERROR: return "i/o error";
    case CG_INTERNAL: return "internal error";
    case CG_UNKNOWN_BUILTIN: return "unknown builtin group";
    case CG_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

void cg_string_free(char* s) { std::free(s); }

cg_status cg_group_from_generators(size_t degree, const char* const* cycles, size_t count, const char* name,
                                   cg_group** out) {
  CG_REQUIRE(out);
  CG_REQUIRE(cycles || count == 0);
  return guarded([&] {
    std::vector<Permutation> gens;
    for (size_t i = 0; i < count; ++i) {
      if (!cycles[i]) return fail(CG_INVALID_ARGUMENT, "null generator");
      gens.push_back(Permutation::parse_cycles(degree, cycles[i]));
    }
    *out = new cg_group{PermGroup::from_generators(std::move(gens), degree, name ? name : "")};
    return CG_OK;
  });
}

cg_status cg_group_from_json(const char* text, cg_group** out) {
  CG_REQUIRE(text && out);
  return guarded([&] {
    *out = new cg_group{group_from_json(text)};
    return CG_OK;
  });
}

cg_status cg_group_load(const char* path, cg_group** out) {
  CG_REQUIRE(path && out);
  return guarded([&] {
    *out = new cg_group{load_group(path)};
    return CG_OK;
  });
}

cg_status cg_group_builtin(const char* name, cg_group** out) {
  CG_REQUIRE(name && out);
  return guarded([&] {
    const CorpusEntry* entry = find_corpus_entry(name);
    if (!entry) return fail(CG_UNKNOWN_BUILTIN, std::string("no builtin group named '") + name + "'");
    *out = new cg_group{build_verified(*entry)};
    return CG_OK;
  });
}

void cg_group_free(cg_group* group) { delete group; }

uint64_t cg_group_order(const cg_group* group) { return group ? group->group.order() : 0; }

size_t cg_group_degree(const cg_group* group) { return group ? group->group.degree() : 0; }

const char* cg_group_name(const cg_group* group) { return group ? group->group.name().c_str() : ""; }

cg_status cg_group_is_cut(const cg_group* group, int* is_cut, uint64_t* witness_k) {
  CG_REQUIRE(group);
  return guarded([&] {
    const auto v = is_cut_group(group->group);
    if (is_cut) *is_cut = v.is_cut ? 1 : 0;
    if (witness_k) *witness_k = v.witness_k.value_or(0);
    return CG_OK;
  });
}

cg_status cg_group_is_rational(const cg_group* group, int* is_rational) {
  CG_REQUIRE(group && is_rational);
  return guarded([&] {
    *is_rational = is_rational_group(group->group) ? 1 : 0;
    return CG_OK;
  });
}

cg_status cg_group_analyze(const cg_group* group, cg_format format, char** out) {
  CG_REQUIRE(group && out);
  return guarded([&] {
    return emit(format == CG_FORMAT_TEXT ? analyze_to_text(group->group) : analyze_to_json(group->group), out);
  });
}

cg_status cg_group_chartable(const cg_group* group, cg_format format, char** out) {
  CG_REQUIRE(group && out);
  return guarded([&] {
    const auto table = character_table(group->group);
    return emit(format == CG_FORMAT_TEXT ? character_table_to_text(*table) : character_table_to_json(*table) + "\n",
                out);
  });
}

void cg_verify_options_init(cg_verify_options* options) {
  if (!options) return;
  const VerifyOptions v;
  options->suites = v.suites;
  options->max_order = 0;
  options->table_cap = v.table_cap;
  options->jobs = v.jobs;
  options->timings = 0;
  options->enforce_hypotheses = 1;
}

cg_status cg_suite_from_name(const char* name, unsigned* suite) {
  CG_REQUIRE(name && suite);
  return guarded([&] {
    *suite = parse_suite(name);
    return CG_OK;
  });
}

cg_status cg_verify_corpus(const cg_verify_options* options, cg_format format, char** report, int* passed) {
  CG_REQUIRE(report);
  return guarded([&] {
    const auto rep = verify_corpus(default_corpus(), to_options(options));
    if (passed) *passed = rep.passed() ? 1 : 0;
    return emit(format == CG_FORMAT_TEXT ? report_to_text(rep) : report_to_json(rep), report);
  });
}

cg_status cg_verify_group(const cg_group* group, const cg_verify_options* options, cg_format format, char** report,
                          int* passed) {
  CG_REQUIRE(group && report);
  return guarded([&] {
    VerificationReport rep;
    rep.options = to_options(options);
    rep.records.push_back(verify_group(group->group, "input", rep.options));
    if (passed) *passed = rep.passed() ? 1 : 0;
    return emit(format == CG_FORMAT_TEXT ? report_to_text(rep) : report_to_json(rep), report);
  });
}

cg_status cg_corpus_list(cg_format format, char** out) {
  CG_REQUIRE(out);
  return guarded([&] {
    const auto& corpus = default_corpus();
    return emit(format == CG_FORMAT_TEXT ? corpus_to_text(corpus) : corpus_to_json(corpus), out);
  });
}

}  // extern "C"
