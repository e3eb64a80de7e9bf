#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cutgroup/cutgroup.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
};

[[noreturn]] void die(int code, const std::string& what) {
  std::cerr << "cutgroup: " << what << "\n";
  throw Failure{code};
}

void check(cg_status s, int code, const std::string& what) {
  if (s != CG_OK) die(code, what + ": " + cg_status_name(s) + ": " + cg_last_error());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cg_string_free(s);
  return out;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("CUTGROUP_FIXTURE_DIR"); env && *env) return env;
  return CUTGROUP_DEFAULT_FIXTURE_DIR;
}

class Group {
 public:
  explicit Group(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
      check(cg_group_builtin(spec.substr(8).c_str(), &g_), kExitUsage, "cannot build " + spec);
      return;
    }
    fs::path path(spec);
    if (!fs::exists(path) && path.is_relative()) {
      const fs::path alt = fs::path(fixture_dir()) / path;
      if (fs::exists(alt)) path = alt;
    }
    check(cg_group_load(path.string().c_str(), &g_), kExitUsage, "cannot load " + spec);
  }
  ~Group() { cg_group_free(g_); }
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;
  const cg_group* get() const { return g_; }

 private:
  cg_group* g_ = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of cut properties of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  unsigned jobs = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", jobs, "Worker threads for corpus runs")->check(CLI::Range(1U, 256U));

  std::string group_spec;
  auto* analyze = app.add_subcommand("analyze", "Cut verdicts and structure summary of one group");
  analyze->add_option("group", group_spec, "Group JSON file or builtin:NAME")->required();

  auto* chartable = app.add_subcommand("chartable", "Exact character table of one group");
  chartable->add_option("group", group_spec, "Group JSON file or builtin:NAME")->required();

  cg_verify_options vopt;
  cg_verify_options_init(&vopt);
  std::vector<std::string> suites{"all"};
  auto* verify = app.add_subcommand("verify", "Run verification suites over the corpus or one group");
  verify->add_option("--max-order", vopt.max_order, "Skip corpus groups above this order");
  verify->add_option("--suite", suites, "theorem, trichotomy, proof, equivalence or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"theorem", "trichotomy", "proof", "equivalence", "all"}));
  verify->add_option("--table-cap", vopt.table_cap, "Largest group order whose character table is computed");
  verify->add_flag("--timings", vopt.timings, "Include wall-clock seconds in the report");
  bool force = false;
  verify->add_flag("--no-hypotheses", force, "Run proof steps even on groups that fail their hypotheses");
  verify->add_option("--group", group_spec, "Verify this group instead of the corpus");

  auto* corpus = app.add_subcommand("corpus", "Built-in corpus");
  corpus->require_subcommand(1);
  corpus->add_subcommand("list", "List corpus groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  const cg_format fmt = format == "json" ? CG_FORMAT_JSON : CG_FORMAT_TEXT;
  try {
    char* out = nullptr;
    if (*analyze) {
      Group g(group_spec);
      check(cg_group_analyze(g.get(), fmt, &out), kExitFail, "analysis failed");
      std::cout << take(out);
      return 0;
    }
    if (*chartable) {
      Group g(group_spec);
      check(cg_group_chartable(g.get(), fmt, &out), kExitFail, "character table failed");
      std::cout << take(out);
      return 0;
    }
    if (*verify) {
      vopt.suites = 0;
      for (const auto& s : suites) {
        unsigned bit = 0;
        check(cg_suite_from_name(s.c_str(), &bit), kExitUsage, "bad suite");
        vopt.suites |= bit;
      }
      vopt.jobs = jobs;
      vopt.enforce_hypotheses = force ? 0 : 1;
      int passed = 0;
      if (!group_spec.empty()) {
        Group g(group_spec);
        check(cg_verify_group(g.get(), &vopt, fmt, &out, &passed), kExitFail, "verification failed");
      } else {
        check(cg_verify_corpus(&vopt, fmt, &out, &passed), kExitFail, "verification failed");
      }
      std::cout << take(out);
      return passed ? 0 : kExitFail;
    }
    check(cg_corpus_list(fmt, &out), kExitFail, "corpus listing failed");
    std::cout << take(out);
    return 0;
  } catch (const Failure& f) {
    return f.code;
  }
}
