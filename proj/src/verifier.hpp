#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "perm_group.hpp"

namespace cutgroup {

enum Suite : unsigned {
  suite_theorem = 1U,
  suite_trichotomy = 2U,
  suite_proof = 4U,
  suite_equivalence = 8U,
  suite_all = 15U,
};

// Accepts "theorem", "trichotomy", "proof", "equivalence" or "all".
unsigned parse_suite(const std::string& name);

struct VerifyOptions {
  unsigned suites = suite_all;
  std::uint64_t max_order = UINT64_MAX;
  // Checks that need the character table of a group above this order are skipped.
  std::uint64_t table_cap = 2000;
  unsigned jobs = 1;
  bool timings = false;
  // When false, proof-step checks also run on groups outside their hypothesis.
  bool enforce_hypotheses = true;
};

enum class CheckStatus { pass, fail, skipped };

const char* status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string claim;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;  // witness on failure, reason when skipped
  double seconds = 0;
};

enum class OrderShape { three_group, three_times_seven_power, seven_times_three_power, other };

const char* shape_name(OrderShape s);
// Order 21 counts as 3 * 7^a; 7 * 3^b needs b >= 2.
OrderShape classify_order(std::uint64_t order);

struct CutWitness {
  std::size_t class_index;
  std::string representative;
  std::uint64_t element_order;
  std::uint64_t k;
};

struct GroupRecord {
  std::string name;
  std::string family;
  std::uint64_t order = 0;
  bool odd = false;
  std::optional<bool> is_cut;            // conjugacy criterion
  std::optional<bool> is_cut_character;  // character criterion, when computed
  std::optional<bool> is_rational;
  std::optional<CutWitness> witness;
  std::optional<bool> sylow3_cut;
  std::optional<bool> core3_cut;
  std::optional<std::string> shape;
  std::optional<bool> trichotomy_ok;
  std::vector<CheckResult> checks;
  std::optional<std::string> error;
  double seconds = 0;

  bool failed() const;
};

struct VerificationReport {
  VerifyOptions options;
  std::vector<GroupRecord> records;

  std::size_t count(CheckStatus s) const;
  std::size_t errors() const;
  bool passed() const;  // no failed check and no error
};

GroupRecord verify_group(const PermGroup& group, const std::string& family, const VerifyOptions& options);

// Individual suites; each appends its checks to the record.
void verify_theorem(const PermGroup& group, GroupRecord& record, const VerifyOptions& options);
void verify_trichotomy(const PermGroup& group, GroupRecord& record, const VerifyOptions& options);
void verify_proof_steps(const PermGroup& group, GroupRecord& record, const VerifyOptions& options);
void verify_equivalence(const PermGroup& group, GroupRecord& record, const VerifyOptions& options);

// Entries above options.max_order are left out. Records keep corpus order
// for any number of jobs.
VerificationReport verify_corpus(const std::vector<CorpusEntry>& entries, const VerifyOptions& options);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

// Cut verdicts and a structure summary of one group.
std::string analyze_to_json(const PermGroup& group);
std::string analyze_to_text(const PermGroup& group);

std::string corpus_to_json(const std::vector<CorpusEntry>& entries);
std::string corpus_to_text(const std::vector<CorpusEntry>& entries);

}  // namespace cutgroup
