#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gp/core.hpp"
#include "gp/decider.hpp"

namespace gp::harness {

// One decision outcome, as persisted to line-delimited records.
struct ResultRecord {
  std::array<std::string, 3> triple;   // digit words
  std::optional<unsigned> reversals;
  std::optional<std::array<std::pair<int, int>, 3>> tags;
  bool realizable = false;
  std::optional<std::array<std::vector<std::string>, 3>> certificate;  // rationals per line
  std::int64_t runtime_ms = 0;
};

std::string record_to_json(const ResultRecord& r);
ResultRecord record_from_json(const std::string& line);

ResultRecord make_record(const core::Triple& t, const decide::Verdict& v,
                         std::int64_t runtime_ms);

// Reconstructs and re-verifies a realizable record's certificate exactly.
bool reverify_record(const ResultRecord& r);

std::vector<ResultRecord> load_records(const std::string& path);

struct RunOptions {
  int threads = 0;           // 0: GP_THREADS env, else hardware concurrency
  bool short_circuit = true;
  bool use_cache = true;     // forbidden-subpattern pruning (verdict-neutral)
  std::uint64_t start_index = 0;   // resume: skip this many normalized triples
};

struct EnumerationSummary {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t realizable = 0;
  std::uint64_t unrealizable = 0;
  std::uint64_t tagged_instances = 0;
};

// Decides every normalized triple of size n and appends one record per
// triple to `out`, in stream order regardless of worker count.
EnumerationSummary run_enumeration(int n, const std::string& out, const RunOptions& opts = {});

// Equivalence-class keys of every tagged pattern that is unrealizable while
// all its single-element deletions are realizable, for sizes 2..max_n.
// Size 5 and up only behind `long_run` (weeks of compute).
std::vector<core::TaggedPattern> mine_minimal_forbidden(int max_n, bool long_run = false,
                                                        int threads = 0);

// The published table of size-6 forbidden triples: pairs (second, third)
// completing 012345. Validates shape and ordering; throws with the
// offending line number on malformed input.
std::vector<std::pair<std::string, std::string>> parse_forbidden_table(const std::string& path);

std::uint64_t fnv1a64_file(const std::string& path);

struct DiffReport {
  std::vector<std::pair<std::string, std::string>> missing_in_results;
  std::vector<std::pair<std::string, std::string>> extra_in_results;
  bool empty() const { return missing_in_results.empty() && extra_in_results.empty(); }
};

DiffReport compare_forbidden_list(const std::vector<ResultRecord>& results,
                                  const std::string& table_file);

int effective_threads(int requested);

int cli_main(int argc, char** argv);

}  // namespace gp::harness
