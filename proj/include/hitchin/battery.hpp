#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hitchin {

// Deliberate defect injected into the battery's own cross-checks, used to
// demonstrate that the suite actually detects broken invariants.
enum class Mutation { none, pfaffian_sign };

std::string mutation_name(Mutation m);
Mutation parse_mutation(const std::string& s);

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;

  bool pass() const { return checks > 0 && failures == 0; }
};

SuiteResult dimension_identity();
SuiteResult genus_tables();
SuiteResult prym_cross_check();
SuiteResult local_model();
SuiteResult correspondence_roundtrip(std::uint64_t seed);
SuiteResult char_structure(std::uint64_t seed, Mutation mutation = Mutation::none);
SuiteResult realform_table();
SuiteResult norm_fixtures(const std::string& corpus_dir);
SuiteResult parity_fixtures(const std::string& corpus_dir);

struct BatteryResult {
  std::vector<SuiteResult> suites;

  bool all_pass() const;
  int total_checks() const;
  int total_failures() const;
};

// Every suite in a fixed order. The observer, when given, sees each finished
// suite with its wall-clock milliseconds (reporting only; results carry no
// timing so equal seeds give equal reports).
BatteryResult run_all(std::uint64_t seed, const std::string& corpus_dir,
                      Mutation mutation = Mutation::none,
                      const std::function<void(const SuiteResult&, long)>& observer = {});

}  // namespace hitchin
