#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hitchin/battery.hpp"

using namespace hitchin;

namespace {

long now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Outcome {
  bool pass = false;
  long ms = 0;
  std::string detail;
};

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(HITCHIN_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 8192> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string counts(const SuiteResult& s) {
  return std::to_string(s.checks) + " checks, " + std::to_string(s.failures) + " failures";
}

Outcome timed_suite(const std::function<SuiteResult()>& suite, long budget_ms) {
  Outcome o;
  const long t0 = now_ms();
  const SuiteResult r = suite();
  o.ms = now_ms() - t0;
  o.pass = r.pass() && o.ms < budget_ms;
  o.detail = counts(r);
  if (!r.pass())
    for (const auto& n : r.notes) o.detail += "; " + n;
  if (o.ms >= budget_ms) o.detail += "; over budget " + std::to_string(budget_ms) + "ms";
  return o;
}

}  // namespace

int main() {
  const std::string corpus = HITCHIN_CORPUS_DIR;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("half-dimension and degree-sum identities across all families", [] {
    return timed_suite([] { return dimension_identity(); }, 1000);
  });

  criteria.emplace_back("genus and ramification tables with the quotient discrepancy flagged", [] {
    return timed_suite([] { return genus_tables(); }, 1000);
  });

  criteria.emplace_back("prym dimensions equal base dimensions", [] {
    return timed_suite([] { return prym_cross_check(); }, 1000);
  });

  criteria.emplace_back("eigenline/pushforward round trip on random spectra", [] {
    return timed_suite([] { return correspondence_roundtrip(7); }, 30000);
  });

  criteria.emplace_back("free module over eta^2 - w pushes to [[0,w],[1,0]] and inverts", [] {
    return timed_suite([] { return local_model(); }, 1000);
  });

  criteria.emplace_back("characteristic coefficient patterns, pfaffian cross-check, mutation detected", [] {
    Outcome o;
    const long t0 = now_ms();
    const SuiteResult clean = char_structure(7, Mutation::none);
    const SuiteResult mutated = char_structure(7, Mutation::pfaffian_sign);
    o.ms = now_ms() - t0;
    o.pass = clean.pass() && mutated.failures > 0 && o.ms < 10000;
    o.detail = "clean: " + counts(clean) + "; mutated: " + counts(mutated);
    return o;
  });

  criteria.emplace_back("real form involution table verified on every row", [] {
    return timed_suite([] { return realform_table(); }, 30000);
  });

  criteria.emplace_back("norm law and sigma compatibility on the fixture corpus", [corpus] {
    return timed_suite([corpus] { return norm_fixtures(corpus); }, 5000);
  });

  criteria.emplace_back("parity invariant corpus with violations rejected", [corpus] {
    return timed_suite([corpus] { return parity_fixtures(corpus); }, 1000);
  });

  criteria.emplace_back("verify-all --seed 7 is deterministic and green twice", [] {
    Outcome o;
    const long t0 = now_ms();
    const CliRun first = run_cli("verify-all --seed 7");
    const CliRun second = run_cli("verify-all --seed 7");
    o.ms = now_ms() - t0;
    const bool identical = first.out == second.out && !first.out.empty();
    o.pass = first.exit_code == 0 && second.exit_code == 0 && identical && o.ms < 60000;
    o.detail = "exits " + std::to_string(first.exit_code) + "/" +
               std::to_string(second.exit_code) + (identical ? ", outputs identical" : ", outputs differ");
    return o;
  });

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    if (!o.pass) ++failures;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].first
              << "]: " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ", "
              << o.ms << "ms)\n";
  }
  if (failures == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
