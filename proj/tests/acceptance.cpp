// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "witt/verify.hpp"

using namespace witt;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome suites(const std::vector<std::string>& names, double limit_seconds) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t checks = 0;
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name);
    checks += r.checks;
    if (!r.ok()) {
      out.ok = false;
      out.detail += name + ": " + std::to_string(r.failure_count) + " failures";
      if (!r.failures.empty()) out.detail += " (" + r.failures.front() + ")";
      out.detail += "; ";
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    out.ok = false;
    out.detail += "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s; ";
  }
  out.detail += std::to_string(checks) + " checks, " + std::to_string(secs) + " s";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "ghost homomorphism", [] { return suites({"ghost-hom"}, 60); }},
      {2, "ghost round-trip", [] { return suites({"ghost-roundtrip"}, 0); }},
      {3, "universal polynomial integrality", [] { return suites({"tables"}, 0); }},
      {4, "F/V identities", [] { return suites({"fv"}, 0); }},
      {5, "W_S(Z) structure constants", [] { return suites({"zbasis"}, 0); }},
      {6, "epsilon idempotents", [] { return suites({"eps"}, 0); }},
      {7, "exact sequence", [] { return suites({"exactseq"}, 0); }},
      {8, "maximal-ideal lemma", [] { return suites({"maximal"}, 120); }},
      {9, "phi-module axioms", [] { return suites({"phimod"}, 0); }},
      {10, "tangent functor", [] { return suites({"tangent"}, 0); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %d (%s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
