#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witt/finite_witt.hpp"
#include "witt/phi_modules.hpp"

namespace witt {

struct SuiteOptions {
  std::uint64_t max = 0;      // suite-specific size bound; 0 picks the default
  std::size_t samples = 0;    // per-case sample count; 0 picks the default
  std::uint64_t seed = 20240611;
  Execution exec = Execution::Parallel;
};

struct SuiteReport {
  std::string name;
  std::uint64_t max = 0;
  std::uint64_t cases = 0;
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  // first few messages
  double seconds = 0;
  bool ok() const { return failure_count == 0; }
};

std::vector<std::string> suite_names();
/// Default `max` of a suite.
std::uint64_t suite_default_max(const std::string& name);
/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// Objects used by the phi-module suites: unit, 1(-b) for b = 1..3, two direct
/// sums, then all pairwise tensors and internal Homs and all duals.
std::vector<std::pair<std::string, PhiObject>> phi_base_objects(const TruncationSet& Q, const Ring& R);
std::vector<std::pair<std::string, PhiObject>> phi_family(const TruncationSet& Q, const Ring& R);

/// The smallest c > 0 such that the element with ghost components c * m lies in W_Q(Z).
mpz_class linear_ghost_multiplier(const TruncationSet& Q);

/// Endomorphism of unit + 1(-1) with diagonal (k1, k2) and corner c * g, where
/// g has ghost components linear_ghost_multiplier(Q) * m.
PhiMorphism triangular_endomorphism(const TruncationSet& Q, const Ring& R, const mpz_class& k1,
                                    const mpz_class& k2, const mpz_class& c);

}  // namespace witt
