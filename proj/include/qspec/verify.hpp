#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qspec/laurent.hpp"
#include "qspec/root_system.hpp"
#include "qspec/serialize.hpp"

namespace qspec {

enum class VerifyProfile { Quick, Full };

VerifyProfile parse_profile(const std::string& s);
std::string to_string(VerifyProfile p);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  VerifyProfile profile = VerifyProfile::Quick;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  Json to_json() const;
};

/// Replaceable pieces of the pipeline, so a deliberately broken component can
/// be shown to trip the right named check.
struct VerifyHooks {
  std::function<LaurentPoly(int, const Weight&)> quantum_dim_exact;
};

/// Runs the named invariant checks. Each check catches its own exceptions and
/// reports them as a failure. The report holds no timings, so it is
/// byte-stable across runs.
VerifyReport run_verification(VerifyProfile profile, const VerifyHooks& hooks = {});

/// Dominant weights of the given rank with every coordinate in 0..max_coord.
std::vector<Weight> dominant_lattice(int rank, int max_coord);

}  // namespace qspec
