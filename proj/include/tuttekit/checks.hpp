#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tuttekit/arrangement.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/finite_field.hpp"
#include "tuttekit/multipoly.hpp"

namespace tuttekit {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;  // empty on success
};

struct CheckOptions {
  bool finite_field = true;      // include the finite field method when affordable
  unsigned permutations = 5;     // activity orders tried besides the listed one
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;      // 0 means default_budget()
  unsigned threads = 1;
};

/// Sum_k c_k = p^d, and the profile at t=1 and t=0 against p^d and chi(p).
CheckResult check_profile_slices(const PointProfile& profile, std::size_t dim, const MultiPoly& chi);

/// Engine agreement, activity order invariance, deletion-contraction per
/// ordinary hyperplane, Whitney, coboundary round trip and evaluations,
/// Moebius recursion, chi shape, multivariate specialization, and (over Q,
/// when affordable) the finite field method with profile slice checks.
std::vector<CheckResult> check_arrangement(const Arrangement& a, const CheckOptions& options = {});

/// check_arrangement on the built family plus every available oracle.
std::vector<CheckResult> check_family(const FamilySpec& spec, const CheckOptions& options = {});

}  // namespace tuttekit
