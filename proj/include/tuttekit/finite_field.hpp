#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "tuttekit/arrangement.hpp"
#include "tuttekit/multipoly.hpp"

namespace tuttekit {

/// An arrangement over Q reduced modulo a prime: every equation is the
/// canonical integer equation with entries replaced by residues.
struct ModularArrangement {
  std::uint64_t p = 0;
  std::size_t dim = 0;
  std::vector<std::vector<std::uint32_t>> normals;  // non-loop hyperplanes only
  std::vector<std::uint32_t> offsets;
  std::size_t loops = 0;
  std::size_t n_hyperplanes = 0;
};

enum class ReductionMode { bound, verified };
const char* reduction_mode_name(ReductionMode m);

/// A number B such that no prime p > B divides a nonzero minor of the
/// augmented integer matrix [normals | offsets]. Exact (the largest |minor|)
/// when there are few enough minors, otherwise the Hadamard bound.
Integer hadamard_prime_floor(const Arrangement& a);

/// Reduces mod p. Bound mode requires p > hadamard_prime_floor(a); verified
/// mode compares the full semimatroid over Q and over F_p (at most 16
/// hyperplanes). Throws Error(bad_prime) naming a witness subset.
ModularArrangement reduce_mod_p(const Arrangement& a, std::uint64_t p, ReductionMode mode);

struct PointProfile {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> counts;  // counts[k] = #{points on exactly k hyperplanes}
};

struct ProfileOptions {
  std::uint64_t budget = 0;  // 0 means default_budget()
  unsigned threads = 1;
};

/// 10^8, or the value of TUTTEKIT_BUDGET when set.
std::uint64_t default_budget();

/// Counts points of F_p^d by the number of hyperplanes containing them.
/// Throws Error(budget_exceeded) when p^d exceeds the budget.
PointProfile point_profile(const ModularArrangement& m, ProfileOptions options = {});

/// sum_k c_k t^k
MultiPoly profile_polynomial(const PointProfile& profile, const std::string& variable = "t");

/// "p, c_0, ..., c_n"
void write_profile(std::ostream& os, const PointProfile& profile);

struct FfmOptions {
  std::vector<std::uint64_t> primes;          // empty: choose automatically
  std::optional<ReductionMode> mode;          // unset: bound when affordable, else verified
  std::uint64_t budget = 0;                   // 0 means default_budget()
  unsigned threads = 1;
};

struct FfmResult {
  MultiPoly coboundary;  // in X, Y
  std::size_t rank = 0;
  ReductionMode mode = ReductionMode::bound;
  std::vector<PointProfile> profiles;
};

/// Coboundary polynomial from point profiles at r+2 primes: each profile is
/// divided by p^{d-r}, interpolated in X with degree <= r, and checked at the
/// extra prime.
FfmResult coboundary_ffm(const Arrangement& a, FfmOptions options = {});

}  // namespace tuttekit
