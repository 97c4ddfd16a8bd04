#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tuttekit/arrangement.hpp"
#include "tuttekit/multipoly.hpp"

namespace tuttekit {

enum class FamilyTag {
  coordinate,
  braid,
  graphical,
  bc,
  dn,
  generic,
  catalan,
  shi,
  threshold,
  all_linear,
  thickened
};

const char* family_tag_name(FamilyTag tag);
FamilyTag family_tag_from_name(const std::string& name);  // throws Error(parse)

using Edge = std::pair<std::size_t, std::size_t>;  // 0-indexed vertices

/// Parameters of a named family:
///   coordinate(n): x_i = 0 in Q^n
///   braid(n): x_i = x_j in Q^n
///   graphical(n, edges): x_i = x_j per edge on n vertices; or K_{m,n} on
///     vertices 0..m-1 and m..m+n-1 when bipartite is set
///   bc(n), dn(n): roots e_i - e_j, then e_i + e_j, then (bc only) e_i
///   generic(n, d): n central hyperplanes in general position in Q^d
///   catalan(n), shi(n): x_i - x_j in {-1,0,1} resp. {0,1} in Q^n
///   threshold(n): x_i + x_j = 0 in Q^n
///   all_linear(p, n): every linear hyperplane of F_p^n
///   thickened(base, k): every hyperplane of base repeated k times
struct FamilySpec {
  FamilyTag tag = FamilyTag::braid;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t m = 0;
  std::uint64_t p = 0;
  unsigned k = 1;
  bool bipartite = false;
  std::vector<Edge> edges;
  std::shared_ptr<const FamilySpec> base;

  std::string describe() const;
};

FamilySpec family(FamilyTag tag, std::size_t n);
FamilySpec generic_family(std::size_t n, std::size_t d);
FamilySpec graphical_family(std::size_t vertices, std::vector<Edge> edges);
FamilySpec bipartite_family(std::size_t m, std::size_t n);
FamilySpec all_linear_family(std::uint64_t p, std::size_t n);
FamilySpec thickened_family(const FamilySpec& base, unsigned k);

std::vector<Edge> complete_bipartite_edges(std::size_t m, std::size_t n);

Arrangement build_family(const FamilySpec& spec);

enum class OracleKind { char_poly, coboundary, tutte };

struct OracleResult {
  OracleKind kind;
  MultiPoly value;
  std::string provenance;
};

/// Closed-form characteristic polynomial, without building the arrangement.
/// Throws Error(invalid_argument) for families without one.
OracleResult oracle_char(const FamilySpec& spec);

/// Coboundary polynomial extracted from a truncated generating function, or
/// from a closed form. Throws Error(invalid_argument) when none applies.
OracleResult oracle_coboundary(const FamilySpec& spec);

/// Closed-form Tutte polynomial (coordinate, generic, and their thickenings).
OracleResult oracle_tutte(const FamilySpec& spec);

/// Rank of the family's arrangement, from its parameters.
std::size_t family_rank(const FamilySpec& spec);

/// T(A^(k)) from T(A) by the uniform thickening formula.
MultiPoly thickened_tutte(const MultiPoly& tutte, std::size_t rank, unsigned k);

/// Checks cob(A^(k); X, Y) = cob(A; X, Y^k) and the Tutte form of the same
/// identity with engines, plus the multivariate identity for the
/// multiplicity vector a (empty: uniform k).
bool thicken_identity_check(const Arrangement& a, unsigned k, const std::vector<unsigned>& multiplicities = {});

}  // namespace tuttekit
