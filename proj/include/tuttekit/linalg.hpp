#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tuttekit/rational.hpp"

namespace tuttekit {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Rank by fraction-free (Bareiss) elimination over the integers, or by
/// Gaussian elimination mod p when characteristic is a prime p.
std::size_t matrix_rank(IntMatrix m, std::uint64_t characteristic = 0);

/// Determinant of a square integer matrix by Bareiss elimination.
Integer determinant(IntMatrix m);

/// Incrementally built row-echelon basis over Q (fraction-free, rows kept
/// primitive) or over F_p.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t columns, std::uint64_t characteristic = 0);

  /// Adds a row; returns true when the rank grew.
  bool add(std::span<const Integer> row);

  std::size_t rank() const { return rows_.size(); }
  /// Number of basis rows whose pivot lies strictly before `column`.
  std::size_t rank_before(std::size_t column) const;
  /// True when `row` lies in the span of the basis.
  bool spans(std::span<const Integer> row) const;
  std::vector<std::size_t> pivot_columns() const;

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Integer> entries;
  };
  std::vector<Integer> reduce(std::span<const Integer> row) const;

  std::size_t columns_;
  std::uint64_t p_;
  std::vector<Row> rows_;  // sorted by pivot
};

/// Invariant factors (nonzero diagonal of the Smith normal form).
std::vector<Integer> smith_invariants(IntMatrix m);

/// gcd of all k x k minors (the k-th determinantal divisor). k = 0 gives 1.
Integer gcd_of_minors(const IntMatrix& m, std::size_t k);

/// Largest |minor| over all square sizes, or nullopt when the number of minors
/// exceeds `max_minors`.
std::optional<Integer> max_abs_minor(const IntMatrix& m, std::uint64_t max_minors);

/// Calls visit(indices) for each k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace tuttekit
