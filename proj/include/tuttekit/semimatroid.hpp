#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tuttekit/arrangement.hpp"

namespace tuttekit {

/// (central?, rank) for every subset of an arrangement, filled by a
/// depth-first walk that grows one echelon basis per branch.
class SemimatroidTable {
 public:
  static constexpr std::size_t max_hyperplanes = 24;

  explicit SemimatroidTable(const Arrangement& a);

  std::size_t size() const { return n_; }
  bool central(IndexSet s) const { return central_[s] != 0; }
  /// Rank of the normal vectors of s (the semimatroid rank when s is central).
  int rank(IndexSet s) const { return rank_[s]; }
  int full_rank() const { return rank_[full_set(n_)]; }

  /// Sorted (mask, rank) list of central subsets; equal fingerprints mean
  /// identical semimatroids under the identity labelling.
  std::vector<std::pair<IndexSet, int>> fingerprint() const;

  friend bool operator==(const SemimatroidTable& a, const SemimatroidTable& b) {
    return a.n_ == b.n_ && a.central_ == b.central_ && a.rank_ == b.rank_;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> central_;
  std::vector<std::int8_t> rank_;
};

}  // namespace tuttekit
