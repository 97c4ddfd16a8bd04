#pragma once

#include <vector>

#include "tuttekit/arrangement.hpp"
#include "tuttekit/multipoly.hpp"

namespace tuttekit {

/// A flat, identified with the closed set of hyperplanes containing it.
struct Flat {
  IndexSet hyperplanes;
  std::size_t dim;
  std::size_t rank;
};

/// Flats ordered by reverse inclusion of subspaces (inclusion of hyperplane
/// sets), with Moebius values. Flats are sorted by rank, then by mask; index 0
/// is the minimum (the whole space).
class IntersectionPoset {
 public:
  IntersectionPoset(std::vector<Flat> flats, std::vector<std::vector<std::size_t>> covers);

  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }
  const Flat& minimum() const { return flats_.front(); }
  long mobius(std::size_t i) const { return mobius_.at(i); }
  const std::vector<long>& mobius_values() const { return mobius_; }
  /// Indices of the flats covering flat i.
  const std::vector<std::size_t>& covers(std::size_t i) const { return covers_.at(i); }
  bool leq(std::size_t i, std::size_t j) const;
  std::size_t height() const;

  /// Number of flats of each rank.
  std::vector<std::size_t> rank_sizes() const;
  /// Sum of Moebius values on each rank level.
  std::vector<long> mobius_level_sums() const;

 private:
  std::vector<Flat> flats_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<long> mobius_;
};

/// Enumerates every flat by closing central sets rank by rank. Needs at most
/// 64 hyperplanes.
IntersectionPoset intersection_poset(const Arrangement& a);

}  // namespace tuttekit
