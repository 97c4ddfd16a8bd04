#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "tuttekit/rational.hpp"

namespace tuttekit {

/// Subsets of an arrangement's hyperplanes, bit i standing for hyperplane i.
/// Subset-indexed queries therefore need at most 64 hyperplanes.
using IndexSet = std::uint64_t;

IndexSet index_set(std::initializer_list<std::size_t> indices);
IndexSet full_set(std::size_t n);
int popcount(IndexSet s);

/// The affine hyperplane {x : normal . x = offset}, or the degenerate "loop"
/// hyperplane (zero normal, zero offset) standing for the whole space.
///
/// Equations are stored in canonical form. Over Q: integer entries with
/// content 1 and a positive leading normal entry. Over F_p: residues in
/// [0, p) with leading normal entry 1.
class Hyperplane {
 public:
  Hyperplane(std::vector<Rational> normal, Rational offset, std::uint64_t characteristic = 0);
  static Hyperplane loop(std::size_t dim, std::uint64_t characteristic = 0);

  std::size_t dim() const { return normal_.size(); }
  const std::vector<Rational>& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_loop() const { return loop_; }

  /// Normal entries followed by the offset, as integers.
  std::vector<Integer> augmented_row() const;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.p_ == b.p_ && a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }

 private:
  std::vector<Rational> normal_;
  Rational offset_;
  std::uint64_t p_;
  bool loop_;
};

/// An ordered list of hyperplanes in k^dim, where k is Q (characteristic 0)
/// or the prime field F_p. The order is the activity order and the order used
/// for reporting.
class Arrangement {
 public:
  explicit Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes = {},
                       std::string label = {}, std::uint64_t characteristic = 0);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  std::uint64_t characteristic() const { return p_; }
  const std::string& label() const { return label_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_.at(i); }

  Arrangement with_label(std::string label) const;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
  std::string label_;
  std::uint64_t p_;
};

struct SubsetRank {
  bool central;
  std::size_t rank;  // rank of the normals; the genuine rank when central
};

SubsetRank subset_rank(const Arrangement& a, IndexSet s);
bool is_central(const Arrangement& a, IndexSet s);
bool is_central(const Arrangement& a);
/// dim V - dim of the intersection. Throws Error(non_central) for non-central s.
std::size_t rank_of(const Arrangement& a, IndexSet s);
/// Rank of the arrangement: the height of its intersection poset, which equals
/// the rank of all normal vectors.
std::size_t rank(const Arrangement& a);

Arrangement delete_hyperplane(const Arrangement& a, std::size_t index);

/// Contraction onto hyperplane `index`. The coordinates of H are the ambient
/// ones minus the pivot coordinate (default: smallest index with a nonzero
/// normal entry), which is solved for and substituted. Hyperplanes equal to H
/// become loops; hyperplanes disjoint from H are dropped.
Arrangement contract(const Arrangement& a, std::size_t index,
                     std::optional<std::size_t> pivot_column = std::nullopt);

/// a.x = c becomes a.x = c x_{d+1} in dimension d+1, followed by x_{d+1} = 0.
Arrangement cone(const Arrangement& a);

/// Quotient of a central arrangement by its common intersection.
Arrangement essentialize(const Arrangement& a);

enum class ElementKind { loop, coloop, ordinary };
const char* element_kind_name(ElementKind k);
ElementKind classify(const Arrangement& a, std::size_t index);

}  // namespace tuttekit
