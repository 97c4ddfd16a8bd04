#pragma once

#include <cstdint>
#include <vector>

#include "tuttekit/arrangement.hpp"
#include "tuttekit/finite_field.hpp"
#include "tuttekit/multipoly.hpp"

namespace tuttekit {

/// Integer vectors in Z^dim, listed in order.
struct VectorConfig {
  std::size_t dim = 0;
  std::vector<std::vector<Integer>> vectors;

  std::size_t size() const { return vectors.size(); }
};

/// Rank of the vectors indexed by s.
std::size_t config_rank(const VectorConfig& c, IndexSet s);
std::size_t config_rank(const VectorConfig& c);

/// gcd of the full-rank minors of the matrix with columns s; 1 for s empty.
Integer multiplicity(const VectorConfig& c, IndexSet s);
/// The same number read off the Smith normal form.
Integer multiplicity_smith(const VectorConfig& c, IndexSet s);

/// sum over B of m(B) (x-1)^{r-r(B)} (y-1)^{|B|-r(B)}. Each multiplicity is
/// computed both ways and compared.
MultiPoly arithmetic_tutte(const VectorConfig& c);

/// (-1)^r q^{d-r} M(1-q, 0)
MultiPoly arithmetic_char_poly(const MultiPoly& m, std::size_t rank, std::size_t dim);

/// The central arrangement {x : a.x = 0 for a in c}; zero vectors become loops.
Arrangement central_arrangement(const VectorConfig& c);

struct ZonotopeEvaluations {
  Integer volume;           // M(1,1)
  Integer lattice_points;   // M(2,1)
  Integer interior_points;  // M(0,1)
  MultiPoly ehrhart;        // q^r M(1 + 1/q, 1), in q
};

ZonotopeEvaluations zonotope_evaluations(const MultiPoly& m, std::size_t rank);

/// (t-1)^r q^{d-r} M((q+t-1)/(t-1), t), expanded, for symbolic q and t.
MultiPoly toric_profile_polynomial(const MultiPoly& m, std::size_t rank, std::size_t dim);

/// lcm of m(B) over all subsets B.
Integer multiplicity_lcm(const VectorConfig& c);

struct ToricProfile {
  std::uint64_t q = 0;                 // the torus is (F_{q+1}^*)^d
  std::vector<std::uint64_t> counts;   // counts[k] = points on exactly k hypertori
  bool checked = false;                // compared against M (q a multiple of every m(B))
};

/// Counts points of (F_{q+1}^*)^d by the number of hypertori T_a containing
/// them (with multiplicity when vectors repeat). q+1 must be prime. When q is
/// a multiple of multiplicity_lcm(c) the counts are checked against the
/// arithmetic Tutte polynomial, and a disagreement throws Error(internal).
/// For other q the polynomial identity fails in general and the counts are
/// returned unchecked.
ToricProfile toric_point_profile(const VectorConfig& c, std::uint64_t q, ProfileOptions options = {});

/// q^r times the multivariate Tutte polynomial, as a polynomial in q and
/// w_1..w_n (one weight per hyperplane, 1-indexed).
struct MultivariateTutte {
  MultiPoly poly;
  std::size_t rank = 0;
  std::size_t n_hyperplanes = 0;
};

MultivariateTutte multivariate_tutte(const Arrangement& a);

std::string weight_variable(std::size_t index);  // "w_1" for index 0

/// Setting every w_e = w gives sum t_ij (q+w)^i w^{r-i} (w+1)^j; compares both sides.
bool multivariate_specialization_check(const MultivariateTutte& mv, const MultiPoly& tutte);

/// The arrangement with hyperplane e repeated a[e] times (0 removes it),
/// copies kept adjacent.
Arrangement thicken(const Arrangement& a, const std::vector<unsigned>& multiplicities);
Arrangement thicken(const Arrangement& a, unsigned k);

/// (x-1)^{r - r(supp a)} (y-1)^r T(A(a)) == q^r Z~ at q = (x-1)(y-1), w_e = y^{a_e} - 1.
bool thickening_tutte_check(const Arrangement& a, const std::vector<unsigned>& multiplicities);

/// The generating function over all multiplicity vectors, compared as series
/// in a grading variable up to total degree `order`, both sides multiplied by
/// ((x-1)(y-1))^r.
bool thickening_series_check(const Arrangement& a, std::size_t order);

}  // namespace tuttekit
