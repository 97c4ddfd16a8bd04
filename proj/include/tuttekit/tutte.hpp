#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tuttekit/arrangement.hpp"
#include "tuttekit/multipoly.hpp"
#include "tuttekit/poset.hpp"
#include "tuttekit/semimatroid.hpp"

namespace tuttekit {

enum class Engine { subset, delcon, activity, finite_field };
const char* engine_name(Engine e);

struct TutteResult {
  MultiPoly tutte;  // in x, y
  std::size_t rank = 0;
  std::size_t n_hyperplanes = 0;
  Engine engine = Engine::subset;
};

struct BasisActivity {
  IndexSet basis;
  unsigned internal;
  unsigned external;
};
using ActivityCertificate = std::vector<BasisActivity>;

/// Sum over central subsets B of (x-1)^{r-r(B)} (y-1)^{|B|-r(B)}.
TutteResult tutte_subset(const Arrangement& a);
TutteResult tutte_subset(const SemimatroidTable& table);

struct DelconOptions {
  /// Cache results keyed by the semimatroid fingerprint (up to 16 hyperplanes).
  bool memoize = false;
};

/// Deletion-contraction on the last ordinary hyperplane; loops contribute y,
/// and an arrangement of only coloops is x^n.
TutteResult tutte_delcon(const Arrangement& a, DelconOptions options = {});

/// Sum over bases of x^{i(B)} y^{e(B)} for the given linear order
/// (order[k] = index of the k-th hyperplane; empty means the listed order).
std::pair<TutteResult, ActivityCertificate> tutte_activity(const Arrangement& a,
                                                           std::span<const std::size_t> order = {});
std::pair<TutteResult, ActivityCertificate> tutte_activity(const SemimatroidTable& table,
                                                           std::span<const std::size_t> order = {});

/// Moebius route: sum over flats of mu(F) q^{dim F}; zero when a loop is present
/// (the complement of an arrangement containing the whole space is empty).
MultiPoly char_poly_mobius(const Arrangement& a);
MultiPoly char_poly_mobius(const Arrangement& a, const IntersectionPoset& poset);
/// Whitney route: (-1)^r q^{d-r} T(1-q, 0).
MultiPoly char_poly_whitney(const MultiPoly& tutte, std::size_t rank, std::size_t dim);
/// Computes both routes and throws Error(internal) if they disagree.
MultiPoly char_poly(const Arrangement& a);

/// (Y-1)^r T((X+Y-1)/(Y-1), Y), expanded.
MultiPoly coboundary_from_tutte(const MultiPoly& tutte, std::size_t rank);
/// Inverse transform: T(x,y) = cob((x-1)(y-1), y) / (y-1)^r.
MultiPoly tutte_from_coboundary(const MultiPoly& coboundary, std::size_t rank);

/// Evaluations read off the characteristic and Tutte polynomials.
struct ScalarInvariants {
  Integer regions;                        // (-1)^d chi(-1)
  Integer bounded_regions;                // (-1)^r chi(1)
  MultiPoly poincare;                     // (-q)^d chi(-1/q)
  MultiPoly complement_size;              // q -> chi(q) over F_q
  Integer general_position_bounded;       // T(1,0)
  std::optional<Integer> beta;            // [x^1 y^0] T, only for n >= 2
  std::optional<Integer> beta_y;          // [x^0 y^1] T, only for n >= 2
};

ScalarInvariants scalar_invariants(const Arrangement& a);
ScalarInvariants scalar_invariants(const MultiPoly& tutte, const MultiPoly& chi, std::size_t dim,
                                   std::size_t rank, std::size_t n_hyperplanes);

struct ChiShapeReport {
  std::vector<Integer> magnitudes;  // a_0, a_1, ... with chi = sum (-1)^i a_i q^{D-i}
  bool alternating = true;
  bool unimodal = true;
  bool log_concave = true;
  std::vector<std::string> violations;
  bool ok() const { return alternating && unimodal && log_concave; }
};

ChiShapeReport validate_chi_shape(const MultiPoly& chi, const std::string& variable = "q");

/// Expands sum counts[i][j] (x-1)^i (y-1)^j.
MultiPoly expand_shifted(const std::vector<std::vector<Integer>>& counts, const std::string& xv = "x",
                         const std::string& yv = "y");

}  // namespace tuttekit
