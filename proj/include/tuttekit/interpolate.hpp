#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tuttekit/multipoly.hpp"

namespace tuttekit {

struct Sample {
  Rational abscissa;
  MultiPoly value;
};

/// The unique polynomial of degree <= degree_bound in `variable` whose value at
/// each abscissa is the given polynomial (in the other variables). The first
/// degree_bound+1 samples determine it; any further samples must agree.
///
/// Throws Error(invalid_argument) on duplicate abscissae or too few samples,
/// and Error(inconsistent) when an extra sample disagrees.
MultiPoly interpolate_in_X(const std::vector<Sample>& samples, unsigned degree_bound,
                           const std::string& variable = "X");

}  // namespace tuttekit
