#include "tuttekit/interpolate.hpp"

#include <set>

#include "tuttekit/error.hpp"

namespace tuttekit {

MultiPoly interpolate_in_X(const std::vector<Sample>& samples, unsigned degree_bound,
                           const std::string& variable) {
  if (samples.size() < degree_bound + 1U) {
    throw Error(ErrorCode::invalid_argument,
                "interpolation of degree " + std::to_string(degree_bound) + " needs " +
                    std::to_string(degree_bound + 1) + " samples, got " + std::to_string(samples.size()));
  }
  std::set<Rational> seen;
  for (const auto& s : samples) {
    if (!seen.insert(s.abscissa).second) {
      throw Error(ErrorCode::invalid_argument, "duplicate abscissa " + to_string(s.abscissa));
    }
    if (s.value.has_variable(variable) && s.value.degree(variable) > 0) {
      throw Error(ErrorCode::invalid_argument, "sample value already depends on " + variable);
    }
  }

  // Newton divided differences on the first degree_bound+1 samples.
  const std::size_t m = degree_bound + 1;
  std::vector<MultiPoly> table;
  table.reserve(m);
  for (std::size_t i = 0; i < m; ++i) table.push_back(samples[i].value);
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      const Rational gap = samples[i].abscissa - samples[i - level].abscissa;
      table[i] = (table[i] - table[i - 1]) / gap;
    }
  }
  const MultiPoly x = MultiPoly::variable(variable);
  MultiPoly result = table[m - 1].with_variables({variable});
  for (std::size_t i = m - 1; i-- > 0;) {
    result = result * (x - MultiPoly(samples[i].abscissa)) + table[i];
  }

  for (std::size_t i = m; i < samples.size(); ++i) {
    const MultiPoly predicted = result.substitute(variable, MultiPoly(samples[i].abscissa));
    if (predicted != samples[i].value) {
      throw Error(ErrorCode::inconsistent,
                  "sample at " + to_string(samples[i].abscissa) +
                      " disagrees with the interpolant (degree bound or reduction failure)");
    }
  }
  return result;
}

}  // namespace tuttekit
