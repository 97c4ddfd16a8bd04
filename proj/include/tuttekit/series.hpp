#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tuttekit/multipoly.hpp"

namespace tuttekit {

/// Power series in one formal variable, truncated after degree `order`, with
/// MultiPoly coefficients. Every operation discards terms above `order`.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t order, std::string variable = "Z");
  TruncatedSeries(std::vector<MultiPoly> coefficients, std::string variable = "Z");

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::string& series_variable() const { return var_; }
  const MultiPoly& operator[](std::size_t k) const { return coeffs_.at(k); }
  MultiPoly& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const MultiPoly& scalar);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const MultiPoly& s) { return a *= s; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Coefficient-wise polynomial substitution.
  TruncatedSeries map(const std::map<std::string, MultiPoly>& values) const;

  /// Expands to a polynomial in the series variable (degrees 0..order).
  MultiPoly to_poly() const;

 private:
  std::vector<MultiPoly> coeffs_;
  std::string var_;
};

/// log(A) for A with constant term exactly 1.
TruncatedSeries series_log(const TruncatedSeries& a);
/// exp(D) for D with constant term exactly 0.
TruncatedSeries series_exp(const TruncatedSeries& d);
/// A^C := exp(C log A); A must have constant term exactly 1.
TruncatedSeries series_pow(const TruncatedSeries& base, const MultiPoly& exponent);
/// 1/A for A with constant term exactly 1.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// (a;p)_n = (1-a)(1-pa)...(1-p^{n-1}a). Throws on negative n.
MultiPoly q_pochhammer(const MultiPoly& a, const Rational& p, long n);

/// The quotient (u;p)_inf / (X u;p)_inf as a series in u, truncated at `order`.
/// For |p| > 1 neither infinite product is a formal power series; the quotient
/// is given its meaning through the q-binomial theorem:
///   sum_n (X-1)(X-p)...(X-p^{n-1}) u^n / (p;p)_n.
TruncatedSeries pochhammer_quotient_series(const MultiPoly& x, const Rational& p, std::size_t order,
                                           const std::string& variable = "u");

/// Deformed exponential F(alpha, beta) = sum_n alpha^n beta^{n choose 2} / n!,
/// truncated at `order` in the series variable; `alpha_scale * Z` stands for alpha.
TruncatedSeries deformed_exponential(const MultiPoly& alpha_scale, const MultiPoly& beta,
                                     std::size_t order, const std::string& variable = "Z");

}  // namespace tuttekit
