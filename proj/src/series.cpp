#include "tuttekit/series.hpp"

#include "tuttekit/error.hpp"

namespace tuttekit {

TruncatedSeries::TruncatedSeries(std::size_t order, std::string variable)
    : coeffs_(order + 1), var_(std::move(variable)) {}

TruncatedSeries::TruncatedSeries(std::vector<MultiPoly> coefficients, std::string variable)
    : coeffs_(std::move(coefficients)), var_(std::move(variable)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::invalid_argument, "series truncation orders differ");
  }
}

}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const MultiPoly& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  TruncatedSeries out(n, a.var_);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t k = 0; k <= a.order(); ++k) {
    if (a.coeffs_[k] != b.coeffs_[k]) return false;
  }
  return true;
}

TruncatedSeries TruncatedSeries::map(const std::map<std::string, MultiPoly>& values) const {
  TruncatedSeries out(order(), var_);
  for (std::size_t k = 0; k <= order(); ++k) {
    std::map<std::string, MultiPoly> present;
    for (const auto& [name, v] : values) {
      if (coeffs_[k].has_variable(name)) present.emplace(name, v);
    }
    out.coeffs_[k] = present.empty() ? coeffs_[k] : coeffs_[k].substitute(present);
  }
  return out;
}

MultiPoly TruncatedSeries::to_poly() const {
  MultiPoly out;
  const MultiPoly z = MultiPoly::variable(var_);
  MultiPoly zk(1);
  for (const auto& c : coeffs_) {
    out += c * zk;
    zk *= z;
  }
  return out;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  if (a[0] != MultiPoly(1)) {
    throw Error(ErrorCode::invalid_argument, "series logarithm needs constant term 1");
  }
  // From A' = A L': n a_n = sum_{k=1}^{n} k l_k a_{n-k}.
  const std::size_t n = a.order();
  TruncatedSeries l(n, a.series_variable());
  for (std::size_t m = 1; m <= n; ++m) {
    MultiPoly acc = a[m] * Rational(static_cast<long>(m));
    for (std::size_t k = 1; k < m; ++k) acc -= l[k] * a[m - k] * Rational(static_cast<long>(k));
    l[m] = acc / Rational(static_cast<long>(m));
  }
  return l;
}

TruncatedSeries series_exp(const TruncatedSeries& d) {
  if (!d[0].is_zero()) {
    throw Error(ErrorCode::invalid_argument, "series exponential needs constant term 0");
  }
  // From E' = D' E: n e_n = sum_{k=1}^{n} k d_k e_{n-k}.
  const std::size_t n = d.order();
  TruncatedSeries e(n, d.series_variable());
  e[0] = MultiPoly(1);
  for (std::size_t m = 1; m <= n; ++m) {
    MultiPoly acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (d[k].is_zero() || e[m - k].is_zero()) continue;
      acc += d[k] * e[m - k] * Rational(static_cast<long>(k));
    }
    e[m] = acc / Rational(static_cast<long>(m));
  }
  return e;
}

TruncatedSeries series_pow(const TruncatedSeries& base, const MultiPoly& exponent) {
  if (base[0] != MultiPoly(1)) {
    throw Error(ErrorCode::invalid_argument, "series power needs a base with constant term 1");
  }
  return series_exp(series_log(base) * exponent);
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  if (a[0] != MultiPoly(1)) {
    throw Error(ErrorCode::invalid_argument, "series inverse needs constant term 1");
  }
  const std::size_t n = a.order();
  TruncatedSeries b(n, a.series_variable());
  b[0] = MultiPoly(1);
  for (std::size_t m = 1; m <= n; ++m) {
    MultiPoly acc;
    for (std::size_t k = 1; k <= m; ++k) acc -= a[k] * b[m - k];
    b[m] = acc;
  }
  return b;
}

MultiPoly q_pochhammer(const MultiPoly& a, const Rational& p, long n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "q-Pochhammer length must be nonnegative");
  MultiPoly out(1);
  Rational pk = 1;
  for (long k = 0; k < n; ++k) {
    out *= MultiPoly(1) - a * pk;
    pk *= p;
  }
  return out;
}

TruncatedSeries pochhammer_quotient_series(const MultiPoly& x, const Rational& p, std::size_t order,
                                           const std::string& variable) {
  TruncatedSeries out(order, variable);
  MultiPoly numerator(1);  // (X-1)(X-p)...(X-p^{n-1})
  Rational pk = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    const MultiPoly denom = q_pochhammer(MultiPoly(p), p, static_cast<long>(n));
    out[n] = numerator / denom.constant_term();
    numerator *= x - MultiPoly(pk);
    pk *= p;
  }
  return out;
}

TruncatedSeries deformed_exponential(const MultiPoly& alpha_scale, const MultiPoly& beta,
                                     std::size_t order, const std::string& variable) {
  TruncatedSeries out(order, variable);
  for (std::size_t n = 0; n <= order; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - (n > 0 ? 1 : 0)) / 2);
    out[n] = alpha_scale.pow(static_cast<unsigned>(n)) * beta.pow(pairs) /
             Rational(factorial(static_cast<unsigned>(n)));
  }
  return out;
}

}  // namespace tuttekit
