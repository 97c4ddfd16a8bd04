#include "tuttekit/linalg.hpp"

#include <algorithm>

#include "tuttekit/error.hpp"

namespace tuttekit {

namespace {

Integer mod_p(const Integer& v, std::uint64_t p) {
  Integer r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r;
}

void make_primitive(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& v : row) {
    if (v != 0) g = gcd(g, v);
  }
  if (g > 1) {
    for (auto& v : row) v /= g;
  }
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  Integer inv;
  const Integer aa(static_cast<unsigned long>(a % p));
  if (mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), Integer(static_cast<unsigned long>(p)).get_mpz_t()) == 0) {
    throw Error(ErrorCode::invalid_argument, "value has no inverse mod " + std::to_string(p));
  }
  return inv.get_ui();
}

std::size_t matrix_rank(IntMatrix m, std::uint64_t characteristic) {
  if (m.empty()) return 0;
  EchelonBasis basis(m.front().size(), characteristic);
  for (const auto& row : m) basis.add(row);
  return basis.rank();
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact by Sylvester's identity
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

EchelonBasis::EchelonBasis(std::size_t columns, std::uint64_t characteristic)
    : columns_(columns), p_(characteristic) {}

std::vector<Integer> EchelonBasis::reduce(std::span<const Integer> row) const {
  if (row.size() != columns_) throw Error(ErrorCode::internal, "echelon row length mismatch");
  std::vector<Integer> v(row.begin(), row.end());
  if (p_ != 0) {
    for (auto& x : v) x = mod_p(x, p_);
    for (const auto& b : rows_) {
      if (v[b.pivot] == 0) continue;
      // basis rows are monic at their pivot
      const Integer f = v[b.pivot];
      for (std::size_t j = b.pivot; j < columns_; ++j) v[j] = mod_p(v[j] - f * b.entries[j], p_);
    }
    return v;
  }
  for (const auto& b : rows_) {
    if (v[b.pivot] == 0) continue;
    const Integer f = v[b.pivot];
    const Integer lead = b.entries[b.pivot];
    for (std::size_t j = 0; j < columns_; ++j) v[j] = v[j] * lead - f * b.entries[j];
    make_primitive(v);
  }
  return v;
}

bool EchelonBasis::add(std::span<const Integer> row) {
  std::vector<Integer> v = reduce(row);
  const auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (it == v.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - v.begin());
  if (p_ != 0) {
    const Integer inv(static_cast<unsigned long>(mod_inverse(v[pivot].get_ui(), p_)));
    for (auto& x : v) x = mod_p(x * inv, p_);
  } else if (v[pivot] < 0) {
    for (auto& x : v) x = -x;
  }
  const auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                    [](const Row& r, std::size_t c) { return r.pivot < c; });
  rows_.insert(pos, Row{pivot, std::move(v)});
  return true;
}

std::size_t EchelonBasis::rank_before(std::size_t column) const {
  return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(),
                                                [column](const Row& r) { return r.pivot < column; }));
}

bool EchelonBasis::spans(std::span<const Integer> row) const {
  const auto v = reduce(row);
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows_) out.push_back(r.pivot);
  return out;
}

std::vector<Integer> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::vector<Integer> out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pick the nonzero entry of least absolute value in the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& r : m) std::swap(r[t], r[pc]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      const Integer q = m[i][t] / m[t][t];
      if (q != 0) {
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      }
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const Integer q = m[t][j] / m[t][t];
      if (q != 0) {
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      }
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // The pivot must divide every remaining entry; otherwise fold a row in.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
      }
    }
    if (!divides) continue;
    out.push_back(abs(m[t][t]));
    ++t;
  }
  return out;
}

Integer gcd_of_minors(const IntMatrix& m, std::size_t k) {
  if (k == 0) return 1;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  Integer g = 0;
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& ri) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& ci) {
      IntMatrix sub(k, std::vector<Integer>(k));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
      }
      g = gcd(g, determinant(std::move(sub)));
    });
  });
  return g;
}

std::optional<Integer> max_abs_minor(const IntMatrix& m, std::uint64_t max_minors) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  Integer count = 0;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) count += binomial(rows, k) * binomial(cols, k);
  if (count > Integer(static_cast<unsigned long>(max_minors))) return std::nullopt;
  Integer best = 0;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& ri) {
      for_each_subset(cols, k, [&](const std::vector<std::size_t>& ci) {
        IntMatrix sub(k, std::vector<Integer>(k));
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
        }
        const Integer d = abs(determinant(std::move(sub)));
        if (d > best) best = d;
      });
    });
  }
  return best;
}

}  // namespace tuttekit
