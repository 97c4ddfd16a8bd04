#include "tuttekit/finite_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

#include "tuttekit/error.hpp"
#include "tuttekit/interpolate.hpp"
#include "tuttekit/linalg.hpp"
#include "tuttekit/semimatroid.hpp"

namespace tuttekit {

namespace {

constexpr std::uint64_t kMaxExactMinors = 200000;

std::string describe_subset(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 64; ++i) {
    if (s >> i & 1) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

std::uint32_t residue(const Rational& v, std::uint64_t p) {
  Integer r = v.get_num() % Integer(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return static_cast<std::uint32_t>(r.get_ui());
}

// p^d, or nullopt when it exceeds limit.
std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t d, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (v > limit / p) return std::nullopt;
    v *= p;
  }
  return v;
}

}  // namespace

const char* reduction_mode_name(ReductionMode m) { return m == ReductionMode::bound ? "bound" : "verified"; }

Integer hadamard_prime_floor(const Arrangement& a) {
  IntMatrix m;
  for (const auto& h : a.hyperplanes()) {
    if (!h.is_loop()) m.push_back(h.augmented_row());
  }
  if (m.empty()) return 1;
  if (auto exact = max_abs_minor(m, kMaxExactMinors)) return std::max<Integer>(*exact, 1);
  std::vector<Integer> norms;
  for (const auto& row : m) {
    Integer s = 0;
    for (const auto& v : row) s += v * v;
    norms.push_back(s);
  }
  std::sort(norms.begin(), norms.end(), std::greater<>());
  const std::size_t k = std::min(norms.size(), a.dim() + 1);
  Integer prod = 1;
  for (std::size_t i = 0; i < k; ++i) prod *= norms[i];
  return sqrt(prod);
}

ModularArrangement reduce_mod_p(const Arrangement& a, std::uint64_t p, ReductionMode mode) {
  if (a.characteristic() != 0) {
    throw Error(ErrorCode::invalid_argument, "reduction mod p needs an arrangement over Q");
  }
  if (!is_prime(p) || p > 0xffffffffULL) {
    throw Error(ErrorCode::bad_prime, std::to_string(p) + " is not a usable prime");
  }
  ModularArrangement m;
  m.p = p;
  m.dim = a.dim();
  m.n_hyperplanes = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Hyperplane& h = a[i];
    if (h.is_loop()) {
      ++m.loops;
      continue;
    }
    std::vector<std::uint32_t> normal;
    bool nonzero = false;
    for (const auto& v : h.normal()) {
      normal.push_back(residue(v, p));
      nonzero = nonzero || normal.back() != 0;
    }
    if (!nonzero) {
      throw Error(ErrorCode::bad_prime, "normal of hyperplane " + std::to_string(i) + " vanishes mod " +
                                            std::to_string(p) + "; witness " + describe_subset(IndexSet{1} << i));
    }
    m.normals.push_back(std::move(normal));
    m.offsets.push_back(residue(h.offset(), p));
  }

  if (mode == ReductionMode::bound) {
    const Integer floor = hadamard_prime_floor(a);
    if (Integer(static_cast<unsigned long>(p)) <= floor) {
      throw Error(ErrorCode::bad_prime, "prime " + std::to_string(p) + " does not exceed the minor bound " +
                                            to_string(floor));
    }
    return m;
  }

  if (a.size() > 16) {
    throw Error(ErrorCode::budget_exceeded, "verified reduction needs at most 16 hyperplanes");
  }
  std::vector<Hyperplane> reduced;
  for (const auto& h : a.hyperplanes()) {
    std::vector<Rational> normal(h.normal().begin(), h.normal().end());
    reduced.emplace_back(std::move(normal), h.offset(), p);
  }
  const Arrangement modular(a.dim(), std::move(reduced), a.label(), p);
  const SemimatroidTable over_q(a);
  const SemimatroidTable over_p(modular);
  const IndexSet limit = IndexSet{1} << a.size();
  for (IndexSet s = 0; s < limit; ++s) {
    if (over_q.central(s) != over_p.central(s) || over_q.rank(s) != over_p.rank(s)) {
      throw Error(ErrorCode::bad_prime, "reduction mod " + std::to_string(p) + " changes subset " +
                                            describe_subset(s) + " (rank " + std::to_string(over_q.rank(s)) +
                                            " -> " + std::to_string(over_p.rank(s)) + ")");
    }
  }
  return m;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("TUTTEKIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw Error(ErrorCode::invalid_argument, std::string("bad TUTTEKIT_BUDGET value: ") + env);
  }
  return 100000000ULL;
}

namespace {

// Counts points whose leading d-1 coordinates have linear index in [begin, end).
void profile_range(const ModularArrangement& m, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& counts) {
  const std::size_t n = m.normals.size();
  const std::uint32_t p = static_cast<std::uint32_t>(m.p);
  const std::size_t d = m.dim;
  std::vector<std::uint32_t> step(n), value(n);
  for (std::size_t j = 0; j < n; ++j) step[j] = m.normals[j][d - 1];
  std::vector<std::uint64_t> coords(d - 1);
  for (std::uint64_t outer = begin; outer < end; ++outer) {
    std::uint64_t rest = outer;
    for (std::size_t k = d - 1; k-- > 0;) {
      coords[k] = rest % p;
      rest /= p;
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t v = p - m.offsets[j];
      for (std::size_t k = 0; k + 1 < d; ++k) v += static_cast<std::uint64_t>(m.normals[j][k]) * coords[k];
      value[j] = static_cast<std::uint32_t>(v % p);
    }
    for (std::uint32_t x = 0; x < p; ++x) {
      std::size_t h = m.loops;
      for (std::size_t j = 0; j < n; ++j) {
        h += value[j] == 0;
        std::uint32_t v = value[j] + step[j];
        value[j] = v >= p ? v - p : v;
      }
      ++counts[h];
    }
  }
}

}  // namespace

PointProfile point_profile(const ModularArrangement& m, ProfileOptions options) {
  const std::uint64_t budget = options.budget ? options.budget : default_budget();
  if (!checked_power(m.p, m.dim, budget)) {
    throw Error(ErrorCode::budget_exceeded, "enumerating " + std::to_string(m.p) + "^" + std::to_string(m.dim) +
                                                " = " + to_string(ipow(Integer(static_cast<unsigned long>(m.p)),
                                                                       static_cast<unsigned>(m.dim))) +
                                                " points exceeds the budget of " + std::to_string(budget));
  }
  PointProfile profile;
  profile.p = m.p;
  profile.counts.assign(m.n_hyperplanes + 1, 0);
  if (m.dim == 0) {
    // the single point lies on every hyperplane that is the whole space
    ++profile.counts[m.loops];
    return profile;
  }
  const std::uint64_t outer = *checked_power(m.p, m.dim - 1, budget);
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(outer)));
  if (threads == 1) {
    profile_range(m, 0, outer, profile.counts);
  } else {
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(m.n_hyperplanes + 1, 0));
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t b = outer * t / threads;
      const std::uint64_t e = outer * (t + 1) / threads;
      workers.emplace_back([&, b, e, t] { profile_range(m, b, e, partial[t]); });
    }
    for (auto& w : workers) w.join();
    for (const auto& part : partial) {
      for (std::size_t k = 0; k < part.size(); ++k) profile.counts[k] += part[k];
    }
  }
  return profile;
}

MultiPoly profile_polynomial(const PointProfile& profile, const std::string& variable) {
  MultiPoly out = MultiPoly::zero_in({variable});
  const MultiPoly t = MultiPoly::variable(variable);
  for (std::size_t k = 0; k < profile.counts.size(); ++k) {
    if (profile.counts[k] != 0) {
      out += t.pow(static_cast<unsigned>(k)) * Rational(Integer(static_cast<unsigned long>(profile.counts[k])));
    }
  }
  return out;
}

void write_profile(std::ostream& os, const PointProfile& profile) {
  os << profile.p;
  for (auto c : profile.counts) os << ", " << c;
  os << '\n';
}

FfmResult coboundary_ffm(const Arrangement& a, FfmOptions options) {
  if (a.characteristic() != 0) {
    throw Error(ErrorCode::invalid_argument, "the finite field method needs an arrangement over Q");
  }
  const std::uint64_t budget = options.budget ? options.budget : default_budget();
  const std::size_t r = rank(a);
  const std::size_t needed = r + 2;
  FfmResult result;
  result.rank = r;

  std::vector<std::uint64_t> primes = options.primes;
  ReductionMode mode;
  if (!primes.empty()) {
    if (primes.size() < needed) {
      throw Error(ErrorCode::invalid_argument, "need " + std::to_string(needed) + " primes for rank " +
                                                   std::to_string(r) + ", got " + std::to_string(primes.size()));
    }
    mode = options.mode.value_or(a.size() <= 16 ? ReductionMode::verified : ReductionMode::bound);
  } else {
    const Integer floor = hadamard_prime_floor(a);
    std::vector<std::uint64_t> above;
    if (floor < Integer(0xffffffffUL)) {
      std::uint64_t p = floor.get_ui();
      while (above.size() < needed) {
        p = next_prime(p);
        above.push_back(p);
      }
    }
    const bool bound_fits = !above.empty() && checked_power(above.back(), a.dim(), budget).has_value();
    if (options.mode) {
      mode = *options.mode;
    } else if (bound_fits) {
      mode = ReductionMode::bound;
    } else if (a.size() <= 16) {
      mode = ReductionMode::verified;
    } else {
      throw Error(ErrorCode::budget_exceeded, "primes above the minor bound " + to_string(floor) +
                                                  " need more points than the budget allows");
    }
    if (mode == ReductionMode::bound) {
      if (above.empty()) throw Error(ErrorCode::budget_exceeded, "minor bound " + to_string(floor) + " is too large");
      primes = above;
    } else {
      std::uint64_t p = 1;
      while (primes.size() < needed) {
        p = next_prime(p);
        try {
          reduce_mod_p(a, p, ReductionMode::verified);
          primes.push_back(p);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::bad_prime) throw;
        }
      }
    }
  }
  result.mode = mode;

  std::vector<Sample> samples;
  for (std::uint64_t p : primes) {
    const ModularArrangement m = reduce_mod_p(a, p, mode);
    PointProfile profile = point_profile(m, {budget, options.threads});
    const Integer total = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned>(a.dim()));
    Integer sum = 0;
    for (auto c : profile.counts) sum += static_cast<unsigned long>(c);
    if (sum != total) throw Error(ErrorCode::internal, "point profile does not sum to p^d");
    const Integer scale = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned>(a.dim() - r));
    MultiPoly value = profile_polynomial(profile, "Y");
    for (const auto& [e, c] : value.terms()) {
      if (c.get_num() % scale != 0) {
        throw Error(ErrorCode::inconsistent, "degree bound or reduction failure: profile at p=" + std::to_string(p) +
                                                 " is not divisible by p^(d-r)");
      }
    }
    value /= Rational(scale);
    samples.push_back({Rational(Integer(static_cast<unsigned long>(p))), value});
    result.profiles.push_back(std::move(profile));
  }
  MultiPoly cob;
  try {
    cob = interpolate_in_X(samples, static_cast<unsigned>(r), "X");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::inconsistent) throw;
    throw Error(ErrorCode::inconsistent, std::string("degree bound or reduction failure: ") + e.what());
  }
  for (const auto& [e, c] : cob.terms()) {
    if (!is_integer(c)) throw Error(ErrorCode::inconsistent, "degree bound or reduction failure: non-integer coefficient");
  }
  result.coboundary = cob.with_variables({"X", "Y"});
  return result;
}

}  // namespace tuttekit
