#include "tuttekit/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "tuttekit/error.hpp"

namespace tuttekit {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// (rank, numeric suffix) for the canonical variable order.
std::pair<int, long> variable_rank(const std::string& v) {
  static const std::vector<std::string> fixed = {"x", "y", "X", "Y", "q", "t", "u", "w"};
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (v == fixed[i]) return {static_cast<int>(i), 0};
  }
  if (v.size() > 2 && v.rfind("w_", 0) == 0 &&
      std::all_of(v.begin() + 2, v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return {8, std::stol(v.substr(2))};
  }
  if (v == "Z") return {9, 0};
  if (v == "Z1") return {10, 0};
  if (v == "Z2") return {11, 0};
  if (v == "s") return {12, 0};
  return {13, 0};
}

}  // namespace

bool variable_less(const std::string& a, const std::string& b) {
  const auto ra = variable_rank(a);
  const auto rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool MultiPoly::GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();  // mpq_class(num, den) is not reduced on construction
  terms_.emplace(Exponents{}, std::move(v));
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Rational& coeff,
                              std::initializer_list<std::pair<std::string, std::uint32_t>> powers) {
  MultiPoly p(coeff);
  for (const auto& [name, k] : powers) p *= variable(name).pow(k);
  return p;
}

MultiPoly MultiPoly::zero_in(std::vector<std::string> variables) {
  std::sort(variables.begin(), variables.end(), variable_less);
  variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
  MultiPoly p;
  p.vars_ = std::move(variables);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](std::uint32_t e) { return e == 0; }));
}

std::size_t MultiPoly::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return npos;
}

bool MultiPoly::has_variable(std::string_view name) const { return index_of(name) != npos; }

std::uint32_t MultiPoly::degree(std::string_view name) const {
  const auto i = index_of(name);
  if (i == npos) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;  // grlex: first term has maximal degree
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

Rational MultiPoly::coefficient(std::initializer_list<std::pair<std::string, std::uint32_t>> powers) const {
  std::map<std::string, std::uint32_t> m;
  for (const auto& [k, v] : powers) m[k] += v;
  return coefficient(m);
}

Rational MultiPoly::coefficient(const std::map<std::string, std::uint32_t>& powers) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, k] : powers) {
    if (k == 0) continue;
    const auto i = index_of(name);
    if (i == npos) return Rational(0);
    e[i] = k;
  }
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(std::map<std::string, std::uint32_t>{}); }

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& name) const {
  const auto i = index_of(name);
  std::vector<std::string> rest;
  for (const auto& v : vars_) {
    if (v != name) rest.push_back(v);
  }
  std::vector<MultiPoly> out(degree(name) + 1, zero_in(rest));
  for (const auto& [e, c] : terms_) {
    Exponents r;
    r.reserve(rest.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k != i) r.push_back(e[k]);
    }
    out[i == npos ? 0 : e[i]].add_term(r, c);
  }
  return out;
}

std::vector<std::string> MultiPoly::merged(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), variable_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  MultiPoly out = zero_in(merged(variables, vars_));
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) pos[i] = out.index_of(vars_[i]);
  for (const auto& [e, c] : terms_) {
    Exponents f(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::trimmed() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; })) {
      used.push_back(vars_[i]);
    }
  }
  if (used.size() == vars_.size()) return *this;
  MultiPoly out = zero_in(used);
  for (const auto& [e, c] : terms_) {
    Exponents f;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (out.has_variable(vars_[i])) f.push_back(e[i]);
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::renamed(const std::map<std::string, std::string>& renames) const {
  std::map<std::string, MultiPoly> subs;
  for (const auto& [from, to] : renames) {
    if (has_variable(from)) subs.emplace(from, variable(to));
  }
  return subs.empty() ? *this : substitute(subs);
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.vars_ != vars_) {
    *this = with_variables(other.vars_);
    if (other.vars_ != vars_) return *this += other.with_variables(vars_);
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    const auto vars = MultiPoly::merged(a.vars_, b.vars_);
    return a.with_variables(vars) * b.with_variables(vars);
  }
  MultiPoly out = MultiPoly::zero_in(a.vars_);
  MultiPoly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& scalar) {
  if (scalar == 0) throw Error(ErrorCode::invalid_argument, "division of polynomial by zero");
  for (auto& [e, c] : terms_) c /= scalar;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& value) const {
  return substitute(std::map<std::string, MultiPoly>{{name, value}});
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
  std::vector<std::size_t> targets;
  std::vector<const MultiPoly*> images;
  for (const auto& [name, value] : values) {
    const auto i = index_of(name);
    if (i == npos) throw Error(ErrorCode::unknown_variable, "unknown variable '" + name + "'");
    targets.push_back(i);
    images.push_back(&value);
  }
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (std::find(targets.begin(), targets.end(), i) == targets.end()) rest.push_back(vars_[i]);
  }
  // Powers of each image, computed lazily.
  std::vector<std::vector<MultiPoly>> powers(targets.size(), std::vector<MultiPoly>{MultiPoly(1)});
  auto power = [&](std::size_t k, std::uint32_t e) -> const MultiPoly& {
    while (powers[k].size() <= e) powers[k].push_back(powers[k].back() * *images[k]);
    return powers[k][e];
  };
  MultiPoly out = zero_in(rest);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = zero_in(rest);
    Exponents kept;
    kept.reserve(rest.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (std::find(targets.begin(), targets.end(), i) == targets.end()) kept.push_back(e[i]);
    }
    term.terms_.emplace(std::move(kept), c);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if (e[targets[k]] != 0) term *= power(k, e[targets[k]]);
    }
    out += term;
  }
  return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
  for (const auto& [name, v] : values) {
    if (!has_variable(name)) throw Error(ErrorCode::unknown_variable, "unknown variable '" + name + "'");
  }
  std::vector<const Rational*> point(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = values.find(vars_[i]);
    if (it != values.end()) point[i] = &it->second;
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i] == nullptr) {
        throw Error(ErrorCode::unknown_variable, "no value for variable '" + vars_[i] + "'");
      }
      term *= rpow(*point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::divide_by_linear(const std::string& name, const Rational& root) const {
  // Synthetic division with polynomial coefficients, highest power first.
  auto coeffs = coefficients_in(name);
  const auto n = coeffs.size();
  if (n <= 1) {
    if (is_zero()) return *this;
    throw Error(ErrorCode::inconsistent, "polynomial not divisible by (" + name + " - " +
                                             tuttekit::to_string(root) + ")");
  }
  std::vector<MultiPoly> quotient(n - 1);
  MultiPoly carry = coeffs[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) {
    quotient[k] = carry;
    carry = coeffs[k] + carry * root;
  }
  if (!carry.is_zero()) {
    throw Error(ErrorCode::inconsistent, "polynomial not divisible by (" + name + " - " +
                                             tuttekit::to_string(root) + ")");
  }
  const MultiPoly x = variable(name);
  MultiPoly out = zero_in(vars_);
  MultiPoly xp(1);
  for (std::size_t k = 0; k < quotient.size(); ++k) {
    out += quotient[k] * xp;
    xp *= x;
  }
  return out;
}

MultiPoly MultiPoly::divide_by_power(const std::string& name, std::uint32_t power) const {
  if (power == 0) return *this;
  const auto i = index_of(name);
  if (i == npos) {
    if (is_zero()) return *this;
    throw Error(ErrorCode::inconsistent, "polynomial not divisible by " + name);
  }
  MultiPoly out = zero_in(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] < power) {
      throw Error(ErrorCode::inconsistent,
                  "polynomial not divisible by " + name + "^" + std::to_string(power));
    }
    Exponents f = e;
    f[i] -= power;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

namespace {

std::string monomial_text(const std::vector<std::string>& vars, const MultiPoly::Exponents& e,
                          bool latex) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += latex ? " " : "*";
    std::string name = vars[i];
    if (latex && name.rfind("w_", 0) == 0) name = "w_{" + name.substr(2) + "}";
    out += name;
    if (e[i] > 1) out += latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
  }
  return out;
}

std::string coefficient_latex(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(vars_, e, false);
    if (mono.empty()) {
      out += tuttekit::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += tuttekit::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::string MultiPoly::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(vars_, e, true);
    if (mono.empty()) {
      out += coefficient_latex(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += coefficient_latex(mag) + " " + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::parse, "polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc /= d.constant_term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip();
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return MultiPoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace tuttekit
