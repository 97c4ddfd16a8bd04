#include "tuttekit/arrangement.hpp"

#include <algorithm>
#include <bit>

#include "tuttekit/error.hpp"
#include "tuttekit/linalg.hpp"

namespace tuttekit {

IndexSet index_set(std::initializer_list<std::size_t> indices) {
  IndexSet s = 0;
  for (auto i : indices) s |= IndexSet{1} << i;
  return s;
}

IndexSet full_set(std::size_t n) { return n >= 64 ? ~IndexSet{0} : (IndexSet{1} << n) - 1; }

int popcount(IndexSet s) { return std::popcount(s); }

namespace {

Rational residue(const Rational& v, std::uint64_t p) {
  const Integer pp(static_cast<unsigned long>(p));
  Integer den = v.get_den() % pp;
  if (den == 0) {
    throw Error(ErrorCode::invalid_argument,
                "coefficient " + to_string(v) + " is undefined mod " + std::to_string(p));
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
  Integer r = (v.get_num() * inv) % pp;
  if (r < 0) r += pp;
  return Rational(r);
}

}  // namespace

Hyperplane::Hyperplane(std::vector<Rational> normal, Rational offset, std::uint64_t characteristic)
    : normal_(std::move(normal)), offset_(std::move(offset)), p_(characteristic), loop_(false) {
  if (p_ != 0 && !is_prime(p_)) {
    throw Error(ErrorCode::invalid_argument, "characteristic " + std::to_string(p_) + " is not prime");
  }
  if (p_ != 0) {
    for (auto& v : normal_) v = residue(v, p_);
    offset_ = residue(offset_, p_);
  }
  const auto lead = std::find_if(normal_.begin(), normal_.end(), [](const Rational& v) { return v != 0; });
  if (lead == normal_.end()) {
    if (offset_ != 0) {
      throw Error(ErrorCode::invalid_argument, "zero normal with nonzero offset is not a hyperplane");
    }
    loop_ = true;
    return;
  }
  if (p_ != 0) {
    const Integer inv(static_cast<unsigned long>(mod_inverse(lead->get_num().get_ui(), p_)));
    const Integer pp(static_cast<unsigned long>(p_));
    auto scale = [&](Rational& v) { v = Rational(Integer(v.get_num() * inv % pp)); };
    for (auto& v : normal_) scale(v);
    scale(offset_);
    return;
  }
  // Clear denominators, divide out the content, make the leading entry positive.
  Integer l = offset_.get_den();
  for (const auto& v : normal_) l = lcm(l, v.get_den());
  Integer g = 0;
  for (auto& v : normal_) {
    v *= l;
    g = gcd(g, v.get_num());
  }
  offset_ *= l;
  g = gcd(g, offset_.get_num());
  if (*lead < 0) g = -g;
  for (auto& v : normal_) v /= g;
  offset_ /= g;
}

Hyperplane Hyperplane::loop(std::size_t dim, std::uint64_t characteristic) {
  return Hyperplane(std::vector<Rational>(dim, Rational(0)), Rational(0), characteristic);
}

std::vector<Integer> Hyperplane::augmented_row() const {
  std::vector<Integer> row;
  row.reserve(normal_.size() + 1);
  for (const auto& v : normal_) row.push_back(v.get_num());
  row.push_back(offset_.get_num());
  return row;
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes, std::string label,
                         std::uint64_t characteristic)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)), label_(std::move(label)), p_(characteristic) {
  for (const auto& h : hyperplanes_) {
    if (h.dim() != dim_) {
      throw Error(ErrorCode::invalid_argument, "hyperplane of dimension " + std::to_string(h.dim()) +
                                                   " in an arrangement of dimension " + std::to_string(dim_));
    }
    if (h.characteristic() != p_) {
      throw Error(ErrorCode::invalid_argument, "hyperplane over a different field");
    }
  }
}

Arrangement Arrangement::with_label(std::string label) const {
  Arrangement out = *this;
  out.label_ = std::move(label);
  return out;
}

namespace {

void check_indices(const Arrangement& a, IndexSet s) {
  if (a.size() < 64 && (s >> a.size()) != 0) {
    throw Error(ErrorCode::invalid_argument, "hyperplane index out of range");
  }
}

}  // namespace

SubsetRank subset_rank(const Arrangement& a, IndexSet s) {
  check_indices(a, s);
  EchelonBasis basis(a.dim() + 1, a.characteristic());
  for (std::size_t i = 0; i < a.size() && i < 64; ++i) {
    if ((s >> i) & 1U) basis.add(a[i].augmented_row());
  }
  const std::size_t linear = basis.rank_before(a.dim());
  return {linear == basis.rank(), linear};
}

bool is_central(const Arrangement& a, IndexSet s) { return subset_rank(a, s).central; }

bool is_central(const Arrangement& a) {
  EchelonBasis basis(a.dim() + 1, a.characteristic());
  for (const auto& h : a.hyperplanes()) basis.add(h.augmented_row());
  return basis.rank_before(a.dim()) == basis.rank();
}

std::size_t rank_of(const Arrangement& a, IndexSet s) {
  const auto r = subset_rank(a, s);
  if (!r.central) throw Error(ErrorCode::non_central, "non-central subset");
  return r.rank;
}

std::size_t rank(const Arrangement& a) {
  EchelonBasis basis(a.dim(), a.characteristic());
  for (const auto& h : a.hyperplanes()) {
    auto row = h.augmented_row();
    row.pop_back();
    basis.add(row);
  }
  return basis.rank();
}

Arrangement delete_hyperplane(const Arrangement& a, std::size_t index) {
  if (index >= a.size()) throw Error(ErrorCode::invalid_argument, "hyperplane index out of range");
  std::vector<Hyperplane> rest;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != index) rest.push_back(a[i]);
  }
  return Arrangement(a.dim(), std::move(rest), a.label(), a.characteristic());
}

Arrangement contract(const Arrangement& a, std::size_t index, std::optional<std::size_t> pivot_column) {
  if (index >= a.size()) throw Error(ErrorCode::invalid_argument, "hyperplane index out of range");
  const Hyperplane& h = a[index];
  if (h.is_loop()) throw Error(ErrorCode::invalid_argument, "cannot contract a loop");
  const auto& hn = h.normal();
  std::size_t c = 0;
  if (pivot_column) {
    c = *pivot_column;
    if (c >= a.dim() || hn[c] == 0) {
      throw Error(ErrorCode::invalid_argument, "pivot column must carry a nonzero normal entry");
    }
  } else {
    while (hn[c] == 0) ++c;
  }
  const std::uint64_t p = a.characteristic();
  // Division by the pivot entry happens in Q; the F_p case reduces afterwards.
  std::vector<Hyperplane> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == index) continue;
    const Hyperplane& g = a[i];
    const Rational factor = g.normal()[c] / hn[c];
    std::vector<Rational> normal;
    normal.reserve(a.dim() - 1);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j != c) normal.push_back(g.normal()[j] - factor * hn[j]);
    }
    Rational offset = g.offset() - factor * h.offset();
    const bool zero_normal =
        std::all_of(normal.begin(), normal.end(), [p](const Rational& v) {
          if (p == 0) return v == 0;
          return (v.get_num() % Integer(static_cast<unsigned long>(p))) == 0;
        });
    const bool zero_offset =
        p == 0 ? offset == 0 : (offset.get_num() % Integer(static_cast<unsigned long>(p))) == 0;
    if (zero_normal && !zero_offset) continue;  // parallel to H: empty intersection
    out.emplace_back(std::move(normal), std::move(offset), p);
  }
  return Arrangement(a.dim() - 1, std::move(out), a.label(), p);
}

Arrangement cone(const Arrangement& a) {
  std::vector<Hyperplane> out;
  const std::uint64_t p = a.characteristic();
  for (const auto& h : a.hyperplanes()) {
    std::vector<Rational> normal = h.normal();
    normal.push_back(-h.offset());
    out.emplace_back(std::move(normal), Rational(0), p);
  }
  std::vector<Rational> last(a.dim() + 1, Rational(0));
  last.back() = 1;
  out.emplace_back(std::move(last), Rational(0), p);
  return Arrangement(a.dim() + 1, std::move(out), a.label().empty() ? "" : "c" + a.label(), p);
}

Arrangement essentialize(const Arrangement& a) {
  if (!is_central(a)) throw Error(ErrorCode::non_central, "essentialization needs a central arrangement");
  EchelonBasis basis(a.dim(), a.characteristic());
  for (const auto& h : a.hyperplanes()) {
    auto row = h.augmented_row();
    row.pop_back();
    basis.add(row);
  }
  // In the reduced row echelon basis every normal's coordinates are its
  // entries at the pivot columns.
  const auto pivots = basis.pivot_columns();
  std::vector<Hyperplane> out;
  for (const auto& h : a.hyperplanes()) {
    std::vector<Rational> normal;
    normal.reserve(pivots.size());
    for (auto c : pivots) normal.push_back(h.normal()[c]);
    out.emplace_back(std::move(normal), Rational(0), a.characteristic());
  }
  return Arrangement(pivots.size(), std::move(out), a.label(), a.characteristic());
}

const char* element_kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::loop: return "loop";
    case ElementKind::coloop: return "coloop";
    case ElementKind::ordinary: return "ordinary";
  }
  return "ordinary";
}

ElementKind classify(const Arrangement& a, std::size_t index) {
  if (index >= a.size()) throw Error(ErrorCode::invalid_argument, "hyperplane index out of range");
  if (a[index].is_loop()) return ElementKind::loop;
  return rank(a) == rank(delete_hyperplane(a, index)) + 1 ? ElementKind::coloop : ElementKind::ordinary;
}

}  // namespace tuttekit
