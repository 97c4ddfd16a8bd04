#include "tuttekit/semimatroid.hpp"

#include "tuttekit/error.hpp"
#include "tuttekit/linalg.hpp"

namespace tuttekit {

namespace {

struct Walker {
  const std::vector<std::vector<Integer>>& rows;
  std::size_t dim;
  std::vector<std::uint8_t>& central;
  std::vector<std::int8_t>& rank;

  void visit(std::size_t i, IndexSet mask, const EchelonBasis& basis) {
    if (i == rows.size()) {
      const auto linear = basis.rank_before(dim);
      central[mask] = linear == basis.rank() ? 1 : 0;
      rank[mask] = static_cast<std::int8_t>(linear);
      return;
    }
    visit(i + 1, mask, basis);
    EchelonBasis grown = basis;
    grown.add(rows[i]);
    visit(i + 1, mask | (IndexSet{1} << i), grown);
  }
};

}  // namespace

SemimatroidTable::SemimatroidTable(const Arrangement& a) : n_(a.size()) {
  if (n_ > max_hyperplanes) {
    throw Error(ErrorCode::budget_exceeded, "subset table limited to " + std::to_string(max_hyperplanes) +
                                                " hyperplanes, got " + std::to_string(n_));
  }
  central_.assign(std::size_t{1} << n_, 0);
  rank_.assign(std::size_t{1} << n_, 0);
  std::vector<std::vector<Integer>> rows;
  rows.reserve(n_);
  for (const auto& h : a.hyperplanes()) rows.push_back(h.augmented_row());
  Walker w{rows, a.dim(), central_, rank_};
  w.visit(0, 0, EchelonBasis(a.dim() + 1, a.characteristic()));
}

std::vector<std::pair<IndexSet, int>> SemimatroidTable::fingerprint() const {
  std::vector<std::pair<IndexSet, int>> out;
  for (IndexSet s = 0; s < central_.size(); ++s) {
    if (central_[s]) out.emplace_back(s, rank_[s]);
  }
  return out;
}

}  // namespace tuttekit
