#include "tuttekit/poset.hpp"

#include <algorithm>
#include <map>

#include "tuttekit/error.hpp"
#include "tuttekit/linalg.hpp"

namespace tuttekit {

IntersectionPoset::IntersectionPoset(std::vector<Flat> flats, std::vector<std::vector<std::size_t>> covers)
    : flats_(std::move(flats)), covers_(std::move(covers)), mobius_(flats_.size(), 0) {
  // Sum over F <= G of mu(F) is [G is the minimum].
  for (std::size_t g = 0; g < flats_.size(); ++g) {
    if (g == 0) {
      mobius_[g] = 1;
      continue;
    }
    long sum = 0;
    for (std::size_t f = 0; f < g; ++f) {
      if (leq(f, g)) sum += mobius_[f];
    }
    mobius_[g] = -sum;
  }
}

bool IntersectionPoset::leq(std::size_t i, std::size_t j) const {
  const IndexSet a = flats_.at(i).hyperplanes;
  const IndexSet b = flats_.at(j).hyperplanes;
  return (a & b) == a;
}

std::size_t IntersectionPoset::height() const { return flats_.back().rank; }

std::vector<std::size_t> IntersectionPoset::rank_sizes() const {
  std::vector<std::size_t> out(height() + 1, 0);
  for (const auto& f : flats_) ++out[f.rank];
  return out;
}

std::vector<long> IntersectionPoset::mobius_level_sums() const {
  std::vector<long> out(height() + 1, 0);
  for (std::size_t i = 0; i < flats_.size(); ++i) out[flats_[i].rank] += mobius_[i];
  return out;
}

namespace {

struct Candidate {
  IndexSet mask;
  EchelonBasis basis;
};

IndexSet closure(const std::vector<std::vector<Integer>>& rows, const EchelonBasis& basis) {
  IndexSet s = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (basis.spans(rows[i])) s |= IndexSet{1} << i;
  }
  return s;
}

}  // namespace

IntersectionPoset intersection_poset(const Arrangement& a) {
  const std::size_t n = a.size();
  if (n > 64) throw Error(ErrorCode::budget_exceeded, "intersection poset limited to 64 hyperplanes");
  std::vector<std::vector<Integer>> rows;
  for (const auto& h : a.hyperplanes()) rows.push_back(h.augmented_row());

  std::vector<Flat> flats;
  std::vector<std::vector<IndexSet>> up;  // covering flats by mask, per flat
  std::map<IndexSet, std::size_t> index;

  std::vector<Candidate> level;
  {
    EchelonBasis empty(a.dim() + 1, a.characteristic());
    const IndexSet m = closure(rows, empty);
    index[m] = 0;
    flats.push_back({m, a.dim(), 0});
    up.emplace_back();
    level.push_back({m, std::move(empty)});
  }
  for (std::size_t r = 1; !level.empty(); ++r) {
    std::vector<Candidate> next;
    for (const auto& c : level) {
      const std::size_t from = index.at(c.mask);
      for (std::size_t i = 0; i < n; ++i) {
        if ((c.mask >> i) & 1U) continue;
        EchelonBasis grown = c.basis;
        grown.add(rows[i]);
        if (grown.rank_before(a.dim()) != grown.rank()) continue;  // empty intersection
        const IndexSet m = closure(rows, grown);
        auto [it, inserted] = index.emplace(m, flats.size());
        if (inserted) {
          flats.push_back({m, a.dim() - r, r});
          up.emplace_back();
          next.push_back({m, std::move(grown)});
        }
        auto& ups = up[from];
        if (std::find(ups.begin(), ups.end(), m) == ups.end()) ups.push_back(m);
      }
    }
    level = std::move(next);
  }

  // Canonical order: by rank, then by mask.
  std::vector<std::size_t> order(flats.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (flats[x].rank != flats[y].rank) return flats[x].rank < flats[y].rank;
    return flats[x].hyperplanes < flats[y].hyperplanes;
  });
  std::map<IndexSet, std::size_t> position;
  std::vector<Flat> sorted;
  for (auto i : order) {
    position[flats[i].hyperplanes] = sorted.size();
    sorted.push_back(flats[i]);
  }
  std::vector<std::vector<std::size_t>> covers(sorted.size());
  for (auto i : order) {
    auto& dst = covers[position[flats[i].hyperplanes]];
    for (IndexSet m : up[i]) dst.push_back(position.at(m));
    std::sort(dst.begin(), dst.end());
  }
  return IntersectionPoset(std::move(sorted), std::move(covers));
}

}  // namespace tuttekit
