#include "stabber/range_index.hpp"

#include <algorithm>
#include <numeric>

namespace stabber {

namespace {
constexpr Rank kEmptyMin = std::numeric_limits<Rank>::max();
constexpr Rank kEmptyMax = std::numeric_limits<Rank>::min();
}  // namespace

RangeIndex::RangeIndex(std::span<const Rank> primary, std::span<const Rank> secondary, const std::vector<bool>& alive) {
  const std::size_t m = primary.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return primary[l] < primary[r]; });

  leaves_ = 1;
  while (leaves_ < std::max<std::size_t>(m, 1)) leaves_ *= 2;
  slot_primary_.resize(m);
  slot_secondary_.resize(m);
  slot_point_.resize(m);
  slot_of_.assign(m, kNoSlot);
  alive_.assign(m, false);
  min_.assign(2 * leaves_, kEmptyMin);
  max_.assign(2 * leaves_, kEmptyMax);
  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t e = order[s];
    slot_primary_[s] = primary[e];
    slot_secondary_[s] = secondary[e];
    slot_point_[s] = e;
    slot_of_[e] = s;
    if (alive[e]) {
      alive_[s] = true;
      ++count_;
      min_[leaves_ + s] = max_[leaves_ + s] = secondary[e];
    }
  }
  for (std::size_t i = leaves_ - 1; i >= 1; --i) {
    min_[i] = std::min(min_[2 * i], min_[2 * i + 1]);
    max_[i] = std::max(max_[2 * i], max_[2 * i + 1]);
  }
}

void RangeIndex::update(std::size_t slot) {
  std::size_t i = leaves_ + slot;
  if (alive_[slot]) {
    min_[i] = max_[i] = slot_secondary_[slot];
  } else {
    min_[i] = kEmptyMin;
    max_[i] = kEmptyMax;
  }
  for (i /= 2; i >= 1; i /= 2) {
    min_[i] = std::min(min_[2 * i], min_[2 * i + 1]);
    max_[i] = std::max(max_[2 * i], max_[2 * i + 1]);
  }
}

void RangeIndex::erase(std::size_t e) {
  const std::size_t s = slot_of_[e];
  if (s == kNoSlot || !alive_[s]) return;
  alive_[s] = false;
  --count_;
  update(s);
}

void RangeIndex::insert(std::size_t e) {
  const std::size_t s = slot_of_[e];
  if (s == kNoSlot || alive_[s]) return;
  alive_[s] = true;
  ++count_;
  update(s);
}

void RangeIndex::report(Rank lo, Rank hi, Secondary filter, Rank bound, std::vector<std::size_t>& out) const {
  if (lo > hi || count_ == 0) return;
  const auto first = std::lower_bound(slot_primary_.begin(), slot_primary_.end(), lo) - slot_primary_.begin();
  const auto last = std::upper_bound(slot_primary_.begin(), slot_primary_.end(), hi) - slot_primary_.begin();
  if (first >= last) return;
  descend(1, 0, leaves_ - 1, static_cast<std::size_t>(first), static_cast<std::size_t>(last - 1), filter, bound, out);
}

void RangeIndex::descend(std::size_t node, std::size_t nlo, std::size_t nhi, std::size_t lo, std::size_t hi,
                         Secondary filter, Rank bound, std::vector<std::size_t>& out) const {
  if (nhi < lo || nlo > hi) return;
  if (min_[node] == kEmptyMin) return;
  if (filter == Secondary::AtMost && min_[node] > bound) return;
  if (filter == Secondary::AtLeast && max_[node] < bound) return;
  if (nlo == nhi) {
    out.push_back(slot_point_[nlo]);
    return;
  }
  const std::size_t mid = (nlo + nhi) / 2;
  descend(2 * node, nlo, mid, lo, hi, filter, bound, out);
  descend(2 * node + 1, mid + 1, nhi, lo, hi, filter, bound, out);
}

}  // namespace stabber
