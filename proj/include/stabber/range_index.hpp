#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stabber/ranked.hpp"

namespace stabber {

enum class Secondary { Any, AtMost, AtLeast };

/// Deletable point set over a fixed universe of endpoints, ordered by a primary
/// rank, answering "primary in [lo, hi] and secondary <= / >= bound" queries in
/// O(log n + k). A segment tree over primary order keeps min and max secondary
/// of the alive points in each node, which is the query contract of a priority
/// search tree for 3-sided and quadrant ranges.
class RangeIndex {
 public:
  RangeIndex() = default;
  RangeIndex(std::span<const Rank> primary, std::span<const Rank> secondary, const std::vector<bool>& alive);

  void erase(std::size_t e);
  void insert(std::size_t e);
  bool contains(std::size_t e) const { return slot_of_[e] != kNoSlot && alive_[slot_of_[e]]; }
  std::size_t size() const { return count_; }

  /// Appends every alive endpoint in the query range to out (does not erase).
  void report(Rank lo, Rank hi, Secondary filter, Rank bound, std::vector<std::size_t>& out) const;
  std::vector<std::size_t> report(Rank lo, Rank hi, Secondary filter = Secondary::Any, Rank bound = 0) const {
    std::vector<std::size_t> out;
    report(lo, hi, filter, bound, out);
    return out;
  }

 private:
  static constexpr std::size_t kNoSlot = static_cast<std::size_t>(-1);

  void update(std::size_t slot);
  void descend(std::size_t node, std::size_t nlo, std::size_t nhi, std::size_t lo, std::size_t hi,
               Secondary filter, Rank bound, std::vector<std::size_t>& out) const;

  std::size_t leaves_ = 0;
  std::size_t count_ = 0;
  std::vector<Rank> slot_primary_;
  std::vector<Rank> slot_secondary_;
  std::vector<std::size_t> slot_point_;
  std::vector<std::size_t> slot_of_;
  std::vector<bool> alive_;
  std::vector<Rank> min_;
  std::vector<Rank> max_;
};

}  // namespace stabber
