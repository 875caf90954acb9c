#include "stabber/regions.hpp"

#include <algorithm>
#include <iterator>

namespace stabber {

// ---------------------------------------------------------------------------
// MinTree

MinTree::MinTree(Rank extent) : extent_(extent) {
  leaves_ = 1;
  while (leaves_ < static_cast<std::size_t>(std::max<Rank>(extent, 1))) leaves_ *= 2;
  tree_.assign(2 * leaves_, kPosInf);
}

void MinTree::set(Rank i, Rank v) {
  std::size_t k = leaves_ + static_cast<std::size_t>(i);
  tree_[k] = v;
  for (k /= 2; k >= 1; k /= 2) tree_[k] = std::min(tree_[2 * k], tree_[2 * k + 1]);
}

void MinTree::reset(Rank i) { set(i, kPosInf); }

Rank MinTree::min(Rank lo, Rank hi) const {
  lo = std::max<Rank>(lo, 0);
  hi = std::min<Rank>(hi, extent_ - 1);
  if (lo > hi) return kPosInf;
  Rank best = kPosInf;
  std::size_t l = leaves_ + static_cast<std::size_t>(lo);
  std::size_t r = leaves_ + static_cast<std::size_t>(hi) + 1;
  while (l < r) {
    if (l & 1U) best = std::min(best, tree_[l++]);
    if (r & 1U) best = std::min(best, tree_[--r]);
    l /= 2;
    r /= 2;
  }
  return best;
}

Rank MinTree::rightmost_at_most(Rank lo, Rank hi, Rank bound) const {
  lo = std::max<Rank>(lo, 0);
  hi = std::min<Rank>(hi, extent_ - 1);
  if (lo > hi) return -1;
  return rightmost(1, 0, static_cast<Rank>(leaves_) - 1, lo, hi, bound);
}

Rank MinTree::leftmost_at_most(Rank lo, Rank hi, Rank bound) const {
  lo = std::max<Rank>(lo, 0);
  hi = std::min<Rank>(hi, extent_ - 1);
  if (lo > hi) return -1;
  return leftmost(1, 0, static_cast<Rank>(leaves_) - 1, lo, hi, bound);
}

Rank MinTree::rightmost(std::size_t node, Rank nlo, Rank nhi, Rank lo, Rank hi, Rank bound) const {
  if (nhi < lo || nlo > hi || tree_[node] > bound) return -1;
  if (nlo == nhi) return nlo;
  const Rank mid = nlo + (nhi - nlo) / 2;
  const Rank r = rightmost(2 * node + 1, mid + 1, nhi, lo, hi, bound);
  if (r >= 0) return r;
  return rightmost(2 * node, nlo, mid, lo, hi, bound);
}

Rank MinTree::leftmost(std::size_t node, Rank nlo, Rank nhi, Rank lo, Rank hi, Rank bound) const {
  if (nhi < lo || nlo > hi || tree_[node] > bound) return -1;
  if (nlo == nhi) return nlo;
  const Rank mid = nlo + (nhi - nlo) / 2;
  const Rank l = leftmost(2 * node, nlo, mid, lo, hi, bound);
  if (l >= 0) return l;
  return leftmost(2 * node + 1, mid + 1, nhi, lo, hi, bound);
}

// ---------------------------------------------------------------------------
// Strip

bool StripRegions::update(RPoint p, Color c) {
  if (c == Color::Red) {
    log_.push_back({true, has_red_, r_lo_, r_hi_});
    r_lo_ = has_red_ ? std::min(r_lo_, p.y) : p.y;
    r_hi_ = has_red_ ? std::max(r_hi_, p.y) : p.y;
    has_red_ = true;
    auto it = blue_.lower_bound(r_lo_);
    return it == blue_.end() || *it > r_hi_;
  }
  const bool fresh = blue_.insert(p.y).second;
  log_.push_back({false, fresh, p.y, p.y});
  return !(has_red_ && r_lo_ <= p.y && p.y <= r_hi_);
}

void StripRegions::undo(std::size_t mark) {
  while (log_.size() > mark) {
    const Entry e = log_.back();
    log_.pop_back();
    if (e.red) {
      has_red_ = e.had_red;
      r_lo_ = e.lo;
      r_hi_ = e.hi;
    } else if (e.had_red) {  // had_red doubles as "was inserted" for blue entries
      blue_.erase(e.lo);
    }
  }
}

Rank StripRegions::b_hi() const {
  if (!has_red_) return kNegInf;
  auto it = blue_.lower_bound(r_lo_);
  return it == blue_.begin() ? kNegInf : *std::prev(it);
}

Rank StripRegions::t_lo() const {
  if (!has_red_) return kPosInf;
  auto it = blue_.upper_bound(r_hi_);
  return it == blue_.end() ? kPosInf : *it;
}

Location StripRegions::locate(RPoint p) const {
  if (has_red_ && r_lo_ <= p.y && p.y <= r_hi_) return {Locus::Red, Component::None};
  const Rank lo = has_red_ ? std::min(r_lo_, p.y) : p.y;
  const Rank hi = has_red_ ? std::max(r_hi_, p.y) : p.y;
  auto it = blue_.lower_bound(lo);
  if (it != blue_.end() && *it <= hi) return {Locus::Blue, Component::None};
  if (!has_red_) return {Locus::White, Component::None};
  return {Locus::Gray, p.y < r_lo_ ? Component::Lower : Component::Upper};
}

void StripRegions::report(const RangeIndex& index, RPoint, Color, ForcedHits& out) const {
  if (!has_red_) return;
  index.report(r_lo_, r_hi_, Secondary::Any, 0, out.red);
  const Rank b = b_hi();
  if (b != kNegInf) index.report(kNegInf, b, Secondary::Any, 0, out.blue);
  const Rank t = t_lo();
  if (t != kPosInf) index.report(t, kPosInf, Secondary::Any, 0, out.blue);
}

// ---------------------------------------------------------------------------
// Quadrant

bool QuadrantRegions::forbidden(Rank x, Rank y) const {
  auto it = by_x_.lower_bound(x);
  return it != by_x_.end() && it->second <= y;
}

void QuadrantRegions::erase_corner(Rank x, Rank y) {
  by_x_.erase(x);
  by_y_.erase(y);
  log_.push_back({Op::Erase, false, x, y});
}

bool QuadrantRegions::update(RPoint p, Color c) {
  if (c == Color::Red) {
    log_.push_back({Op::Apex, has_red_, x_, y_});
    x_ = has_red_ ? std::min(x_, p.x) : p.x;
    y_ = has_red_ ? std::max(y_, p.y) : p.y;
    has_red_ = true;
    return !forbidden(x_, y_);
  }
  const bool inside = has_red_ && p.x >= x_ && p.y <= y_;
  if (forbidden(p.x, p.y)) return !inside;  // dominated: its region is already covered
  auto it = by_x_.lower_bound(p.x);
  while (it != by_x_.begin()) {
    auto prev = std::prev(it);
    if (prev->second < p.y) break;
    const Rank x = prev->first;
    const Rank y = prev->second;
    erase_corner(x, y);
    it = by_x_.lower_bound(p.x);
  }
  by_x_.emplace(p.x, p.y);
  by_y_.emplace(p.y, p.x);
  log_.push_back({Op::Insert, false, p.x, p.y});
  return !inside;
}

void QuadrantRegions::undo(std::size_t mark) {
  while (log_.size() > mark) {
    const Entry e = log_.back();
    log_.pop_back();
    switch (e.op) {
      case Op::Apex:
        has_red_ = e.had_red;
        x_ = e.a;
        y_ = e.b;
        break;
      case Op::Insert:
        by_x_.erase(e.a);
        by_y_.erase(e.b);
        break;
      case Op::Erase:
        by_x_.emplace(e.a, e.b);
        by_y_.emplace(e.b, e.a);
        break;
    }
  }
}

std::vector<RPoint> QuadrantRegions::staircase() const {
  std::vector<RPoint> out;
  out.reserve(by_x_.size());
  for (const auto& [x, y] : by_x_) out.push_back({x, y});
  return out;
}

Rank QuadrantRegions::blue_top() const {
  if (!has_red_) return kPosInf;
  auto it = by_x_.lower_bound(x_);
  return it == by_x_.end() ? kPosInf : it->second;
}

Rank QuadrantRegions::blue_left() const {
  if (!has_red_) return kNegInf;
  auto it = by_y_.upper_bound(y_);
  return it == by_y_.begin() ? kNegInf : std::prev(it)->second;
}

Location QuadrantRegions::locate(RPoint p) const {
  if (has_red_ && p.x >= x_ && p.y <= y_) return {Locus::Red, Component::None};
  const Rank hx = has_red_ ? std::min(x_, p.x) : p.x;
  const Rank hy = has_red_ ? std::max(y_, p.y) : p.y;
  if (forbidden(hx, hy)) return {Locus::Blue, Component::None};
  if (!has_red_) return {Locus::White, Component::None};
  if (p.x >= x_) return {Locus::Gray, Component::Right};
  if (p.y <= y_) return {Locus::Gray, Component::Down};
  return {Locus::White, Component::None};
}

void QuadrantRegions::report(const RangeIndex& index, RPoint last, Color c, ForcedHits& out) const {
  if (c == Color::Red) {
    if (!has_red_) return;
    index.report(x_, kPosInf, Secondary::AtMost, y_, out.red);
    const Rank top = blue_top();
    if (top != kPosInf) index.report(kNegInf, kPosInf, Secondary::AtLeast, top, out.blue);
    const Rank left = blue_left();
    if (left != kNegInf) index.report(kNegInf, left, Secondary::Any, 0, out.blue);
    return;
  }
  if (has_red_ && last.x >= x_) {
    index.report(kNegInf, kPosInf, Secondary::AtLeast, last.y, out.blue);
  } else if (has_red_ && last.y <= y_) {
    index.report(kNegInf, last.x, Secondary::Any, 0, out.blue);
  } else {
    index.report(kNegInf, last.x, Secondary::AtLeast, last.y, out.blue);
  }
}

// ---------------------------------------------------------------------------
// 3-rectangle

bool ThreeRectRegions::update(RPoint p, Color c) {
  if (c == Color::Red) {
    log_.push_back({true, has_red_, l_, r_, t_});
    l_ = has_red_ ? std::min(l_, p.x) : p.x;
    r_ = has_red_ ? std::max(r_, p.x) : p.x;
    t_ = has_red_ ? std::max(t_, p.y) : p.y;
    has_red_ = true;
    return blue_.min(l_, r_) > t_;
  }
  const Rank prev = blue_.get(p.x);
  log_.push_back({false, false, p.x, prev, 0});
  blue_.set(p.x, std::min(prev, p.y));
  return !(has_red_ && l_ <= p.x && p.x <= r_ && p.y <= t_);
}

void ThreeRectRegions::undo(std::size_t mark) {
  while (log_.size() > mark) {
    const Entry e = log_.back();
    log_.pop_back();
    if (e.red) {
      has_red_ = e.had_red;
      l_ = e.l;
      r_ = e.r;
      t_ = e.t;
    } else {
      blue_.set(e.l, e.r);
    }
  }
}

Rank ThreeRectRegions::a_bound() const {
  if (!has_red_) return kNegInf;
  const Rank a = blue_.rightmost_at_most(0, l_ - 1, t_);
  return a < 0 ? kNegInf : a;
}

Rank ThreeRectRegions::e_bound() const {
  if (!has_red_) return kPosInf;
  const Rank e = blue_.leftmost_at_most(r_ + 1, blue_.extent() - 1, t_);
  return e < 0 ? kPosInf : e;
}

Rank ThreeRectRegions::c_bound() const {
  if (!has_red_) return kPosInf;
  return blue_.min(l_, r_);
}

std::vector<RPoint> ThreeRectRegions::staircase_b() const {
  std::vector<RPoint> out;
  if (!has_red_) return out;
  Rank suffix = kPosInf;
  for (Rank x = l_ - 1; x >= 0; --x) {
    const Rank y = blue_.get(x);
    if (y == kPosInf || y <= t_) continue;
    if (y < suffix) {
      out.push_back({x, y});
      suffix = y;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<RPoint> ThreeRectRegions::staircase_d() const {
  std::vector<RPoint> out;
  if (!has_red_) return out;
  Rank prefix = kPosInf;
  for (Rank x = r_ + 1; x < blue_.extent(); ++x) {
    const Rank y = blue_.get(x);
    if (y == kPosInf || y <= t_) continue;
    if (y < prefix) {
      out.push_back({x, y});
      prefix = y;
    }
  }
  return out;
}

Location ThreeRectRegions::locate(RPoint p) const {
  if (has_red_ && l_ <= p.x && p.x <= r_ && p.y <= t_) return {Locus::Red, Component::None};
  const Rank hl = has_red_ ? std::min(l_, p.x) : p.x;
  const Rank hr = has_red_ ? std::max(r_, p.x) : p.x;
  const Rank ht = has_red_ ? std::max(t_, p.y) : p.y;
  if (blue_.min(hl, hr) <= ht) return {Locus::Blue, Component::None};
  if (!has_red_) return {Locus::White, Component::None};
  if (p.x < l_) return {Locus::Gray, p.y <= t_ ? Component::A : Component::B};
  if (p.x > r_) return {Locus::Gray, p.y <= t_ ? Component::E : Component::D};
  return {Locus::Gray, Component::C};
}

void ThreeRectRegions::report(const RangeIndex& index, RPoint last, Color c, ForcedHits& out) const {
  if (!has_red_) return;
  auto blue_region = [&](Rank bx, Rank by) {
    if (bx < l_) {
      if (by <= t_) index.report(kNegInf, bx, Secondary::Any, 0, out.blue);
      else index.report(kNegInf, bx, Secondary::AtLeast, by, out.blue);
    } else if (bx > r_) {
      if (by <= t_) index.report(bx, kPosInf, Secondary::Any, 0, out.blue);
      else index.report(bx, kPosInf, Secondary::AtLeast, by, out.blue);
    } else {
      index.report(kNegInf, kPosInf, Secondary::AtLeast, by, out.blue);
    }
  };
  if (c == Color::Blue) {
    blue_region(last.x, last.y);
    return;
  }
  index.report(l_, r_, Secondary::AtMost, t_, out.red);
  if (!log_.empty() && log_.back().red && !log_.back().had_red) {
    // First red point: every earlier blue point gets its region now.
    for (Rank x = 0; x < blue_.extent(); ++x) {
      const Rank y = blue_.get(x);
      if (y != kPosInf) blue_region(x, y);
    }
    return;
  }
  const Rank a = a_bound();
  if (a != kNegInf) index.report(kNegInf, a, Secondary::Any, 0, out.blue);
  const Rank e = e_bound();
  if (e != kPosInf) index.report(e, kPosInf, Secondary::Any, 0, out.blue);
  const Rank top = c_bound();
  if (top != kPosInf) index.report(kNegInf, kPosInf, Secondary::AtLeast, top, out.blue);
}

bool operator==(const ThreeRectRegions& l, const ThreeRectRegions& r) {
  if (l.has_red_ != r.has_red_ || l.l_ != r.l_ || l.r_ != r.r_ || l.t_ != r.t_) return false;
  if (l.blue_.extent() != r.blue_.extent()) return false;
  for (Rank x = 0; x < l.blue_.extent(); ++x) {
    if (l.blue_.get(x) != r.blue_.get(x)) return false;
  }
  return true;
}

}  // namespace stabber
