#pragma once

// Cascading engine over one region type. Segments move U -> W -> C; popping a
// W entry colors both endpoints, grows the regions and pulls every unknown
// endpoint the regions now cover out of the range index into W.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabber/core.hpp"
#include "stabber/range_index.hpp"
#include "stabber/ranked.hpp"
#include "stabber/regions.hpp"

namespace stabber {

enum class SegStatus : std::uint8_t { U, W, C };
enum class Discipline : std::uint8_t { Fifo, Lifo };

struct Outcome {
  enum class Kind : std::uint8_t { Updated, Quiescent, Contradiction };
  Kind kind = Kind::Updated;
  std::size_t witness = static_cast<std::size_t>(-1);  // endpoint index on contradiction

  bool contradiction() const { return kind == Kind::Contradiction; }
};

struct Checkpoint {
  std::size_t journal = 0;
  std::uint64_t last_serial = 0;
  std::size_t region_mark = 0;
  std::deque<std::pair<std::size_t, Color>> waiting;
  bool contradicted = false;
  std::size_t witness = static_cast<std::size_t>(-1);
};

/// One painted point, real or virtual, in paint order.
struct Paint {
  RPoint at;
  Color color;
};

template <class Region>
class Cascade {
 public:
  /// active: endpoints that take part in the regions (empty = all). Inactive
  /// endpoints still get colors but are never painted nor indexed.
  Cascade(const RankedGeometry& g, const std::vector<bool>& active = {}, Discipline discipline = Discipline::Fifo)
      : g_(&g), region_(g), discipline_(discipline) {
    const std::size_t m = 2 * g.n;
    active_.assign(m, true);
    if (!active.empty()) active_ = active;
    status_.assign(g.n, SegStatus::U);
    pending_.assign(g.n, {0, Color::None});
    colors_.assign(m, Color::None);
    std::vector<Rank> primary(m), secondary(m);
    for (std::size_t e = 0; e < m; ++e) {
      primary[e] = Region::kPrimaryIsX ? g.pts[e].x : g.pts[e].y;
      secondary[e] = Region::kPrimaryIsX ? g.pts[e].y : g.pts[e].x;
    }
    index_ = RangeIndex(primary, secondary, active_);
    unknown_ = g.n;
  }

  /// Classifies endpoints (partners get the opposite color) without cascading.
  Outcome seed(std::span<const std::pair<std::size_t, Color>> assignments) {
    for (std::size_t i = 0; i < assignments.size(); ++i) {
      for (std::size_t j = i + 1; j < assignments.size(); ++j) {
        if (assignments[i].first == assignments[j].first && assignments[i].second != assignments[j].second) {
          throw Error(ErrorKind::DoubleAssignmentConflict,
                      "endpoint " + std::to_string(assignments[i].first) + " seeded with both colors");
        }
      }
    }
    if (contradicted_) return contradiction(witness_);
    for (const auto& [e, c] : assignments) {
      if (!enqueue(e, c)) return contradiction(e);
    }
    return {Outcome::Kind::Updated, static_cast<std::size_t>(-1)};
  }

  Outcome seed(std::size_t e, Color c) {
    const std::pair<std::size_t, Color> one[] = {{e, c}};
    return seed(one);
  }

  /// Paints a virtual point (not an endpoint) into the regions.
  Outcome seed_region(RPoint p, Color c = Color::Red) {
    if (contradicted_) return contradiction(witness_);
    if (!paint(p, c)) return contradiction(conflict_);
    return {Outcome::Kind::Updated, static_cast<std::size_t>(-1)};
  }

  Outcome run() {
    if (contradicted_) return contradiction(witness_);
    while (!waiting_.empty()) {
      std::pair<std::size_t, Color> top;
      if (discipline_ == Discipline::Fifo) {
        top = waiting_.front();
        waiting_.pop_front();
      } else {
        top = waiting_.back();
        waiting_.pop_back();
      }
      ++iterations_;
      const auto [e, c] = top;
      const std::size_t s = e / 2;
      set_status(s, SegStatus::C);
      set_color(e, c);
      set_color(e ^ 1U, opposite(c));
      for (const auto& [pt, col] : {std::pair{e, c}, std::pair{e ^ 1U, opposite(c)}}) {
        if (!active_[pt]) continue;
        if (!paint(g_->pts[pt], col)) return contradiction(conflict_ != kNone ? conflict_ : pt);
      }
    }
    return {Outcome::Kind::Quiescent, static_cast<std::size_t>(-1)};
  }

  Checkpoint checkpoint() const {
    return {journal_.size(), journal_.empty() ? 0 : journal_.back().serial, region_.mark(), waiting_, contradicted_,
            witness_};
  }

  void rollback(const Checkpoint& cp) {
    if (cp.journal > journal_.size() ||
        (cp.journal > 0 && journal_[cp.journal - 1].serial != cp.last_serial)) {
      throw Error(ErrorKind::StaleCheckpoint, "checkpoint refers to a truncated journal");
    }
    while (journal_.size() > cp.journal) {
      const Entry& j = journal_.back();
      switch (j.kind) {
        case Entry::Kind::Color: colors_[j.a] = Color::None; break;
        case Entry::Kind::Status:
          if (status_[j.a] == SegStatus::U) --unknown_;
          status_[j.a] = static_cast<SegStatus>(j.b);
          pending_[j.a] = {j.c, static_cast<Color>(j.d)};
          if (status_[j.a] == SegStatus::U) ++unknown_;
          break;
        case Entry::Kind::IndexDelete: index_.insert(j.a); break;
        case Entry::Kind::Paint: paints_.pop_back(); break;
      }
      journal_.pop_back();
    }
    region_.undo(cp.region_mark);
    waiting_ = cp.waiting;
    contradicted_ = cp.contradicted;
    witness_ = cp.witness;
  }

  // --- inspection ---------------------------------------------------------
  const RankedGeometry& geometry() const { return *g_; }
  const Region& region() const { return region_; }
  const RangeIndex& index() const { return index_; }
  SegStatus status(std::size_t seg) const { return status_[seg]; }
  Color color(std::size_t e) const { return colors_[e]; }
  std::span<const Color> colors() const { return colors_; }
  bool active(std::size_t e) const { return active_[e]; }
  std::size_t unknown_count() const { return unknown_; }
  std::size_t waiting_count() const { return waiting_.size(); }
  std::size_t iterations() const { return iterations_; }
  std::size_t journal_size() const { return journal_.size(); }
  bool contradicted() const { return contradicted_; }
  const std::vector<Paint>& paints() const { return paints_; }
  std::vector<std::size_t> unknown_segments() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < status_.size(); ++s) {
      if (status_[s] == SegStatus::U) out.push_back(s);
    }
    return out;
  }

  /// Classification of the current state (segments still in U or W stay uncolored).
  Classification classification() const {
    Classification out(g_->n);
    for (std::size_t s = 0; s < g_->n; ++s) {
      if (status_[s] == SegStatus::C) out.assign(EndpointId::from_index(2 * s), colors_[2 * s]);
    }
    return out;
  }

  StabberClass current_class() const {
    StabberClass cls;
    for (std::size_t e = 0; e < colors_.size(); ++e) {
      if (colors_[e] == Color::Red) cls.reds.push_back(EndpointId::from_index(e));
    }
    return cls;
  }

  /// Throws InternalInvariantViolation when the engine state is inconsistent.
  void check_invariants() const {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::InternalInvariantViolation, what); };
    std::size_t u = 0;
    for (std::size_t s = 0; s < g_->n; ++s) {
      const std::size_t a = 2 * s, b = 2 * s + 1;
      switch (status_[s]) {
        case SegStatus::U:
          ++u;
          if (colors_[a] != Color::None || colors_[b] != Color::None) fail("unknown segment is colored");
          if (index_.contains(a) != active_[a] || index_.contains(b) != active_[b]) fail("index misses an unknown endpoint");
          break;
        case SegStatus::W:
          if (colors_[a] != Color::None || colors_[b] != Color::None) fail("waiting segment is colored");
          if (index_.contains(a) || index_.contains(b)) fail("waiting endpoint still indexed");
          break;
        case SegStatus::C:
          if (colors_[a] == Color::None || colors_[b] != opposite(colors_[a])) fail("classified segment not split");
          if (index_.contains(a) || index_.contains(b)) fail("classified endpoint still indexed");
          break;
      }
    }
    if (u != unknown_) fail("unknown count drifted");
    if (!contradicted_ && waiting_.empty()) {
      for (std::size_t e = 0; e < colors_.size(); ++e) {
        if (colors_[e] == Color::None || !active_[e]) continue;
        const Location loc = region_.locate(g_->pts[e]);
        if (colors_[e] == Color::Red && loc.locus != Locus::Red) fail("red endpoint outside red region");
        if (colors_[e] == Color::Blue && loc.locus != Locus::Blue) fail("blue endpoint outside blue region");
      }
      for (std::size_t s = 0; s < g_->n; ++s) {
        if (status_[s] != SegStatus::U) continue;
        for (std::size_t e : {2 * s, 2 * s + 1}) {
          if (!active_[e]) continue;
          const Locus l = region_.locate(g_->pts[e]).locus;
          if (l == Locus::Red || l == Locus::Blue) fail("quiescent state left a covered endpoint unknown");
        }
      }
    }
  }

 private:
  struct Entry {
    enum class Kind : std::uint8_t { Color, Status, IndexDelete, Paint };
    Kind kind;
    std::uint64_t serial;
    std::size_t a;
    std::uint8_t b = 0;
    std::size_t c = 0;
    std::uint8_t d = 0;
  };

  Outcome contradiction(std::size_t witness) {
    contradicted_ = true;
    witness_ = witness;
    return {Outcome::Kind::Contradiction, witness};
  }

  void log(Entry e) {
    e.serial = ++serial_;
    journal_.push_back(e);
  }

  void set_color(std::size_t e, Color c) {
    colors_[e] = c;
    log({Entry::Kind::Color, 0, e});
  }

  void set_status(std::size_t s, SegStatus st) {
    log({Entry::Kind::Status, 0, s, static_cast<std::uint8_t>(status_[s]), pending_[s].first,
         static_cast<std::uint8_t>(pending_[s].second)});
    if (status_[s] == SegStatus::U) --unknown_;
    status_[s] = st;
    if (st == SegStatus::U) ++unknown_;
  }

  void drop_from_index(std::size_t e) {
    if (!index_.contains(e)) return;
    index_.erase(e);
    log({Entry::Kind::IndexDelete, 0, e});
  }

  /// Puts (e, c) into W; false when it contradicts what is already known.
  bool enqueue(std::size_t e, Color c) {
    const std::size_t s = e / 2;
    switch (status_[s]) {
      case SegStatus::U:
        set_status(s, SegStatus::W);
        pending_[s] = {e, c};
        drop_from_index(2 * s);
        drop_from_index(2 * s + 1);
        waiting_.emplace_back(e, c);
        return true;
      case SegStatus::W: {
        const auto [pe, pc] = pending_[s];
        return (pe == e ? pc : opposite(pc)) == c;
      }
      case SegStatus::C:
        return colors_[e] == c;
    }
    return false;
  }

  /// On failure conflict_ names the covered endpoint that clashed, if any.
  bool paint(RPoint p, Color c) {
    conflict_ = kNone;
    log({Entry::Kind::Paint, 0, 0});
    paints_.push_back({p, c});
    if (!region_.update(p, c)) return false;
    hits_.clear();
    region_.report(index_, p, c, hits_);
    for (std::size_t e : hits_.red) {
      if (!enqueue(e, Color::Red)) {
        conflict_ = e;
        return false;
      }
    }
    for (std::size_t e : hits_.blue) {
      if (!enqueue(e, Color::Blue)) {
        conflict_ = e;
        return false;
      }
    }
    return true;
  }

  const RankedGeometry* g_;
  Region region_;
  Discipline discipline_;
  std::vector<bool> active_;
  std::vector<SegStatus> status_;
  std::vector<std::pair<std::size_t, Color>> pending_;
  std::vector<Color> colors_;
  RangeIndex index_;
  std::deque<std::pair<std::size_t, Color>> waiting_;
  std::vector<Entry> journal_;
  std::vector<Paint> paints_;
  std::uint64_t serial_ = 0;
  std::size_t unknown_ = 0;
  std::size_t iterations_ = 0;
  bool contradicted_ = false;
  std::size_t witness_ = static_cast<std::size_t>(-1);
  ForcedHits hits_;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t conflict_ = kNone;
};

}  // namespace stabber
