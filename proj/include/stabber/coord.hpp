#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stabber {

/// Exact rational coordinate. Always kept in canonical (reduced) form.
class Coord {
 public:
  Coord() = default;
  Coord(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Coord(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Coord(long num, long den);
  explicit Coord(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Returns nullopt on malformed text or q == 0.
  static std::optional<Coord> parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  bool is_integer() const { return v_.get_den() == 1; }
  /// Integer value when it fits in int64.
  std::optional<std::int64_t> as_int64() const;
  double to_double() const { return v_.get_d(); }
  std::string to_string() const;

  friend Coord operator+(const Coord& a, const Coord& b) { return Coord(mpq_class(a.v_ + b.v_)); }
  friend Coord operator-(const Coord& a, const Coord& b) { return Coord(mpq_class(a.v_ - b.v_)); }
  friend Coord operator*(const Coord& a, const Coord& b) { return Coord(mpq_class(a.v_ * b.v_)); }
  friend Coord operator/(const Coord& a, const Coord& b);
  Coord operator-() const { return Coord(mpq_class(-v_)); }

  friend bool operator==(const Coord& a, const Coord& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Coord& a, const Coord& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Coord& c) { return os << c.to_string(); }

 private:
  mpq_class v_;
};

}  // namespace stabber
