#include "stabber/coord.hpp"

#include <cctype>
#include <limits>

#include "stabber/core.hpp"

namespace stabber {

Coord::Coord(long num, long den) {
  if (den == 0) throw Error(ErrorKind::BadParameter, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Coord> Coord::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) return std::nullopt;
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  return Coord(mpq_class(n, d));
}

std::optional<std::int64_t> Coord::as_int64() const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& n = v_.get_num();
  if (n < mpz_class(std::to_string(std::numeric_limits<std::int64_t>::min())) ||
      n > mpz_class(std::to_string(std::numeric_limits<std::int64_t>::max()))) {
    return std::nullopt;
  }
  return std::stoll(n.get_str());
}

std::string Coord::to_string() const { return v_.get_str(); }

Coord operator/(const Coord& a, const Coord& b) {
  if (sgn(b.v_) == 0) throw Error(ErrorKind::BadParameter, "division by zero");
  return Coord(mpq_class(a.v_ / b.v_));
}

}  // namespace stabber
