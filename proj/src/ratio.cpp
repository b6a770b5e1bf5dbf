#include "stabreg/ratio.hpp"

#include <cmath>
#include <numeric>

#include "stabreg/group.hpp"

namespace stabreg {

using i128 = __int128;

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw Error("ratio must be non-negative with positive denominator");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Ratio Ratio::parse(const std::string& text) {
  if (text.empty()) throw Error("empty number");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    try {
      std::size_t p1 = 0, p2 = 0;
      const auto n = std::stoll(text.substr(0, slash), &p1);
      const auto d = std::stoll(text.substr(slash + 1), &p2);
      if (p1 != slash || p2 != text.size() - slash - 1) throw Error("");
      return Ratio(n, d);
    } catch (...) {
      throw Error("bad rational '" + text + "'");
    }
  }
  std::int64_t num = 0, den = 1;
  bool dot = false, digits = false;
  int places = 0;
  for (char c : text) {
    if (c == '.' && !dot) {
      dot = true;
    } else if (c >= '0' && c <= '9') {
      digits = true;
      if (dot && ++places > 6) throw Error("'" + text + "' has more than 6 decimal places");
      num = num * 10 + (c - '0');
      if (dot) den *= 10;
      if (num > (std::int64_t{1} << 50)) throw Error("number too large: " + text);
    } else {
      throw Error("bad decimal '" + text + "'");
    }
  }
  if (!digits) throw Error("bad decimal '" + text + "'");
  return Ratio(num, den);
}

Ratio Ratio::from_double(double v) {
  if (!(v >= 0)) throw Error("negative ratio");
  return Ratio(static_cast<std::int64_t>(std::llround(v * 1e6)), 1000000);
}

std::string Ratio::str() const {
  if (den_ == 1) return std::to_string(num_);
  std::int64_t d = den_;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  std::int64_t scale = 1;
  std::size_t places = 0;
  while (scale % den_ != 0) {
    scale *= 10;
    ++places;
  }
  std::string s = std::to_string(num_ * (scale / den_));
  if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
  s.insert(s.size() - places, ".");
  return s;
}

bool Ratio::times_lt(std::size_t n, std::size_t c) const {
  return static_cast<i128>(num_) * static_cast<i128>(n) < static_cast<i128>(c) * den_;
}

bool Ratio::count_lt(std::size_t c, std::size_t n) const {
  return static_cast<i128>(c) * den_ < static_cast<i128>(n) * num_;
}

bool Ratio::count_ge_complement(std::size_t c, std::size_t n) const {
  // c ≥ (1-ε) n  ⇔  c·den ≥ n·den − n·num
  return static_cast<i128>(c) * den_ >= static_cast<i128>(n) * (den_ - num_);
}

Ratio Ratio::half() const { return Ratio(num_, den_ * 2); }

Ratio Ratio::complement() const {
  if (num_ > den_) throw Error("complement of ratio above 1");
  return Ratio(den_ - num_, den_);
}

bool operator<(const Ratio& a, const Ratio& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

}  // namespace stabreg
