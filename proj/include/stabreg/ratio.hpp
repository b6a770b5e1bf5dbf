#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace stabreg {

/// Exact non-negative rational used for ε, μ thresholds.
class Ratio {
 public:
  Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den);

  /// Accepts "0.25", "1/4", "3"; decimals may carry at most 6 places.
  static Ratio parse(const std::string& text);
  /// Nearest value with denominator 10^6.
  static Ratio from_double(double v);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  /// ε n < c, exactly.
  bool times_lt(std::size_t n, std::size_t c) const;
  /// c ≤ ε n
  bool count_le(std::size_t c, std::size_t n) const { return !times_lt(n, c); }
  /// c > ε n
  bool count_gt(std::size_t c, std::size_t n) const { return times_lt(n, c); }
  /// c < ε n
  bool count_lt(std::size_t c, std::size_t n) const;
  /// c ≥ (1-ε) n
  bool count_ge_complement(std::size_t c, std::size_t n) const;

  Ratio half() const;
  Ratio complement() const;  // 1 - this

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend bool operator<(const Ratio& a, const Ratio& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace stabreg
