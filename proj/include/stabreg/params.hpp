#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabreg {

using BigInt = boost::multiprecision::cpp_int;

/// A possibly astronomically large positive quantity. Held exactly while it
/// fits comfortably, then as log10, then only as a formula.
class Magnitude {
 public:
  enum class Kind { Exact, Real, Log10, Symbolic };

  static Magnitude exact(BigInt v);
  static Magnitude real(double v);
  /// Normalises to Real when the value fits in a double.
  static Magnitude from_log10(double lg);
  static Magnitude symbolic(std::string formula);

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ != Kind::Symbolic; }
  /// log10 of the value; only for finite kinds.
  double log10() const;
  const BigInt& exact_value() const { return exact_; }
  /// Value as double; +inf when out of range.
  double to_double() const;
  /// Decimal for exact/real values, "10^x" for log form, the formula otherwise.
  std::string str() const;

 private:
  Kind kind_ = Kind::Real;
  BigInt exact_;
  double value_ = 0;  // Real: the value, Log10: its log10
  std::string formula_;
};

/// (k+l) 2^(k+l) + 1.
BigInt h(int k, int l);
Magnitude h(int k, const Magnitude& l);
/// f_k^t(k) for t ≥ 0, with f_k^{-1} = 2 and f_k(y) = h(k+1, y).
Magnitude f_iter(int k, int t);
/// 2^(k+2) - 3.
long long tree_height_cap(int k);
/// ln x + 1.
double log_bullet(double x);
/// (D m log_•(1/r))^(6^t).
Magnitude ell(int t, const Magnitude& d, double m, double r);

}  // namespace stabreg
