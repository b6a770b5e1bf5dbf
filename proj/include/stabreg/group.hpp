#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabreg {

/// Position of an element (or character) in the row-major mixed-radix order.
using Rank = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of G = Z/n_1 x ... x Z/n_r; coords[i] lies in [0, n_i).
struct Element {
  std::vector<int> coords;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Character of G, stored with the same shape as an element. Evaluates to
/// exp(2 pi i sum_j t_j x_j / n_j).
struct Character {
  std::vector<int> coeffs;

  friend bool operator==(const Character&, const Character&) = default;
};

/// A finite abelian group presented as a product of cyclic factors.
///
/// Elements are ordered row-major over the moduli as given: the last factor
/// varies fastest, so in Z/4 x Z/3 the element (1,2) has rank 1*3+2 = 5.
/// Characters reuse the same indexing.
class Group {
 public:
  static constexpr std::size_t kMaxOrder = std::size_t{1} << 20;

  explicit Group(std::vector<int> moduli);
  static Group cyclic(int n) { return Group({n}); }

  std::span<const int> moduli() const { return moduli_; }
  int factors() const { return static_cast<int>(moduli_.size()); }
  std::size_t order() const { return order_; }
  bool is_cyclic() const { return moduli_.size() == 1; }

  Rank rank(const Element& e) const;
  Element unrank(std::size_t i) const;
  bool valid(const Element& e) const;

  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element zero() const;

  Rank add(Rank a, Rank b) const;
  Rank sub(Rank a, Rank b) const;
  Rank neg(Rank a) const;
  /// n * a.
  Rank times(std::int64_t n, Rank a) const;

  /// lcm of the moduli; every character phase is a multiple of 1/lcm.
  std::uint64_t phase_modulus() const { return lcm_; }
  /// Numerator p in [0, lcm) with chi(x) = exp(2 pi i p / lcm).
  std::uint64_t phase(Rank chi, Rank x) const;

  std::complex<double> char_eval(const Character& chi, const Element& x) const;
  std::complex<double> char_eval(Rank chi, Rank x) const;

  Character character(Rank r) const { return Character{unrank(r).coords}; }
  Rank character_rank(const Character& c) const { return rank(Element{c.coeffs}); }

  /// "Z4xZ3".
  std::string to_string() const;
  /// "3" for cyclic groups, "(1,2)" otherwise.
  std::string format(const Element& e) const;
  std::string format(Rank r) const { return format(unrank(r)); }

  friend bool operator==(const Group& a, const Group& b) { return a.moduli_ == b.moduli_; }

 private:
  int digit(Rank r, int axis) const {
    return static_cast<int>((r / strides_[axis]) % static_cast<std::size_t>(moduli_[axis]));
  }

  std::vector<int> moduli_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint64_t> phase_scale_;  // lcm / n_i
  std::size_t order_ = 1;
  std::uint64_t lcm_ = 1;
};

}  // namespace stabreg
