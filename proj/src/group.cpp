#include "stabreg/group.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace stabreg {

Group::Group(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw Error("group needs at least one cyclic factor");
  for (int n : moduli_) {
    if (n < 1) throw Error("cyclic factor Z" + std::to_string(n) + " must have n >= 1");
    order_ *= static_cast<std::size_t>(n);
    if (order_ > kMaxOrder) throw Error("group order exceeds cap of 2^20");
    lcm_ = std::lcm(lcm_, static_cast<std::uint64_t>(n));
  }
  strides_.assign(moduli_.size(), 1);
  for (int i = factors() - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * static_cast<std::size_t>(moduli_[i + 1]);
  for (int n : moduli_) phase_scale_.push_back(lcm_ / static_cast<std::uint64_t>(n));
}

bool Group::valid(const Element& e) const {
  if (e.coords.size() != moduli_.size()) return false;
  for (int i = 0; i < factors(); ++i)
    if (e.coords[i] < 0 || e.coords[i] >= moduli_[i]) return false;
  return true;
}

Rank Group::rank(const Element& e) const {
  if (!valid(e)) throw Error("element " + format(e) + " is not in " + to_string());
  std::size_t r = 0;
  for (int i = 0; i < factors(); ++i) r += strides_[i] * static_cast<std::size_t>(e.coords[i]);
  return static_cast<Rank>(r);
}

Element Group::unrank(std::size_t i) const {
  if (i >= order_) throw Error("rank " + std::to_string(i) + " out of range for " + to_string());
  Element e;
  e.coords.resize(moduli_.size());
  for (int a = 0; a < factors(); ++a) e.coords[a] = digit(static_cast<Rank>(i), a);
  return e;
}

Element Group::add(const Element& a, const Element& b) const {
  if (!valid(a) || !valid(b)) throw Error("group mismatch in add");
  Element out;
  out.coords.resize(moduli_.size());
  for (int i = 0; i < factors(); ++i) out.coords[i] = (a.coords[i] + b.coords[i]) % moduli_[i];
  return out;
}

Element Group::neg(const Element& a) const {
  if (!valid(a)) throw Error("group mismatch in neg");
  Element out;
  out.coords.resize(moduli_.size());
  for (int i = 0; i < factors(); ++i) out.coords[i] = (moduli_[i] - a.coords[i]) % moduli_[i];
  return out;
}

Element Group::zero() const { return Element{std::vector<int>(moduli_.size(), 0)}; }

Rank Group::add(Rank a, Rank b) const {
  if (moduli_.size() == 1) {
    std::size_t s = static_cast<std::size_t>(a) + b;
    return static_cast<Rank>(s >= order_ ? s - order_ : s);
  }
  std::size_t r = 0;
  for (int i = 0; i < factors(); ++i) {
    int s = digit(a, i) + digit(b, i);
    if (s >= moduli_[i]) s -= moduli_[i];
    r += strides_[i] * static_cast<std::size_t>(s);
  }
  return static_cast<Rank>(r);
}

Rank Group::neg(Rank a) const {
  if (moduli_.size() == 1) return a == 0 ? 0 : static_cast<Rank>(order_ - a);
  std::size_t r = 0;
  for (int i = 0; i < factors(); ++i) {
    int d = digit(a, i);
    r += strides_[i] * static_cast<std::size_t>(d == 0 ? 0 : moduli_[i] - d);
  }
  return static_cast<Rank>(r);
}

Rank Group::sub(Rank a, Rank b) const { return add(a, neg(b)); }

Rank Group::times(std::int64_t n, Rank a) const {
  std::size_t r = 0;
  for (int i = 0; i < factors(); ++i) {
    std::int64_t m = moduli_[i];
    std::int64_t d = ((n % m) * digit(a, i)) % m;
    if (d < 0) d += m;
    r += strides_[i] * static_cast<std::size_t>(d);
  }
  return static_cast<Rank>(r);
}

std::uint64_t Group::phase(Rank chi, Rank x) const {
  std::uint64_t p = 0;
  for (int i = 0; i < factors(); ++i) {
    auto t = static_cast<std::uint64_t>(digit(chi, i));
    auto v = static_cast<std::uint64_t>(digit(x, i));
    p = (p + (t * v % static_cast<std::uint64_t>(moduli_[i])) * phase_scale_[i]) % lcm_;
  }
  return p;
}

std::complex<double> Group::char_eval(Rank chi, Rank x) const {
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(phase(chi, x)) / static_cast<double>(lcm_);
  return {std::cos(theta), std::sin(theta)};
}

std::complex<double> Group::char_eval(const Character& chi, const Element& x) const {
  if (chi.coeffs.size() != moduli_.size() || !valid(x)) throw Error("shape mismatch in char_eval");
  return char_eval(character_rank(chi), rank(x));
}

std::string Group::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += 'x';
    s += 'Z' + std::to_string(moduli_[i]);
  }
  return s;
}

std::string Group::format(const Element& e) const {
  if (e.coords.size() == 1) return std::to_string(e.coords[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e.coords[i]);
  }
  return s + ")";
}

}  // namespace stabreg
