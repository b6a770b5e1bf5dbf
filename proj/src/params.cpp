#include "stabreg/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "stabreg/group.hpp"

namespace stabreg {

namespace {
constexpr std::size_t kExactBits = 4096;
constexpr double kLog2 = 0.30102999566398119521;
}  // namespace

Magnitude Magnitude::exact(BigInt v) {
  if (boost::multiprecision::msb(v == 0 ? BigInt(1) : v) > kExactBits) {
    // Too wide to print usefully; keep the order of magnitude.
    const auto bits = boost::multiprecision::msb(v);
    BigInt top = v >> (bits > 60 ? bits - 60 : 0);
    const double lg = std::log10(top.convert_to<double>()) + static_cast<double>(bits > 60 ? bits - 60 : 0) * kLog2;
    return from_log10(lg);
  }
  Magnitude m;
  m.kind_ = Kind::Exact;
  m.exact_ = std::move(v);
  return m;
}

Magnitude Magnitude::real(double v) {
  if (!std::isfinite(v) || v < 0) throw Error("magnitude must be finite and non-negative");
  Magnitude m;
  m.kind_ = Kind::Real;
  m.value_ = v;
  return m;
}

Magnitude Magnitude::from_log10(double lg) {
  if (!std::isfinite(lg)) return symbolic("beyond double range");
  if (lg < 300) return real(std::pow(10.0, lg));
  Magnitude m;
  m.kind_ = Kind::Log10;
  m.value_ = lg;
  return m;
}

Magnitude Magnitude::symbolic(std::string formula) {
  Magnitude m;
  m.kind_ = Kind::Symbolic;
  m.formula_ = std::move(formula);
  return m;
}

double Magnitude::log10() const {
  switch (kind_) {
    case Kind::Exact: {
      if (exact_ == 0) return -std::numeric_limits<double>::infinity();
      const auto bits = boost::multiprecision::msb(exact_);
      const unsigned shift = bits > 60 ? static_cast<unsigned>(bits - 60) : 0;
      BigInt top = exact_ >> shift;
      return std::log10(top.convert_to<double>()) + shift * kLog2;
    }
    case Kind::Real: return std::log10(value_);
    case Kind::Log10: return value_;
    case Kind::Symbolic: break;
  }
  throw Error("log10 of symbolic magnitude " + formula_);
}

double Magnitude::to_double() const {
  switch (kind_) {
    case Kind::Exact: return exact_.convert_to<double>();
    case Kind::Real: return value_;
    default: return std::numeric_limits<double>::infinity();
  }
}

std::string Magnitude::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Exact: return exact_.str();
    case Kind::Real:
      os.precision(12);
      os << value_;
      return os.str();
    case Kind::Log10:
      os.precision(12);
      os << "10^" << value_;
      return os.str();
    case Kind::Symbolic: return formula_;
  }
  return "";
}

BigInt h(int k, int l) {
  if (k < 0 || l < 0) throw Error("h(k,l) needs non-negative arguments");
  const int s = k + l;
  BigInt v = BigInt(1) << s;
  return v * s + 1;
}

Magnitude h(int k, const Magnitude& l) {
  if (l.kind() == Magnitude::Kind::Exact && l.exact_value() < 1'000'000) {
    const auto li = l.exact_value().convert_to<int>();
    return Magnitude::exact(h(k, li));
  }
  if (!l.finite()) return Magnitude::symbolic("h(" + std::to_string(k) + ", " + l.str() + ")");
  // log10((k+l) 2^(k+l) + 1) ≈ log10(k+l) + (k+l) log10 2, with l = 10^lg.
  const double lg = l.log10();
  const double s = std::pow(10.0, lg);
  if (!std::isfinite(s)) return Magnitude::symbolic("h(" + std::to_string(k) + ", " + l.str() + ")");
  return Magnitude::from_log10(std::log10(s + k) + (s + k) * kLog2);
}

Magnitude f_iter(int k, int t) {
  if (k < 2 || t < -1) throw Error("f_iter needs k >= 2 and t >= -1");
  if (t == -1) return Magnitude::exact(2);
  Magnitude y = Magnitude::exact(k);
  for (int i = 0; i < t; ++i) {
    y = h(k + 1, y);
    if (!y.finite()) {
      return Magnitude::symbolic("f_" + std::to_string(k) + "^" + std::to_string(t) + "(" + std::to_string(k) + ")");
    }
  }
  return y;
}

long long tree_height_cap(int k) {
  if (k < 2 || k > 58) throw Error("tree_height_cap needs 2 <= k <= 58");
  return (1LL << (k + 2)) - 3;
}

double log_bullet(double x) {
  if (!(x >= 1)) throw Error("log_bullet needs x >= 1");
  return std::log(x) + 1.0;
}

Magnitude ell(int t, const Magnitude& d, double m, double r) {
  if (t < -1 || !(r > 0 && r <= 1) || !(m > 0)) throw Error("ell: argument out of domain");
  const std::string formula = "(D*m*log(1/r)+1)^(6^" + std::to_string(t) + ")";
  if (!d.finite()) return Magnitude::symbolic(formula + " with D = " + d.str());
  const double base_lg = d.log10() + std::log10(m) + std::log10(log_bullet(1.0 / r));
  const double e = std::pow(6.0, t);
  if (t == 0 && d.kind() != Magnitude::Kind::Log10) return Magnitude::real(d.to_double() * m * log_bullet(1.0 / r));
  return Magnitude::from_log10(base_lg * e);
}

}  // namespace stabreg
