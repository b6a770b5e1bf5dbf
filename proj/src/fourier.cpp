#include "stabreg/fourier.hpp"

#include <cmath>
#include <numbers>

namespace stabreg {

DenseFunction::DenseFunction(Group g, std::vector<cplx> v) : group(std::move(g)), values(std::move(v)) {
  if (values.size() != group.order()) throw Error("function length does not match group order");
}

double DenseFunction::mean_real() const {
  double s = 0;
  for (const auto& v : values) s += v.real();
  return s / static_cast<double>(values.size());
}

namespace detail {
namespace {

// exp(sign 2πi j/n) for j in [0, n), computed from exact reduced fractions.
std::vector<cplx> twiddles(std::size_t n, int sign) {
  std::vector<cplx> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    w[j] = {std::cos(th), sign * std::sin(th)};
  }
  return w;
}

bool is_pow2(std::size_t n) { return n && !(n & (n - 1)); }

void radix2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto w = twiddles(n, sign);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w[k * step];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

void naive(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  const auto w = twiddles(n, sign);
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx s = 0;
    for (std::size_t j = 0; j < n; ++j) s += a[j] * w[(j * k) % n];
    out[k] = s;
  }
  a.swap(out);
}

void bluestein(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;
  // chirp[j] = exp(sign πi j²/n), with j² reduced mod 2n to keep the phase exact.
  std::vector<cplx> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t q = (j * j) % (2 * n);
    const double th = std::numbers::pi * static_cast<double>(q) / static_cast<double>(n);
    chirp[j] = {std::cos(th), sign * std::sin(th)};
  }
  std::vector<cplx> x(m), y(m);
  for (std::size_t j = 0; j < n; ++j) x[j] = a[j] * chirp[j];
  y[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) y[j] = y[m - j] = std::conj(chirp[j]);
  radix2(x, -1);
  radix2(y, -1);
  for (std::size_t i = 0; i < m; ++i) x[i] *= y[i];
  radix2(x, 1);
  const double inv = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * inv * chirp[k];
}

}  // namespace

void dft1d(std::vector<cplx>& data, int sign) {
  const std::size_t n = data.size();
  if (n <= 1) return;
  if (is_pow2(n)) radix2(data, sign);
  else if (n <= 64) naive(data, sign);
  else bluestein(data, sign);
}

}  // namespace detail

namespace {

// Applies the 1-D transform along every axis of the row-major layout.
void transform_axes(const Group& g, std::vector<cplx>& v, int sign) {
  const auto mod = g.moduli();
  std::size_t inner = g.order();
  std::vector<cplx> line;
  for (int ax = 0; ax < g.factors(); ++ax) {
    const auto n = static_cast<std::size_t>(mod[static_cast<std::size_t>(ax)]);
    inner /= n;
    const std::size_t outer = g.order() / (n * inner);
    line.resize(n);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < inner; ++i) {
        const std::size_t base = o * n * inner + i;
        for (std::size_t j = 0; j < n; ++j) line[j] = v[base + j * inner];
        detail::dft1d(line, sign);
        for (std::size_t j = 0; j < n; ++j) v[base + j * inner] = line[j];
      }
    }
  }
}

void check_same(const Group& a, const Group& b) {
  if (!(a == b)) throw Error("group mismatch: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

Spectrum fourier_transform(const DenseFunction& f) {
  Spectrum out(f.group);
  out.coeffs = f.values;
  transform_axes(f.group, out.coeffs, 1);
  const double inv = 1.0 / static_cast<double>(f.group.order());
  for (auto& c : out.coeffs) c *= inv;
  return out;
}

DenseFunction inverse_transform(const Spectrum& F) {
  DenseFunction out(F.group);
  out.values = F.coeffs;
  transform_axes(F.group, out.values, -1);
  return out;
}

DenseFunction convolve(const DenseFunction& f, const DenseFunction& g) {
  check_same(f.group, g.group);
  auto a = fourier_transform(f);
  const auto b = fourier_transform(g);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] *= b.coeffs[i];
  return inverse_transform(a);
}

DenseFunction iterated_convolve(const DenseFunction& f, int m) {
  if (m < 1) throw Error("iterated_convolve needs m >= 1");
  if (m == 1) return f;
  auto a = fourier_transform(f);
  for (auto& c : a.coeffs) c = std::pow(c, m);
  return inverse_transform(a);
}

DenseFunction indicator(const GSet& a) {
  DenseFunction f(a.group());
  a.for_each([&](Rank r) { f.values[r] = 1.0; });
  return f;
}

DenseFunction char_measure(const GSet& b) {
  if (b.empty()) throw Error("characteristic measure of empty set");
  DenseFunction f(b.group());
  const double w = static_cast<double>(b.universe()) / static_cast<double>(b.size());
  b.for_each([&](Rank r) { f.values[r] = w; });
  return f;
}

DenseFunction balanced(const GSet& a) {
  DenseFunction f(a.group());
  const double alpha = static_cast<double>(a.size()) / static_cast<double>(a.universe());
  for (std::size_t x = 0; x < a.universe(); ++x)
    f.values[x] = (a.contains(static_cast<Rank>(x)) ? 1.0 : 0.0) - alpha;
  return f;
}

std::vector<Rank> spec(const Spectrum& F, double rho) {
  std::vector<Rank> out;
  for (std::size_t i = 0; i < F.coeffs.size(); ++i)
    if (std::abs(F.coeffs[i]) >= rho - 1e-12) out.push_back(static_cast<Rank>(i));
  return out;
}

std::vector<Rank> spec(const DenseFunction& f, double rho) { return spec(fourier_transform(f), rho); }

double norm_g(const DenseFunction& f) {
  double s = 0;
  for (const auto& v : f.values) s += std::norm(v);
  return std::sqrt(s / static_cast<double>(f.values.size()));
}

double norm_dual(const Spectrum& F) {
  double s = 0;
  for (const auto& v : F.coeffs) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace stabreg
