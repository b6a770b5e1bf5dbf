#pragma once

#include <complex>
#include <vector>

#include "stabreg/gset.hpp"

namespace stabreg {

using cplx = std::complex<double>;

/// Function G -> C indexed by element rank.
struct DenseFunction {
  Group group;
  std::vector<cplx> values;

  explicit DenseFunction(Group g) : group(std::move(g)), values(group.order()) {}
  DenseFunction(Group g, std::vector<cplx> v);

  double mean_real() const;
};

/// Function on the dual group indexed by character rank.
struct Spectrum {
  Group group;
  std::vector<cplx> coeffs;

  explicit Spectrum(Group g) : group(std::move(g)), coeffs(group.order()) {}
};

/// f^(γ) = E_x f(x) γ(x).
Spectrum fourier_transform(const DenseFunction& f);
/// f(x) = Σ_γ F(γ) conj(γ(x)); exact inverse of fourier_transform.
DenseFunction inverse_transform(const Spectrum& F);

/// f*g(x) = E_y f(y) g(x-y).
DenseFunction convolve(const DenseFunction& f, const DenseFunction& g);
DenseFunction iterated_convolve(const DenseFunction& f, int m);

DenseFunction indicator(const GSet& a);
/// μ_B = 1_B |G|/|B|.
DenseFunction char_measure(const GSet& b);
/// 1_A - |A|/|G|.
DenseFunction balanced(const GSet& a);

/// Characters with |f^(γ)| ≥ rho, ascending rank.
std::vector<Rank> spec(const DenseFunction& f, double rho);
std::vector<Rank> spec(const Spectrum& F, double rho);

/// L2 norm under normalized counting measure on G.
double norm_g(const DenseFunction& f);
/// L2 norm under counting measure on the dual.
double norm_dual(const Spectrum& F);

namespace detail {
/// In-place DFT of length n: out[k] = Σ_j in[j] exp(sign 2πi jk/n).
void dft1d(std::vector<cplx>& data, int sign);
}  // namespace detail

}  // namespace stabreg
