#include <doctest.h>

#include <algorithm>

#include "stabreg/fourier.hpp"
#include "stabreg/oracles.hpp"
#include "stabreg/subgroup.hpp"
#include "support.hpp"

using namespace stabreg;

namespace {

DenseFunction random_function(const Group& g, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  DenseFunction f(g);
  for (auto& v : f.values) v = cplx(nd(rng), nd(rng));
  return f;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("transform of constants and subgroups") {
  const Group g({6, 4});
  DenseFunction one(g);
  for (auto& v : one.values) v = 1;
  const auto F = fourier_transform(one);
  CHECK(std::abs(F.coeffs[0] - cplx(1)) < 1e-12);
  for (std::size_t c = 1; c < F.coeffs.size(); ++c) CHECK(std::abs(F.coeffs[c]) < 1e-12);

  const auto h = span(g, {g.rank(Element{{2, 2}})});
  const auto ann = annihilator(h);
  const auto H = fourier_transform(indicator(h.members()));
  for (Rank c = 0; c < g.order(); ++c) {
    const double want = ann.contains(c) ? static_cast<double>(h.size()) / static_cast<double>(g.order()) : 0.0;
    CHECK(std::abs(H.coeffs[c] - cplx(want)) < 1e-12);
  }
}

TEST_CASE("transform agrees with the direct sum") {
  std::mt19937_64 rng(1);
  for (const auto& m : std::vector<std::vector<int>>{{7, 4}, {1}, {2}, {1, 5}, {3}, {64}, {65}, {97}, {100}, {128}, {210},
                                                    {512}, {3, 5, 7}, {2, 2, 2, 2, 2, 2}, {67, 3}}) {
    const Group g(m);
    INFO(g.to_string());
    const auto f = random_function(g, rng);
    CHECK(max_diff(fourier_transform(f).coeffs, oracle::naive_dft(f).coeffs) < 1e-9);
  }
}

TEST_CASE("one-dimensional DFT paths agree") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> nd;
  for (int n : {1, 2, 5, 63, 64, 65, 96, 127, 128, 243, 1000, 1024}) {
    std::vector<cplx> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = cplx(nd(rng), nd(rng));
    for (int sign : {1, -1}) {
      std::vector<cplx> fast = x;
      detail::dft1d(fast, sign);
      double err = 0;
      for (int k = 0; k < n; ++k) {
        cplx s = 0;
        for (int j = 0; j < n; ++j)
          s += x[static_cast<std::size_t>(j)] *
               std::polar(1.0, sign * 2 * M_PI * static_cast<double>((static_cast<long long>(j) * k) % n) / n);
        err = std::max(err, std::abs(s - fast[static_cast<std::size_t>(k)]));
      }
      INFO("n=" << n);
      CHECK(err < 1e-8);
    }
  }
}

TEST_CASE("inversion") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Group g = testing::random_group(rng, 1024);
    const auto f = random_function(g, rng);
    REQUIRE(max_diff(inverse_transform(fourier_transform(f)).values, f.values) < 1e-9);
  }
  const Group g({5, 3});
  Spectrum c(g);
  c.coeffs[0] = cplx(2.5, -1);
  for (const auto& v : inverse_transform(c).values) CHECK(std::abs(v - cplx(2.5, -1)) < 1e-12);

  Spectrum delta(g);
  const Rank gamma = 7;
  delta.coeffs[gamma] = 1;
  const auto f = inverse_transform(delta);
  for (Rank x = 0; x < g.order(); ++x) CHECK(std::abs(f.values[x] - std::conj(g.char_eval(gamma, x))) < 1e-12);
}

TEST_CASE("Parseval and the convolution theorem") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Group g = testing::random_group(rng, 2048);
    const auto f = random_function(g, rng);
    const auto h = random_function(g, rng);
    const auto F = fourier_transform(f);
    REQUIRE(std::abs(norm_g(f) - norm_dual(F)) < 1e-9);
    const auto FH = fourier_transform(convolve(f, h));
    const auto H = fourier_transform(h);
    double err = 0;
    for (std::size_t c = 0; c < F.coeffs.size(); ++c) err = std::max(err, std::abs(FH.coeffs[c] - F.coeffs[c] * H.coeffs[c]));
    REQUIRE(err < 1e-9);
  }
}

TEST_CASE("convolution") {
  const Group z12 = Group::cyclic(12);
  const auto h = span(z12, {3}).members();
  const auto hh = convolve(indicator(h), indicator(h));
  for (Rank x = 0; x < 12; ++x) CHECK(std::abs(hh.values[x] - cplx(h.contains(x) ? 4.0 / 12 : 0)) < 1e-12);

  std::mt19937_64 rng(5);
  const Group z30 = Group::cyclic(30);
  const auto f = random_function(z30, rng);
  const auto g = random_function(z30, rng);
  CHECK(max_diff(convolve(f, g).values, oracle::naive_convolve(f, g).values) < 1e-9);

  cplx mean = 0;
  for (const auto& v : f.values) mean += v / 30.0;
  for (const auto& v : convolve(char_measure(GSet::full(z30)), f).values) CHECK(std::abs(v - mean) < 1e-12);
  CHECK_THROWS_AS(convolve(f, random_function(Group::cyclic(31), rng)), Error);
}

TEST_CASE("iterated convolution") {
  std::mt19937_64 rng(6);
  const Group g({4, 5});
  const auto f = random_function(g, rng);
  CHECK(max_diff(iterated_convolve(f, 1).values, f.values) == 0);
  CHECK_THROWS_AS(iterated_convolve(f, 0), Error);
  const auto F = fourier_transform(f);
  const auto F3 = fourier_transform(iterated_convolve(f, 3));
  for (std::size_t c = 0; c < F.coeffs.size(); ++c) CHECK(std::abs(F3.coeffs[c] - std::pow(F.coeffs[c], 3)) < 1e-9);

  const auto mu_h = char_measure(span(g, {g.rank(Element{{2, 0}})}).members());
  CHECK(max_diff(iterated_convolve(mu_h, 4).values, mu_h.values) < 1e-9);

  const auto x = testing::set_of(g, {1, 6, 13});
  cplx mass = 0;
  for (const auto& v : iterated_convolve(char_measure(x), 5).values) mass += v;
  CHECK(std::abs(mass / 20.0 - cplx(1)) < 1e-12);
}

TEST_CASE("characteristic measure") {
  const Group z8 = Group::cyclic(8);
  const auto d = char_measure(testing::set_of(z8, {0}));
  CHECK(d.values[0] == cplx(8));
  for (Rank x = 1; x < 8; ++x) CHECK(d.values[x] == cplx(0));
  for (const auto& v : char_measure(GSet::full(z8)).values) CHECK(v == cplx(1));
  CHECK_THROWS_AS(char_measure(GSet(z8)), Error);
  const Group g({9, 7});
  const auto m = char_measure(testing::set_of(g, {1, 2, 40}));
  cplx s = 0;
  for (const auto& v : m.values) s += v;
  CHECK(std::abs(s - cplx(63)) < 1e-12);
}

TEST_CASE("large spectrum") {
  const Group g({4, 6});
  CHECK(spec(char_measure(GSet::full(g)), 0.5) == std::vector<Rank>{0});
  const auto h = span(g, {g.rank(Element{{1, 3}})});
  CHECK(spec(char_measure(h.members()), 0.5) == annihilator(h).members());

  std::mt19937_64 rng(7);
  const Group z50 = Group::cyclic(50);
  const auto f = random_function(z50, rng);
  const auto naive = oracle::naive_dft(f);
  for (double rho : {0.3, 0.6, 1.0}) {
    std::vector<Rank> want;
    for (Rank c = 0; c < 50; ++c)
      if (std::abs(naive.coeffs[c]) >= rho - 1e-12) want.push_back(c);
    CHECK(spec(f, rho) == want);
  }
}

TEST_CASE("balanced function") {
  const Group z12 = Group::cyclic(12);
  for (const auto& v : balanced(GSet::full(z12)).values) CHECK(std::abs(v) < 1e-15);
  for (const auto& v : balanced(GSet(z12)).values) CHECK(std::abs(v) < 1e-15);
  const auto h = span(z12, {3}).members();
  const auto f = balanced(h);
  for (Rank x = 0; x < 12; ++x) CHECK(std::abs(f.values[x] - cplx(h.contains(x) ? 2.0 / 3 : -1.0 / 3)) < 1e-15);
  CHECK(std::abs(f.mean_real()) < 1e-15);
}
