#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ghx/errors.hpp"
#include "ghx/herm.hpp"
#include "ghx/rng.hpp"
#include "ghx/sampling.hpp"
#include "ghx/sympoly.hpp"
#include "test_support.hpp"

using namespace ghx;

TEST_CASE("elementary_symmetric matches literal subset sums") {
  CounterRng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + int(rng.next_u64() % 6);
    std::vector<double> lam(std::size_t(n), 0.0);
    for (double& v : lam) v = 3.0 * rng.next_gaussian();
    const auto e = elementary_symmetric(lam);
    REQUIRE(int(e.size()) == n + 1);
    for (int k = 0; k <= n; ++k) {
      const double want = ghxtest::subset_e_k(lam, k);
      CHECK(std::abs(e[std::size_t(k)] - want) <= 1e-10 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("sigma agrees with the subset-sum oracle on random pencils") {
  CounterRng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + int(rng.next_u64() % 4);
    const MetricPencil G(random_metric(n, rng));
    const HermitianForm A = random_hermitian(n, rng);
    for (int k = 1; k <= n; ++k) {
      const double want = ghxtest::sigma_oracle(A, G, k);
      CHECK(std::abs(sigma(A, G, k) - want) <= 1e-9 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("sigma rejects out-of-range degrees") {
  const MetricPencil G = MetricPencil::standard(3);
  CHECK_THROWS_AS(sigma(HermitianForm::identity(3), G, 0), PreconditionError);
  CHECK_THROWS_AS(sigma(HermitianForm::identity(3), G, 4), PreconditionError);
}

TEST_CASE("mixed_sigma is symmetric in its arguments") {
  CounterRng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + int(rng.next_u64() % 4);
    const int m = 2 + int(rng.next_u64() % std::uint64_t(n - 1));
    const MetricPencil G(random_metric(n, rng));
    std::vector<HermitianForm> args;
    for (int j = 0; j < m; ++j) args.push_back(random_hermitian(n, rng));
    const double base = mixed_sigma(args, G);
    for (int s = 0; s < 3; ++s) {
      std::swap(args[rng.next_u64() % std::uint64_t(m)], args[rng.next_u64() % std::uint64_t(m)]);
      CHECK(std::abs(mixed_sigma(args, G) - base) <= 1e-10 * (1.0 + std::abs(base)));
    }
  }
}

TEST_CASE("mixed_sigma is multilinear") {
  CounterRng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3;
    const MetricPencil G(random_metric(n, rng));
    const HermitianForm X = random_hermitian(n, rng);
    const HermitianForm Y = random_hermitian(n, rng);
    const HermitianForm R = random_hermitian(n, rng);
    const double a = 2.0 * rng.next_gaussian();
    const double b = 2.0 * rng.next_gaussian();
    const double lhs = mixed_sigma({a * X + b * Y, R}, G);
    const double rhs = a * mixed_sigma({X, R}, G) + b * mixed_sigma({Y, R}, G);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs)));
  }
}

TEST_CASE("mixed_sigma restricts to sigma on the diagonal") {
  CounterRng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + int(rng.next_u64() % 4);
    const int m = 1 + int(rng.next_u64() % std::uint64_t(n));
    const MetricPencil G(random_metric(n, rng));
    const HermitianForm A = random_hermitian(n, rng);
    const std::vector<HermitianForm> args(std::size_t(m), A);
    const double want = sigma(A, G, m);
    CHECK(std::abs(mixed_sigma(args, G) - want) <= 1e-10 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("both polarization paths agree with the sign-cube extraction") {
  CounterRng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + int(rng.next_u64() % 3);
    const int m = 2 + int(rng.next_u64() % std::uint64_t(n - 1));
    const MetricPencil G(random_metric(n, rng));
    std::vector<HermitianForm> args;
    for (int j = 0; j < m; ++j) args.push_back(random_hermitian(n, rng));
    const double want = ghxtest::signcube_mixed_sigma(args, G);
    const double fast = mixed_sigma(args, G);
    const double slow = mixed_sigma_oracle(args, G);
    CHECK(std::abs(fast - want) <= 1e-8 * (1.0 + std::abs(want)));
    CHECK(std::abs(slow - want) <= 1e-8 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("restrict_line reproduces pointwise evaluations") {
  CounterRng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + int(rng.next_u64() % 3);
    const int m = 2 + int(rng.next_u64() % std::uint64_t(n - 1));
    const MetricPencil G(random_metric(n, rng));
    const MixedContext P(m, G);
    const HermitianForm a = random_hermitian(n, rng);
    const HermitianForm x = random_hermitian(n, rng);
    const PolyOnLine p = restrict_line(P, a, x);
    for (double s : {-1.3, 0.0, 0.7, 2.1}) {
      double val = 0.0, spow = 1.0;
      for (double c : p.coeffs) {
        val += c * spow;
        spow *= s;
      }
      const double want = sigma(s * a + x, G, m);
      CHECK(std::abs(val - want) <= 1e-8 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("poly_roots finds factored roots") {
  const PolyOnLine p{{6.0, 11.0, 6.0, 1.0}};  // (s+1)(s+2)(s+3)
  const auto roots = poly_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(std::abs(roots[0] - Complex(-3, 0)) <= 1e-9);
  CHECK(std::abs(roots[1] - Complex(-2, 0)) <= 1e-9);
  CHECK(std::abs(roots[2] - Complex(-1, 0)) <= 1e-9);
}

TEST_CASE("real_rooted rejects the zero polynomial") {
  CHECK_THROWS_AS(real_rooted(PolyOnLine{{0.0, 0.0}}), DegenerateInput);
}

TEST_CASE("sigma_m is hyperbolic along random lines") {
  CounterRng rng(18);
  for (int n : {2, 3, 4}) {
    const MetricPencil G(random_metric(n, rng));
    for (int m = 1; m <= n; ++m) {
      const MixedContext P(m, G);
      const auto rep = hyperbolic_at(P, G.form(), 200, 400 + std::uint64_t(10 * n + m));
      CHECK(rep.hyperbolic);
    }
  }
}

TEST_CASE("cone chain: PD members live in every Gamma_m") {
  CounterRng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + int(rng.next_u64() % 4);
    const MetricPencil G(random_metric(n, rng));
    const HermitianForm A = random_metric(n, rng, 0.1, 5.0);
    for (int m = 1; m <= n; ++m) CHECK(in_gamma_m(A, G, m).member);
  }
}

TEST_CASE("in_cone and in_gamma_m agree on random inputs") {
  CounterRng rng(20);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + int(rng.next_u64() % 3);
    const int m = 1 + int(rng.next_u64() % std::uint64_t(n));
    const MetricPencil G(random_metric(n, rng));
    const HermitianForm X = random_hermitian(n, rng);
    const auto gamma = in_gamma_m(X, G, m);
    const auto cone = in_cone(MixedContext(m, G), G.form(), X);
    const double min_margin = *std::min_element(gamma.margins.begin(), gamma.margins.end());
    if (std::abs(min_margin) < 1e-6) continue;  // borderline, both verdicts fragile
    CHECK(gamma.member == cone.member);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("Gamma_m is convex along sampled segments") {
  CounterRng rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + int(rng.next_u64() % 3);
    const int m = 2 + int(rng.next_u64() % std::uint64_t(n - 1));
    const MetricPencil G(random_metric(n, rng));
    const HermitianForm A = sample_gamma_m(G, m, rng);
    const HermitianForm B = sample_gamma_m(G, m, rng);
    const double t = rng.next_double();
    CHECK(in_gamma_m(t * A + (1.0 - t) * B, G, m).member);
  }
}

TEST_CASE("sigma vanishes at a bisection-located boundary point") {
  CounterRng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    const int m = 2;
    const MetricPencil G(random_metric(n, rng));
    const HermitianForm A = sample_gamma_m(G, m, rng);
    const HermitianForm D = random_hermitian(n, rng);

    double lo = 0.0, hi = 1.0;
    while (in_gamma_m(A - hi * D, G, m).member) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e6) break;
    }
    if (hi > 1e6) continue;  // direction never exits the cone
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (in_gamma_m(A - mid * D, G, m).member ? lo : hi) = mid;
    }
    const HermitianForm B = A - hi * D;
    double min_sigma = std::numeric_limits<double>::infinity();
    double scale = 0.0;
    for (int l = 1; l <= m; ++l) {
      const auto lam = pencil_eigenvalues(B, G);
      std::vector<double> mag(lam.size());
      for (std::size_t i = 0; i < lam.size(); ++i) mag[i] = std::abs(lam[i]);
      min_sigma = std::min(min_sigma, sigma(B, G, l));
      scale = std::max(scale, ghxtest::subset_e_k(mag, l));
    }
    CHECK(std::abs(min_sigma) <= 1e-6 * (scale + 1e-300));
  }
}

TEST_CASE("sigma^{1/m} has nonpositive second differences along cone segments") {
  CounterRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + int(rng.next_u64() % 3);
    const int m = 2 + int(rng.next_u64() % std::uint64_t(n - 1));
    const MetricPencil G(random_metric(n, rng));
    const HermitianForm A = sample_gamma_m(G, m, rng);
    const HermitianForm B = sample_gamma_m(G, m, rng);
    const double h = 1e-2;
    auto g = [&](double t) { return std::pow(sigma(A + t * B, G, m), 1.0 / m); };
    for (double t = h; t <= 2.0 - h; t += 0.25) {
      const double dd = g(t + h) - 2.0 * g(t) + g(t - h);
      CHECK(dd <= 1e-7);
    }
  }
}

TEST_CASE("linearity_dimension flags translation-invariant directions") {
  CounterRng rng(24);
  const MetricPencil G(random_metric(3, rng));
  CHECK(linearity_dimension(MixedContext(2, G), 71) == 0);
  CHECK(linearity_dimension(MixedContext(3, G), 72) == 0);
}

TEST_CASE("MixedContext validates its fixed slots") {
  const MetricPencil G = MetricPencil::standard(3);
  CHECK_THROWS_AS(MixedContext(4, G), ContractViolation);
  CHECK_THROWS_AS(MixedContext(2, G, {HermitianForm::identity(2)}), ContractViolation);
  CHECK_THROWS_AS(MixedContext(2, G).polar({HermitianForm::identity(3)}), ContractViolation);
}
