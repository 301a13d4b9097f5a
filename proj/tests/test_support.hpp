#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ghx/herm.hpp"
#include "ghx/rng.hpp"
#include "ghx/sampling.hpp"
#include "ghx/sympoly.hpp"

namespace ghxtest {

/// Literal subset-sum e_k, independent of the library's Vieta recurrence.
inline double subset_e_k(const std::vector<double>& lam, int k) {
  const int n = int(lam.size());
  if (k == 0) return 1.0;
  double total = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    double prod = 1.0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) prod *= lam[std::size_t(i)];
    total += prod;
  }
  return total;
}

/// Pencil eigenvalues through Eigen's generalized solver, bypassing the
/// library's Cholesky reduction.
inline std::vector<double> pencil_eigs_oracle(const ghx::HermitianForm& A,
                                              const ghx::MetricPencil& G) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(A.matrix(), G.form().matrix(),
                                                                Eigen::EigenvaluesOnly);
  std::vector<double> out(std::size_t(A.dim()));
  for (int i = 0; i < A.dim(); ++i) out[std::size_t(i)] = es.eigenvalues()(i);
  return out;
}

inline double sigma_oracle(const ghx::HermitianForm& A, const ghx::MetricPencil& G, int k) {
  return subset_e_k(pencil_eigs_oracle(A, G), k);
}

/// Multilinear coefficient of t_1...t_m in sigma_m(sum t_i B_i) extracted on
/// the {-1, +1}^m sign cube: a third polarization path, distinct from both
/// library routes (subset inclusion-exclusion and {0,1}-grid differencing).
inline double signcube_mixed_sigma(const std::vector<ghx::HermitianForm>& args,
                                   const ghx::MetricPencil& G) {
  const int m = int(args.size());
  double fact = 1.0;
  for (int j = 2; j <= m; ++j) fact *= j;
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    ghx::HermitianForm sum(args[0].dim());
    int negs = 0;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        sum -= args[std::size_t(i)];
        ++negs;
      } else {
        sum += args[std::size_t(i)];
      }
    }
    const double sign = (negs % 2 == 0) ? 1.0 : -1.0;
    total += sign * ghx::sigma(sum, G, m);
  }
  return total / (std::pow(2.0, m) * fact);
}

/// Random strict Gamma_m member through the library sampler, one per stream.
inline ghx::HermitianForm gamma_sample(const ghx::MetricPencil& G, int m, std::uint64_t seed,
                                       std::uint64_t index) {
  ghx::CounterRng rng = ghx::CounterRng::stream(seed, index);
  return ghx::sample_gamma_m(G, m, rng);
}

}  // namespace ghxtest
