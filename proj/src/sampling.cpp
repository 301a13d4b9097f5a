#include "ghx/sampling.hpp"

#include <cmath>

#include "ghx/errors.hpp"
#include "ghx/sympoly.hpp"

namespace ghx {

HermitianForm random_hermitian(int n, CounterRng& rng) {
  Eigen::MatrixXcd M(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) M(j, k) = Complex(rng.next_gaussian(), rng.next_gaussian());
  return HermitianForm::hermitized(0.5 * (M + M.adjoint()));
}

Eigen::MatrixXcd haar_unitary(int n, CounterRng& rng) {
  Eigen::MatrixXcd M(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) M(j, k) = Complex(rng.next_gaussian(), rng.next_gaussian());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(M);
  Eigen::MatrixXcd Q = qr.householderQ();
  const Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const Complex d = R(k, k);
    const double a = std::abs(d);
    Q.col(k) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return Q;
}

HermitianForm random_metric(int n, CounterRng& rng, double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) throw PreconditionError("random_metric: need 0 < lo <= hi");
  const Eigen::MatrixXcd U = haar_unitary(n, rng);
  Eigen::VectorXd w(n);
  for (int j = 0; j < n; ++j) w(j) = lo + (hi - lo) * rng.next_double();
  const Eigen::MatrixXcd G = U * w.asDiagonal() * U.adjoint();
  return HermitianForm::hermitized(G);
}

HermitianForm sample_gamma_m(const MetricPencil& pencil, int m, CounterRng& rng) {
  const int n = pencil.dim();
  if (m < 1 || m > n) throw PreconditionError("sample_gamma_m: need 1 <= m <= n");
  std::vector<double> w(n);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (int j = 0; j < n; ++j) w[j] = 0.5 + rng.next_gaussian();
    const std::vector<double> e = elementary_symmetric(w);
    bool ok = true;
    for (int l = 1; l <= m && ok; ++l) ok = e[std::size_t(l)] > 0.0;
    if (!ok) continue;
    const Eigen::MatrixXcd U = haar_unitary(n, rng);
    Eigen::VectorXd wv = Eigen::Map<const Eigen::VectorXd>(w.data(), n);
    const Eigen::MatrixXcd& L = pencil.factor();
    const Eigen::MatrixXcd A = L * (U * wv.asDiagonal() * U.adjoint()) * L.adjoint();
    return HermitianForm::hermitized(A);
  }
  throw DegenerateInput("sample_gamma_m: rejection sampler failed to accept");
}

}  // namespace ghx
