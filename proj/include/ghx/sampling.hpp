#pragma once

#include <Eigen/Dense>

#include "ghx/herm.hpp"
#include "ghx/rng.hpp"

namespace ghx {

/// GUE-style Hermitian matrix: complex Gaussian entries, symmetrized.
HermitianForm random_hermitian(int n, CounterRng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the R
/// diagonal phases divided out.
Eigen::MatrixXcd haar_unitary(int n, CounterRng& rng);

/// Positive definite Hermitian matrix with condition number bounded by the
/// eigenvalue window [lo, hi]: U diag(w) U* with w uniform in the window.
HermitianForm random_metric(int n, CounterRng& rng, double lo = 0.25, double hi = 4.0);

/// Rejection sampler for the Gamma_m cone of the pencil (., G). Proposes
/// pencil eigenvalues from N(0.5, 1), accepts when every elementary symmetric
/// polynomial e_1..e_m is positive, then conjugates by a Haar unitary and
/// transports back through the metric factor: A = L (U diag(w) U*) L*.
HermitianForm sample_gamma_m(const MetricPencil& pencil, int m, CounterRng& rng);

}  // namespace ghx
