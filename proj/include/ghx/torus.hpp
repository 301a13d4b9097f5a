#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghx/herm.hpp"
#include "ghx/rng.hpp"

namespace ghx {

/// Deterministic pairwise tree sum; independent of thread count by
/// construction (always evaluated in the same fixed order).
double tree_sum(const double* data, std::size_t count);

/// Flat complex torus C^n / (Z^n + i Z^n) sampled on an N^(2n) grid, axes
/// ordered (x_1..x_n, y_1..y_n) with the last axis contiguous. Owns the
/// Fourier transforms, normalized so that
///   values(x) = sum_k hat(k) exp(2 pi i k . x).
class TorusContext {
 public:
  TorusContext(int n, int N);

  int n() const { return n_; }
  int grid() const { return N_; }
  std::size_t points() const { return total_; }

  std::vector<Complex> forward(const std::vector<double>& values) const;
  std::vector<Complex> backward(const std::vector<Complex>& hat) const;
  /// Backward transform with the imaginary residue checked against
  /// 1e-10 * scale; throws ContractViolation when the spectrum was not
  /// Hermitian-symmetric.
  std::vector<double> backward_real(const std::vector<Complex>& hat) const;

  /// Signed integer frequency of `flat` along `axis` (0..2n-1).
  int freq(std::size_t flat, int axis) const {
    const int idx = int((flat / strides_[std::size_t(axis)]) % std::size_t(N_));
    return 2 * idx < N_ ? idx : idx - N_;
  }
  /// Flat index of the mode with the given signed frequencies (size 2n).
  std::size_t mode_index(const std::vector<int>& c) const;

 private:
  int n_;
  int N_;
  std::size_t total_;
  std::vector<std::size_t> strides_;
};

/// Real scalar potential on the grid. The mean is recorded at construction;
/// the frequency-domain representation is cached on first use.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double mean() const { return mean_; }
  double max_abs() const { return max_abs_; }
  /// Cached spectrum; not safe for concurrent first calls.
  const std::vector<Complex>& spectrum(const TorusContext& ctx) const;

 private:
  std::vector<double> values_;
  double mean_ = 0.0;
  double max_abs_ = 0.0;
  mutable std::vector<Complex> spectrum_;
};

/// Band-limited random potential: `modes` random frequencies with every
/// component strictly below N/4 in magnitude, Hermitian-symmetric spectrum,
/// zero mean.
ScalarField random_band_limited(const TorusContext& ctx, CounterRng& rng, int modes = 8,
                                double amplitude = 1.0);

/// A Hermitian matrix per grid point, stored as interleaved RealBasis
/// coordinates (n^2 reals per point, diagonal entries first, then
/// Re/Im of each upper pair in lexicographic order).
class HermitianGrid {
 public:
  HermitianGrid(int n, std::size_t points);

  int dim() const { return n_; }
  int comps() const { return n_ * n_; }
  std::size_t points() const { return points_; }
  double* point(std::size_t p) { return coords_.data() + p * std::size_t(comps()); }
  const double* point(std::size_t p) const { return coords_.data() + p * std::size_t(comps()); }

  HermitianForm at(std::size_t p) const;
  void add_constant(const HermitianForm& C);
  void add(const HermitianGrid& other);
  double max_frobenius() const;

  static int coord_of_diag(int n, int j);
  static int coord_of_pair(int n, int j, int k);  // index of the Re slot; Im follows

 private:
  int n_;
  std::size_t points_;
  std::vector<double> coords_;
};

/// dd^c of the potential: entry (j,k) is d^2 psi / dz_j dz_bar_k, computed
/// spectrally. Mode (k, l) contributes the symbol
/// -pi^2 (l_j + i k_j)(l_k - i k_k). Spectral mass at or above N/4 on any
/// axis raises AliasingError.
HermitianGrid ddc(const ScalarField& psi, const TorusContext& ctx);

/// Constant (1,1)-class plus an exact part: C + dd^c(psi).
struct FormField {
  HermitianForm constant;
  std::optional<ScalarField> potential;

  bool is_constant() const { return !potential.has_value(); }
  HermitianGrid materialize(const TorusContext& ctx) const;
};

/// Grid mean of the pointwise polarized sigma_m over the m fields (the
/// normalized stand-in for int alpha_1 ^ ... ^ alpha_m ^ omega^{n-m}).
/// All-constant input reproduces mixed_sigma exactly.
double integral_pairing(const std::vector<FormField>& fields, const MetricPencil& G,
                        const TorusContext& ctx);

struct LaplacianSolution {
  ScalarField phi;
  double residual = 0.0;  // relative sup-norm defect of inner(H, ddc(phi)) = f
};

/// Solves inner(H, ddc(phi)) = f for a positive definite H and zero-mean f.
/// Mode (k, l) != 0 is divided by the symbol -pi^2 v* H v with
/// v_j = l_j + i k_j, which is strictly negative; the zero mode is pinned
/// to 0. The residual is recomputed through the independent ddc path.
LaplacianSolution laplacian_solve(const HermitianForm& H, const ScalarField& f,
                                  const TorusContext& ctx);

struct TorusTheoremAReport {
  HermitianForm representer;
  double representer_min_eig = 0.0;
  HermitianForm beta0;  // class projected to the primitive hyperplane
  ScalarField phi;
  double solver_residual = 0.0;
  double primitivity_residual = 0.0;  // relative, pointwise sup
  double pointwise_max = 0.0;         // max_x D(beta_phi(x), beta_phi(x), Omega)
  double pointwise_scale = 0.0;       // max_x |...|
  bool pointwise_ok = false;
  double integrated = 0.0;
  double constant_model = 0.0;  // Q(beta0, beta0) from the constant calculus
  bool match_ok = false;
};

/// End-to-end torus verification of the Hodge-index argument: project the
/// class, primitivize the representative by solving the Laplacian equation,
/// check pointwise nonpositivity and the integrated value against the
/// constant model.
TorusTheoremAReport verify_theorem_a_torus(const std::vector<HermitianForm>& alphas,
                                           const MetricPencil& G,
                                           const HermitianForm& beta_class,
                                           const ScalarField& psi, const TorusContext& ctx,
                                           double tol = kDefaultTol);

struct HessianCheckReport {
  std::vector<double> c;           // c_k = sigma_m(alpha_k)
  std::vector<double> c_integral;  // same through integral_pairing
  double integrated = 0.0;         // mixed pairing of all m classes
  double rhs = 0.0;                // prod c_k^{1/m}
  bool inequality_ok = false;
  bool equality = false;
  std::vector<std::optional<double>> pairwise;  // proportionality constants, pairs i<j
  std::vector<double> ratios;                   // (c_i / c_j)^{1/m}, pairs i<j
};

/// Constant representatives solve the Hessian equation exactly; checks the
/// normalization c_k and re-derives the global concavity inequality from the
/// pointwise one.
HessianCheckReport hessian_constant_check(const std::vector<HermitianForm>& alphas,
                                          const MetricPencil& G, const TorusContext& ctx,
                                          double tol = kDefaultTol);

/// Writes a flat little-endian binary snapshot (header: magic, version, n, N,
/// component count, point count, axis-order string) plus a JSON sidecar at
/// path + ".json".
void export_field(const ScalarField& field, const TorusContext& ctx, const std::string& path);
void export_field(const HermitianGrid& grid, const TorusContext& ctx, const std::string& path);

}  // namespace ghx
