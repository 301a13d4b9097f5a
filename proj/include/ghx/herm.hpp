#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "ghx/errors.hpp"

namespace ghx {

using Complex = std::complex<double>;

/// Default relative tolerance used throughout unless a caller overrides it.
inline constexpr double kDefaultTol = 1e-9;

/// Largest supported matrix dimension.
inline constexpr int kMaxDim = 16;

/// Hermitian n x n matrix. Only the upper triangle is stored and the diagonal
/// is kept real, so the Hermitian invariant cannot be broken after
/// construction.
class HermitianForm {
 public:
  HermitianForm() : n_(0) {}  // empty placeholder, for report structs
  explicit HermitianForm(int n);

  static HermitianForm identity(int n);
  static HermitianForm diagonal(const std::vector<double>& d);
  static HermitianForm basis_diag(int n, int j);        // E_jj
  static HermitianForm basis_sym(int n, int j, int k);  // E_jk + E_kj
  static HermitianForm basis_anti(int n, int j, int k); // i (E_jk - E_kj)

  /// Builds from a dense matrix. Entries must satisfy
  /// M(k,j) == conj(M(j,k)) within `tol` per entry (0 means exactly).
  static HermitianForm from_matrix(const Eigen::MatrixXcd& M, double tol = 0.0);
  /// (M + M^*) / 2, for callers holding an only-approximately-Hermitian matrix.
  static HermitianForm hermitized(const Eigen::MatrixXcd& M);

  int dim() const { return n_; }
  Complex at(int j, int k) const;
  double diag(int j) const;
  /// Sets entry (j,k) with j != k; (k,j) is the conjugate by construction.
  void set(int j, int k, Complex v);
  void set_diag(int j, double v);

  Eigen::MatrixXcd matrix() const;
  double trace() const;
  double frobenius_norm() const;

  HermitianForm& operator+=(const HermitianForm& o);
  HermitianForm& operator-=(const HermitianForm& o);
  HermitianForm& operator*=(double c);
  friend HermitianForm operator+(HermitianForm a, const HermitianForm& b) { return a += b; }
  friend HermitianForm operator-(HermitianForm a, const HermitianForm& b) { return a -= b; }
  friend HermitianForm operator*(double c, HermitianForm a) { return a *= c; }
  friend HermitianForm operator*(HermitianForm a, double c) { return a *= c; }

 private:
  int n_;
  std::vector<Complex> upper_;  // packed row-major, j <= k
  std::size_t index(int j, int k) const { return std::size_t(j) * n_ - std::size_t(j) * (j + 1) / 2 + k; }
};

/// Positive definite reference metric with its Cholesky-type factor
/// G = L L^* cached at construction. Construction fails if G is not positive
/// definite, if the eigenvalue ratio exceeds 1e10, or if the factorization
/// does not reconstruct G to 1e-12 relative.
class MetricPencil {
 public:
  explicit MetricPencil(const HermitianForm& G);
  static MetricPencil standard(int n);

  int dim() const { return G_.dim(); }
  const HermitianForm& form() const { return G_; }
  const Eigen::MatrixXcd& factor() const { return L_; }
  double condition() const { return cond_; }

  /// L^{-1} A L^{-*}: the Hermitian matrix whose ordinary eigenvalues are the
  /// pencil eigenvalues of (A, G).
  Eigen::MatrixXcd reduce(const HermitianForm& A) const;
  Eigen::MatrixXcd reduce(const Eigen::MatrixXcd& A) const;

 private:
  HermitianForm G_;
  Eigen::MatrixXcd L_;
  double cond_;
};

/// Ordered real basis of Herm(n): diagonal units E_jj (j ascending), then for
/// each pair j < k in lexicographic order the symmetric unit (E_jk + E_kj)
/// followed by the antisymmetric unit i(E_jk - E_kj). Orthogonal under
/// inner(); off-diagonal units have squared norm 2.
class RealBasis {
 public:
  explicit RealBasis(int n);
  int dim() const { return n_; }
  int size() const { return n_ * n_; }
  const HermitianForm& element(int i) const { return elements_[i]; }
  const std::vector<HermitianForm>& elements() const { return elements_; }
  double norm2(int i) const { return norm2_[i]; }

  /// Exact coefficients of A in this basis.
  Eigen::VectorXd coordinates(const HermitianForm& A) const;
  HermitianForm reconstruct(const Eigen::VectorXd& c) const;

 private:
  int n_;
  std::vector<HermitianForm> elements_;
  std::vector<double> norm2_;
};

/// Roots of det(A - t G) ascending; equals the eigenvalues of L^{-1} A L^{-*}.
std::vector<double> pencil_eigenvalues(const HermitianForm& A, const MetricPencil& G);

/// Eigenvalues of the bare Hermitian matrix, ascending.
std::vector<double> eigenvalues(const HermitianForm& A);

/// Real Frobenius pairing Re tr(A B); positive definite on Herm(n).
double inner(const HermitianForm& A, const HermitianForm& B);

/// Least-squares constant c with A ~ c B, accepted when
/// ||A - cB||_F <= tol * (||A||_F + ||B||_F). Throws DegenerateInput when B
/// is numerically zero.
std::optional<double> proportionality(const HermitianForm& A, const HermitianForm& B,
                                      double tol = kDefaultTol);

}  // namespace ghx
