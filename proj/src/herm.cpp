#include "ghx/herm.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace ghx {

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) {
    std::ostringstream os;
    os << "dimension " << n << " outside supported range [1, " << kMaxDim << "]";
    throw ContractViolation(os.str());
  }
}

void check_same_dim(int a, int b, const char* op) {
  if (a != b) {
    std::ostringstream os;
    os << op << ": dimension mismatch (" << a << " vs " << b << ")";
    throw ContractViolation(os.str());
  }
}

}  // namespace

HermitianForm::HermitianForm(int n) : n_(n) {
  check_dim(n);
  upper_.assign(std::size_t(n) * (n + 1) / 2, Complex(0.0, 0.0));
}

HermitianForm HermitianForm::identity(int n) {
  HermitianForm A(n);
  for (int j = 0; j < n; ++j) A.set_diag(j, 1.0);
  return A;
}

HermitianForm HermitianForm::diagonal(const std::vector<double>& d) {
  HermitianForm A(int(d.size()));
  for (int j = 0; j < A.dim(); ++j) A.set_diag(j, d[j]);
  return A;
}

HermitianForm HermitianForm::basis_diag(int n, int j) {
  HermitianForm A(n);
  A.set_diag(j, 1.0);
  return A;
}

HermitianForm HermitianForm::basis_sym(int n, int j, int k) {
  HermitianForm A(n);
  A.set(j, k, Complex(1.0, 0.0));
  return A;
}

HermitianForm HermitianForm::basis_anti(int n, int j, int k) {
  HermitianForm A(n);
  A.set(std::min(j, k), std::max(j, k), Complex(0.0, 1.0));
  return A;
}

HermitianForm HermitianForm::from_matrix(const Eigen::MatrixXcd& M, double tol) {
  if (M.rows() != M.cols()) throw ContractViolation("from_matrix: matrix is not square");
  const int n = int(M.rows());
  HermitianForm A(n);
  for (int j = 0; j < n; ++j) {
    if (std::abs(M(j, j).imag()) > tol)
      throw ContractViolation("from_matrix: diagonal entry has nonzero imaginary part");
    A.set_diag(j, M(j, j).real());
    for (int k = j + 1; k < n; ++k) {
      if (std::abs(M(k, j) - std::conj(M(j, k))) > tol)
        throw ContractViolation("from_matrix: matrix is not Hermitian");
      A.set(j, k, 0.5 * (M(j, k) + std::conj(M(k, j))));
    }
  }
  return A;
}

HermitianForm HermitianForm::hermitized(const Eigen::MatrixXcd& M) {
  if (M.rows() != M.cols()) throw ContractViolation("hermitized: matrix is not square");
  Eigen::MatrixXcd H = 0.5 * (M + M.adjoint());
  return from_matrix(H, 1e-12 * (1.0 + H.norm()));
}

Complex HermitianForm::at(int j, int k) const {
  if (j <= k) return upper_[index(j, k)];
  return std::conj(upper_[index(k, j)]);
}

double HermitianForm::diag(int j) const { return upper_[index(j, j)].real(); }

void HermitianForm::set(int j, int k, Complex v) {
  if (j == k) {
    if (v.imag() != 0.0) throw ContractViolation("set: diagonal entries must be real");
    set_diag(j, v.real());
    return;
  }
  if (j < k)
    upper_[index(j, k)] = v;
  else
    upper_[index(k, j)] = std::conj(v);
}

void HermitianForm::set_diag(int j, double v) { upper_[index(j, j)] = Complex(v, 0.0); }

Eigen::MatrixXcd HermitianForm::matrix() const {
  Eigen::MatrixXcd M(n_, n_);
  for (int j = 0; j < n_; ++j)
    for (int k = j; k < n_; ++k) {
      M(j, k) = upper_[index(j, k)];
      if (k > j) M(k, j) = std::conj(upper_[index(j, k)]);
    }
  return M;
}

double HermitianForm::trace() const {
  double t = 0.0;
  for (int j = 0; j < n_; ++j) t += diag(j);
  return t;
}

double HermitianForm::frobenius_norm() const {
  double s = 0.0;
  for (int j = 0; j < n_; ++j) {
    s += diag(j) * diag(j);
    for (int k = j + 1; k < n_; ++k) s += 2.0 * std::norm(upper_[index(j, k)]);
  }
  return std::sqrt(s);
}

HermitianForm& HermitianForm::operator+=(const HermitianForm& o) {
  check_same_dim(n_, o.n_, "operator+");
  for (std::size_t i = 0; i < upper_.size(); ++i) upper_[i] += o.upper_[i];
  return *this;
}

HermitianForm& HermitianForm::operator-=(const HermitianForm& o) {
  check_same_dim(n_, o.n_, "operator-");
  for (std::size_t i = 0; i < upper_.size(); ++i) upper_[i] -= o.upper_[i];
  return *this;
}

HermitianForm& HermitianForm::operator*=(double c) {
  for (auto& v : upper_) v *= c;
  return *this;
}

MetricPencil::MetricPencil(const HermitianForm& G) : G_(G) {
  const Eigen::MatrixXcd M = G.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo <= 0.0)
    throw PreconditionError("MetricPencil: reference form is not positive definite");
  cond_ = hi / lo;
  if (cond_ > 1e10)
    throw PreconditionError("MetricPencil: eigenvalue ratio exceeds 1e10; refusing ill-conditioned reference");
  Eigen::LLT<Eigen::MatrixXcd> llt(M);
  if (llt.info() != Eigen::Success)
    throw PreconditionError("MetricPencil: Cholesky factorization failed");
  L_ = llt.matrixL();
  const double recon = (L_ * L_.adjoint() - M).norm();
  if (recon > 1e-12 * M.norm())
    throw PreconditionError("MetricPencil: factor does not reconstruct the reference form");
}

MetricPencil MetricPencil::standard(int n) { return MetricPencil(HermitianForm::identity(n)); }

Eigen::MatrixXcd MetricPencil::reduce(const HermitianForm& A) const { return reduce(A.matrix()); }

Eigen::MatrixXcd MetricPencil::reduce(const Eigen::MatrixXcd& A) const {
  check_same_dim(int(A.rows()), dim(), "reduce");
  const auto Lt = L_.triangularView<Eigen::Lower>();
  Eigen::MatrixXcd T = Lt.solve(A);                    // L^{-1} A
  Eigen::MatrixXcd R = Lt.solve(T.adjoint()).adjoint();  // (L^{-1} T^*)^* = T L^{-*}
  return 0.5 * (R + R.adjoint());                      // resymmetrize roundoff
}

RealBasis::RealBasis(int n) : n_(n) {
  check_dim(n);
  elements_.reserve(std::size_t(n) * n);
  for (int j = 0; j < n; ++j) {
    elements_.push_back(HermitianForm::basis_diag(n, j));
    norm2_.push_back(1.0);
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      elements_.push_back(HermitianForm::basis_sym(n, j, k));
      norm2_.push_back(2.0);
      elements_.push_back(HermitianForm::basis_anti(n, j, k));
      norm2_.push_back(2.0);
    }
}

Eigen::VectorXd RealBasis::coordinates(const HermitianForm& A) const {
  check_same_dim(A.dim(), n_, "coordinates");
  Eigen::VectorXd c(size());
  int i = 0;
  for (int j = 0; j < n_; ++j) c[i++] = A.diag(j);
  for (int j = 0; j < n_; ++j)
    for (int k = j + 1; k < n_; ++k) {
      c[i++] = A.at(j, k).real();
      c[i++] = A.at(j, k).imag();
    }
  return c;
}

HermitianForm RealBasis::reconstruct(const Eigen::VectorXd& c) const {
  if (c.size() != size()) throw ContractViolation("reconstruct: coordinate size mismatch");
  HermitianForm A(n_);
  int i = 0;
  for (int j = 0; j < n_; ++j) A.set_diag(j, c[i++]);
  for (int j = 0; j < n_; ++j)
    for (int k = j + 1; k < n_; ++k) {
      const double re = c[i++];
      const double im = c[i++];
      A.set(j, k, Complex(re, im));
    }
  return A;
}

std::vector<double> pencil_eigenvalues(const HermitianForm& A, const MetricPencil& G) {
  check_same_dim(A.dim(), G.dim(), "pencil_eigenvalues");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G.reduce(A), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> eigenvalues(const HermitianForm& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A.matrix(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double inner(const HermitianForm& A, const HermitianForm& B) {
  check_same_dim(A.dim(), B.dim(), "inner");
  double s = 0.0;
  const int n = A.dim();
  for (int j = 0; j < n; ++j) {
    s += A.diag(j) * B.diag(j);
    for (int k = j + 1; k < n; ++k) {
      const Complex a = A.at(j, k);
      const Complex b = B.at(j, k);
      s += 2.0 * (a.real() * b.real() + a.imag() * b.imag());
    }
  }
  return s;
}

std::optional<double> proportionality(const HermitianForm& A, const HermitianForm& B, double tol) {
  check_same_dim(A.dim(), B.dim(), "proportionality");
  const double nb = B.frobenius_norm();
  if (nb <= 1e-14 * B.dim())
    throw DegenerateInput("proportionality: reference matrix is numerically zero");
  const double c = inner(A, B) / inner(B, B);
  const double resid = (A - c * B).frobenius_norm();
  if (resid <= tol * (A.frobenius_norm() + nb)) return c;
  return std::nullopt;
}

}  // namespace ghx
