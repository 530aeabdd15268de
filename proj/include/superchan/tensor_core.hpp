// Copyright 2026 The superchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERCHAN_TENSOR_CORE_HPP
#define SUPERCHAN_TENSOR_CORE_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace superchan {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-9;
inline constexpr double kPsd = 1e-9;
inline constexpr double kTrace = 1e-9;
inline constexpr double kCptp = 1e-9;
inline constexpr double kAlgebra = 1e-12;
// eigenvalues below this are treated as zero inside entropies
inline constexpr double kEntropyClamp = 1e-12;
}  // namespace tol

//-----------------------------------------------------------------------
// Errors
//-----------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

//-----------------------------------------------------------------------
// Small helpers
//-----------------------------------------------------------------------

inline std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

inline double hermiticity_residual(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const CMatrix& m, double tolerance = tol::kHermitian) {
  return m.rows() == m.cols() &&
         (m.size() == 0 || hermiticity_residual(m) <= tolerance);
}

inline bool all_finite(const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

/// Matrix unit |i><j| in dimension d.
inline CMatrix matrix_unit(std::size_t d, std::size_t i, std::size_t j) {
  CMatrix m = CMatrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

inline CVector basis_vector(std::size_t d, std::size_t i) {
  CVector v = CVector::Zero(d);
  v(i) = 1.0;
  return v;
}

inline CMatrix projector(const CVector& v) { return v * v.adjoint(); }

//-----------------------------------------------------------------------
// Kronecker product and partial trace
//-----------------------------------------------------------------------

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline CMatrix kron(std::initializer_list<CMatrix> factors) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

namespace detail {

// Full row index for each (kept multi-index, traced multi-index) pair, with
// the kept and traced factors each enumerated in their original order.
struct FactorSplit {
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  std::vector<std::size_t> full;  // full[k * traced_dim + t]
};

inline FactorSplit split_factors(std::span<const std::size_t> dims,
                                 const std::vector<bool>& keep_mask) {
  FactorSplit s;
  for (std::size_t f = 0; f < dims.size(); ++f)
    (keep_mask[f] ? s.kept_dim : s.traced_dim) *= dims[f];
  s.full.assign(s.kept_dim * s.traced_dim, 0);
  const std::size_t total = product(dims);
  std::vector<std::size_t> digits(dims.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t k = 0, t = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) {
      if (keep_mask[f])
        k = k * dims[f] + digits[f];
      else
        t = t * dims[f] + digits[f];
    }
    s.full[k * s.traced_dim + t] = idx;
    for (std::size_t f = dims.size(); f-- > 0;) {
      if (++digits[f] < dims[f]) break;
      digits[f] = 0;
    }
  }
  return s;
}

inline std::vector<bool> keep_mask(std::span<const std::size_t> dims,
                                   std::span<const std::size_t> keep) {
  std::vector<bool> mask(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size())
      throw DimensionError("factor index " + std::to_string(k) +
                           " out of range for " + std::to_string(dims.size()) +
                           " factors");
    mask[k] = true;
  }
  return mask;
}

inline void check_factor_dims(const CMatrix& m,
                              std::span<const std::size_t> dims) {
  const auto total = static_cast<Eigen::Index>(product(dims));
  if (m.rows() != total || m.cols() != total)
    throw DimensionError("matrix of size " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) +
                         " does not match factor dimensions with product " +
                         std::to_string(total));
}

}  // namespace detail

/// Reduced operator on the factors listed in `keep` (0-based, any order;
/// kept factors stay in their original relative order).
inline CMatrix partial_trace(const CMatrix& m, std::span<const std::size_t> dims,
                             std::span<const std::size_t> keep) {
  detail::check_factor_dims(m, dims);
  const auto s = detail::split_factors(dims, detail::keep_mask(dims, keep));
  CMatrix out = CMatrix::Zero(s.kept_dim, s.kept_dim);
  for (std::size_t a = 0; a < s.kept_dim; ++a)
    for (std::size_t b = 0; b < s.kept_dim; ++b) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < s.traced_dim; ++t)
        acc += m(s.full[a * s.traced_dim + t], s.full[b * s.traced_dim + t]);
      out(a, b) = acc;
    }
  return out;
}

inline CMatrix partial_trace(const CMatrix& m, std::vector<std::size_t> dims,
                             std::vector<std::size_t> keep) {
  return partial_trace(m, std::span<const std::size_t>(dims),
                       std::span<const std::size_t>(keep));
}

/// Inverse-shaped companion of partial_trace: places `reduced` on the kept
/// factors and I/d on every other factor.
inline CMatrix embed_with_maximally_mixed(const CMatrix& reduced,
                                          std::span<const std::size_t> dims,
                                          std::span<const std::size_t> keep) {
  const auto s = detail::split_factors(dims, detail::keep_mask(dims, keep));
  if (reduced.rows() != static_cast<Eigen::Index>(s.kept_dim) ||
      reduced.cols() != static_cast<Eigen::Index>(s.kept_dim))
    throw DimensionError("reduced operator does not match kept factors");
  const std::size_t total = product(dims);
  CMatrix out = CMatrix::Zero(total, total);
  const double w = 1.0 / static_cast<double>(s.traced_dim);
  for (std::size_t a = 0; a < s.kept_dim; ++a)
    for (std::size_t b = 0; b < s.kept_dim; ++b)
      for (std::size_t t = 0; t < s.traced_dim; ++t)
        out(s.full[a * s.traced_dim + t], s.full[b * s.traced_dim + t]) =
            w * reduced(a, b);
  return out;
}

//-----------------------------------------------------------------------
// Spectra and norms
//-----------------------------------------------------------------------

struct HermitianEigs {
  RVector values;   // descending
  CMatrix vectors;  // column k pairs with values(k)
};

/// Spectral decomposition of a Hermitian matrix, eigenvalues descending.
/// Throws ValidationError when `m` is not Hermitian within tol::kHermitian.
inline HermitianEigs hermitian_eigs(const CMatrix& m) {
  if (!is_hermitian(m))
    throw ValidationError("hermitian_eigs: matrix is not Hermitian (residual " +
                          std::to_string(hermiticity_residual(m)) + ")");
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  const auto n = sym.rows();
  HermitianEigs out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

/// Largest singular value.
inline double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

inline double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("frobenius_distance: shape mismatch");
  return (a - b).norm();
}

/// Shannon entropy (bits) of a spectrum, with 0 log 0 := 0.
inline double spectrum_entropy(const RVector& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    const double p = eigenvalues(k);
    if (p > tol::kEntropyClamp) s -= p * std::log2(p);
  }
  return s;
}

/// Entropy of a Hermitian operator without state validation; the hot path
/// inside optimizers.
inline double entropy_bits(const CMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (rho + rho.adjoint()),
                                                Eigen::EigenvaluesOnly);
  return spectrum_entropy(solver.eigenvalues());
}

//-----------------------------------------------------------------------
// DensityMatrix
//-----------------------------------------------------------------------

/// A validated quantum state: Hermitian, positive semidefinite, unit trace.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols())
      throw DimensionError("density matrix must be square and non-empty");
    if (!all_finite(m_)) throw ValidationError("density matrix has non-finite entries");
    if (!is_hermitian(m_, tol::kHermitian))
      throw ValidationError("density matrix is not Hermitian (residual " +
                            std::to_string(hermiticity_residual(m_)) + ")");
    const double tr_err = std::abs(m_.trace() - Complex(1.0));
    if (tr_err > tol::kTrace)
      throw ValidationError("density matrix trace differs from 1 by " +
                            std::to_string(tr_err));
    const double min_eig = hermitian_eigs(m_).values.minCoeff();
    if (min_eig < -tol::kPsd)
      throw ValidationError("density matrix is not positive semidefinite "
                            "(min eigenvalue " + std::to_string(min_eig) + ")");
  }

  static DensityMatrix pure(const CVector& psi) {
    const double n = psi.norm();
    if (n == 0.0) throw ValidationError("pure state from zero vector");
    const CVector u = psi / n;
    return DensityMatrix(u * u.adjoint());
  }
  static DensityMatrix basis(std::size_t d, std::size_t i) {
    return DensityMatrix(matrix_unit(d, i, i));
  }
  static DensityMatrix maximally_mixed(std::size_t d) {
    return DensityMatrix(CMatrix::Identity(d, d) / static_cast<double>(d));
  }

  const CMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }

 private:
  CMatrix m_;
};

inline DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

/// Von Neumann entropy in bits.
inline double vn_entropy(const DensityMatrix& rho) {
  return spectrum_entropy(hermitian_eigs(rho.matrix()).values);
}

//-----------------------------------------------------------------------
// Fixed single-qubit operators
//-----------------------------------------------------------------------

namespace qubit {

inline CMatrix pauli(int k) {
  CMatrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw DimensionError("pauli index must be 0..3");
  }
  return m;
}
inline CMatrix I() { return pauli(0); }
inline CMatrix X() { return pauli(1); }
inline CMatrix Y() { return pauli(2); }
inline CMatrix Z() { return pauli(3); }

inline CVector ket0() { return basis_vector(2, 0); }
inline CVector ket1() { return basis_vector(2, 1); }
inline CVector plus() { return (ket0() + ket1()) / std::sqrt(2.0); }
inline CVector minus() { return (ket0() - ket1()) / std::sqrt(2.0); }

}  // namespace qubit

}  // namespace superchan

#endif  // SUPERCHAN_TENSOR_CORE_HPP
