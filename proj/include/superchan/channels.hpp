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

#ifndef SUPERCHAN_CHANNELS_HPP
#define SUPERCHAN_CHANNELS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "superchan/tensor_core.hpp"

namespace superchan {

/// Raised when a Kraus list or Choi operator fails complete positivity or
/// trace preservation. `residual()` carries the offending norm.
class CPTPError : public ValidationError {
 public:
  CPTPError(const std::string& what, double residual)
      : ValidationError(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

//=========================================================================
// Channel
//=========================================================================

// A CPTP map N(rho) = sum_i K_i rho K_i^dagger held as a validated Kraus list.
// Every Kraus operator is dim_out x dim_in and sum_i K_i^dagger K_i = I
// within tol::kCptp.
class Channel {
 public:
  static Channel from_kraus(std::vector<CMatrix> kraus) {
    if (kraus.empty()) throw ValidationError("Kraus list is empty");
    const auto rows = kraus.front().rows();
    const auto cols = kraus.front().cols();
    if (rows == 0 || cols == 0) throw DimensionError("empty Kraus operator");
    CMatrix completeness = CMatrix::Zero(cols, cols);
    for (const auto& k : kraus) {
      if (k.rows() != rows || k.cols() != cols)
        throw DimensionError("Kraus operators have inconsistent shapes");
      if (!all_finite(k)) throw ValidationError("Kraus operator has non-finite entries");
      completeness += k.adjoint() * k;
    }
    const double residual =
        operator_norm(completeness - CMatrix::Identity(cols, cols));
    if (residual > tol::kCptp)
      throw CPTPError("Kraus operators violate sum K^dagger K = I", residual);
    return Channel(std::move(kraus), static_cast<std::size_t>(cols),
                   static_cast<std::size_t>(rows));
  }

  const std::vector<CMatrix>& kraus() const noexcept { return kraus_; }
  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }
  std::size_t kraus_rank() const noexcept { return kraus_.size(); }

  /// Linear action on an arbitrary operator (not necessarily a state).
  CMatrix operator()(const CMatrix& x) const {
    if (x.rows() != static_cast<Eigen::Index>(dim_in_) ||
        x.cols() != static_cast<Eigen::Index>(dim_in_))
      throw DimensionError("channel input has dimension " +
                           std::to_string(x.rows()) + ", expected " +
                           std::to_string(dim_in_));
    CMatrix out = CMatrix::Zero(dim_out_, dim_out_);
    for (const auto& k : kraus_) out.noalias() += k * x * k.adjoint();
    return out;
  }

 private:
  Channel(std::vector<CMatrix> kraus, std::size_t din, std::size_t dout)
      : kraus_(std::move(kraus)), dim_in_(din), dim_out_(dout) {}

  std::vector<CMatrix> kraus_;
  std::size_t dim_in_;
  std::size_t dim_out_;
};

inline Channel channel_from_kraus(std::vector<CMatrix> kraus) {
  return Channel::from_kraus(std::move(kraus));
}

inline DensityMatrix apply(const Channel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim_in())
    throw DimensionError("state dimension " + std::to_string(rho.dim()) +
                         " does not match channel input " +
                         std::to_string(ch.dim_in()));
  return DensityMatrix(ch(rho.matrix()));
}

//=========================================================================
// Choi representation
//=========================================================================

// C = sum_ij |i><j| (x) N(|i><j|), input factor first.
class ChoiMatrix {
 public:
  ChoiMatrix(CMatrix m, std::size_t dim_in, std::size_t dim_out)
      : m_(std::move(m)), dim_in_(dim_in), dim_out_(dim_out) {
    const auto n = static_cast<Eigen::Index>(dim_in * dim_out);
    if (m_.rows() != n || m_.cols() != n)
      throw DimensionError("Choi matrix size does not match dim_in*dim_out");
    if (!is_hermitian(m_, tol::kHermitian))
      throw CPTPError("Choi matrix is not Hermitian", hermiticity_residual(m_));
    const double min_eig = hermitian_eigs(m_).values.minCoeff();
    if (min_eig < -tol::kPsd)
      throw CPTPError("Choi matrix is not positive semidefinite", -min_eig);
    const std::vector<std::size_t> dims{dim_in, dim_out};
    const CMatrix reduced = partial_trace(m_, dims, {0});
    const double tp = operator_norm(reduced - CMatrix::Identity(dim_in, dim_in));
    if (tp > tol::kCptp)
      throw CPTPError("Choi matrix is not trace preserving", tp);
  }

  const CMatrix& matrix() const noexcept { return m_; }
  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }

 private:
  CMatrix m_;
  std::size_t dim_in_;
  std::size_t dim_out_;
};

/// Choi operator of any linear map given by its action on matrix units.
template <class Map>
CMatrix choi_of_map(Map&& map, std::size_t dim_in, std::size_t dim_out) {
  CMatrix c = CMatrix::Zero(dim_in * dim_out, dim_in * dim_out);
  for (std::size_t i = 0; i < dim_in; ++i)
    for (std::size_t j = 0; j < dim_in; ++j)
      c.block(i * dim_out, j * dim_out, dim_out, dim_out) =
          map(matrix_unit(dim_in, i, j));
  return c;
}

inline CMatrix choi_matrix(const Channel& ch) {
  CMatrix c = CMatrix::Zero(ch.dim_in() * ch.dim_out(), ch.dim_in() * ch.dim_out());
  // sum_k vec(K_k) vec(K_k)^dagger with vec indexed (in, out)
  for (const auto& k : ch.kraus()) {
    CVector v(ch.dim_in() * ch.dim_out());
    for (std::size_t i = 0; i < ch.dim_in(); ++i)
      for (std::size_t o = 0; o < ch.dim_out(); ++o)
        v(i * ch.dim_out() + o) = k(o, i);
    c.noalias() += v * v.adjoint();
  }
  return c;
}

inline ChoiMatrix choi_of(const Channel& ch) {
  return ChoiMatrix(choi_matrix(ch), ch.dim_in(), ch.dim_out());
}

inline constexpr double kKrausEigenCutoff = 1e-10;

/// Minimal Kraus list from a Choi operator: one Kraus per eigenvalue above
/// kKrausEigenCutoff.
inline Channel kraus_from_choi(const ChoiMatrix& c) {
  const auto eig = hermitian_eigs(c.matrix());
  std::vector<CMatrix> kraus;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) <= kKrausEigenCutoff) break;
    const double s = std::sqrt(eig.values(k));
    CMatrix kr(c.dim_out(), c.dim_in());
    for (std::size_t i = 0; i < c.dim_in(); ++i)
      for (std::size_t o = 0; o < c.dim_out(); ++o)
        kr(o, i) = s * eig.vectors(i * c.dim_out() + o, k);
    kraus.push_back(std::move(kr));
  }
  if (kraus.empty()) throw CPTPError("Choi matrix has no positive eigenvalues", 1.0);
  return Channel::from_kraus(std::move(kraus));
}

/// Validates a linear map (given on matrix units) as CPTP and returns a
/// minimal Kraus form of it.
template <class Map>
Channel channel_from_map(Map&& map, std::size_t dim_in, std::size_t dim_out) {
  return kraus_from_choi(
      ChoiMatrix(choi_of_map(std::forward<Map>(map), dim_in, dim_out), dim_in, dim_out));
}

inline double choi_distance(const Channel& a, const Channel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out())
    throw DimensionError("choi_distance: channel dimensions differ");
  return frobenius_distance(choi_matrix(a), choi_matrix(b));
}

//=========================================================================
// Composition
//=========================================================================

/// later ∘ earlier, Kraus {L_i K_j}.
inline Channel compose(const Channel& later, const Channel& earlier) {
  if (later.dim_in() != earlier.dim_out())
    throw DimensionError("compose: output dimension " +
                         std::to_string(earlier.dim_out()) +
                         " does not feed input dimension " +
                         std::to_string(later.dim_in()));
  std::vector<CMatrix> kraus;
  kraus.reserve(later.kraus_rank() * earlier.kraus_rank());
  for (const auto& l : later.kraus())
    for (const auto& k : earlier.kraus()) kraus.push_back(l * k);
  return Channel::from_kraus(std::move(kraus));
}

/// a ⊗ b, Kraus {A_i ⊗ B_j}.
inline Channel tensor(const Channel& a, const Channel& b) {
  std::vector<CMatrix> kraus;
  kraus.reserve(a.kraus_rank() * b.kraus_rank());
  for (const auto& x : a.kraus())
    for (const auto& y : b.kraus()) kraus.push_back(kron(x, y));
  return Channel::from_kraus(std::move(kraus));
}

inline Channel tensor(const std::vector<Channel>& channels) {
  if (channels.empty()) throw DimensionError("tensor of an empty channel list");
  Channel out = channels.front();
  for (std::size_t i = 1; i < channels.size(); ++i) out = tensor(out, channels[i]);
  return out;
}

//=========================================================================
// Standard channels
//=========================================================================

inline Channel identity(std::size_t d) {
  return Channel::from_kraus({CMatrix::Identity(d, d)});
}

inline Channel unitary_channel(const CMatrix& u) {
  return Channel::from_kraus({u});
}

/// Pauli channel sum_k p_k sigma_k rho sigma_k, probabilities ordered I,X,Y,Z.
inline Channel pauli_channel(const std::vector<double>& probs) {
  if (probs.size() != 4) throw ValidationError("pauli_channel needs 4 probabilities");
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw ValidationError("pauli_channel: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ValidationError("pauli_channel: probabilities sum to " + std::to_string(total));
  std::vector<CMatrix> kraus;
  for (int k = 0; k < 4; ++k)
    if (probs[k] > 0.0) kraus.push_back(std::sqrt(probs[k]) * qubit::pauli(k));
  return Channel::from_kraus(std::move(kraus));
}

/// Completely depolarizing channel rho -> Tr[rho] I/d. For d = 2 the Kraus
/// list is {sigma_k / 2} (I, X, Y, Z order); otherwise the d^2 Weyl
/// operators X^a Z^b / d.
inline Channel depolarizing(std::size_t d) {
  if (d == 0) throw DimensionError("depolarizing: dimension must be positive");
  std::vector<CMatrix> kraus;
  if (d == 2) {
    for (int k = 0; k < 4; ++k) kraus.push_back(qubit::pauli(k) / 2.0);
    return Channel::from_kraus(std::move(kraus));
  }
  const double pi = std::acos(-1.0);
  const Complex omega = std::polar(1.0, 2.0 * pi / static_cast<double>(d));
  CMatrix shift = CMatrix::Zero(d, d), clock = CMatrix::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    shift((j + 1) % d, j) = 1.0;
    clock(j, j) = std::pow(omega, static_cast<double>(j));
  }
  CMatrix xa = CMatrix::Identity(d, d);
  for (std::size_t a = 0; a < d; ++a, xa = shift * xa) {
    CMatrix xz = xa;
    for (std::size_t b = 0; b < d; ++b, xz = xz * clock)
      kraus.push_back(xz / static_cast<double>(d));
  }
  return Channel::from_kraus(std::move(kraus));
}

/// Constant channel X -> Tr[X] rho0, Kraus {sqrt(l_k) |v_k><j|}.
inline Channel constant_channel(const DensityMatrix& rho0, std::size_t dim_in) {
  const auto eig = hermitian_eigs(rho0.matrix());
  std::vector<CMatrix> kraus;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) <= kKrausEigenCutoff) continue;
    const CVector v = std::sqrt(eig.values(k)) * eig.vectors.col(k);
    for (std::size_t j = 0; j < dim_in; ++j)
      kraus.push_back(v * basis_vector(dim_in, j).adjoint());
  }
  return Channel::from_kraus(std::move(kraus));
}

inline Channel constant_channel(const DensityMatrix& rho0) {
  return constant_channel(rho0, rho0.dim());
}

/// Perfect dephasing in the computational basis, Kraus {|j><j|}.
inline Channel classical_identity(std::size_t d) {
  std::vector<CMatrix> kraus;
  for (std::size_t j = 0; j < d; ++j) kraus.push_back(matrix_unit(d, j, j));
  return Channel::from_kraus(std::move(kraus));
}

/// Partial trace channel on a bipartite input, keeping the listed factors.
inline Channel partial_trace_channel(std::vector<std::size_t> dims,
                                     std::vector<std::size_t> keep) {
  const std::size_t din = product(dims);
  std::size_t dout = 1;
  for (std::size_t k : keep) dout *= dims.at(k);
  return channel_from_map(
      [&](const CMatrix& x) { return partial_trace(x, dims, keep); }, din, dout);
}

/// ||Choi - I ⊗ rho0||_F with rho0 = Tr_in(Choi)/d_in.
inline double constancy_residual(const Channel& ch) {
  const CMatrix c = choi_matrix(ch);
  const std::vector<std::size_t> dims{ch.dim_in(), ch.dim_out()};
  const CMatrix rho0 = partial_trace(c, dims, {1}) / static_cast<double>(ch.dim_in());
  const CMatrix target = kron(CMatrix::Identity(ch.dim_in(), ch.dim_in()), rho0);
  return frobenius_distance(c, target);
}

/// True when N(X) = Tr[X] rho0 for a fixed rho0.
inline bool is_constant(const Channel& ch, double tolerance = 1e-9) {
  return constancy_residual(ch) <= tolerance;
}

//=========================================================================
// Multipartite channels: combs and no-signalling
//=========================================================================

struct StepDims {
  std::size_t in = 1;
  std::size_t out = 1;
  friend bool operator==(const StepDims&, const StepDims&) = default;
};

// A channel on S_1 ⊗ ... ⊗ S_k -> S_1' ⊗ ... ⊗ S_k' with its factor
// structure declared. For combs, step i maps S_i to S_i' in causal order;
// for no-signalling checks the steps are parties.
class MultiPartiteChannel {
 public:
  MultiPartiteChannel(Channel channel, std::vector<StepDims> steps)
      : channel_(std::move(channel)), steps_(std::move(steps)) {
    if (steps_.empty()) throw DimensionError("multipartite channel needs at least one step");
    std::size_t din = 1, dout = 1;
    for (const auto& s : steps_) {
      din *= s.in;
      dout *= s.out;
    }
    if (din != channel_.dim_in() || dout != channel_.dim_out())
      throw DimensionError("step dimensions do not multiply to the channel dimensions");
  }

  const Channel& channel() const noexcept { return channel_; }
  const std::vector<StepDims>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }

  std::vector<std::size_t> in_dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : steps_) d.push_back(s.in);
    return d;
  }
  std::vector<std::size_t> out_dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : steps_) d.push_back(s.out);
    return d;
  }

 private:
  Channel channel_;
  std::vector<StepDims> steps_;
};

namespace detail {

// Action on the matrix unit |i><j| as a sum of Kraus column outer products.
inline CMatrix apply_to_unit(const Channel& ch, std::size_t i, std::size_t j) {
  CMatrix out = CMatrix::Zero(ch.dim_out(), ch.dim_out());
  for (const auto& k : ch.kraus()) out.noalias() += k.col(i) * k.col(j).adjoint();
  return out;
}

// Tr_{outputs ∉ kept}[C(X)] == Tr_{outputs ∉ kept}[C(Tr_{inputs ∉ kept}[X] ⊗ I/d)]
// for every matrix unit X of the full input space. The right side depends
// only on the reduced unit, so it is computed once per reduced unit.
inline bool marginal_ignores_inputs(const MultiPartiteChannel& mp,
                                    const std::vector<std::size_t>& kept,
                                    double tolerance) {
  const auto din = mp.in_dims();
  const auto dout = mp.out_dims();
  const std::size_t n = mp.channel().dim_in();
  std::size_t kept_in = 1;
  for (std::size_t p : kept) kept_in *= din[p];
  std::vector<std::optional<CMatrix>> rhs_cache(kept_in * kept_in);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CMatrix lhs = partial_trace(apply_to_unit(mp.channel(), i, j), dout, kept);
      const CMatrix reduced = partial_trace(matrix_unit(n, i, j), din, kept);
      Eigen::Index a = 0, b = 0;
      const bool nonzero = reduced.cwiseAbs().maxCoeff(&a, &b) > 0.0;
      CMatrix rhs = CMatrix::Zero(lhs.rows(), lhs.cols());
      if (nonzero) {
        auto& slot = rhs_cache[static_cast<std::size_t>(a) * kept_in + static_cast<std::size_t>(b)];
        if (!slot) {
          const CMatrix x_reduced = embed_with_maximally_mixed(reduced, din, kept);
          slot = partial_trace(mp.channel()(x_reduced), dout, kept);
        }
        rhs = *slot;
      }
      if ((lhs - rhs).cwiseAbs().maxCoeff() > tolerance) return false;
    }
  return true;
}

}  // namespace detail

/// Nested causality conditions of a k-comb: for every j, the outputs of
/// steps 1..j-1 do not depend on the inputs of steps j..k. Exact by
/// linearity because every matrix unit is tested.
inline bool comb_check(const MultiPartiteChannel& mp, double tolerance = 1e-9) {
  for (std::size_t j = mp.size(); j-- > 0;) {
    std::vector<std::size_t> kept(j);
    std::iota(kept.begin(), kept.end(), std::size_t{0});
    if (!detail::marginal_ignores_inputs(mp, kept, tolerance)) return false;
  }
  return true;
}

/// For every proper nonempty subset S of parties, the S-marginal of the
/// output depends only on the S-marginal of the input.
inline bool no_signalling_check(const MultiPartiteChannel& mp,
                                double tolerance = 1e-9) {
  const std::size_t k = mp.size();
  if (k >= 8 * sizeof(std::size_t))
    throw DimensionError("no_signalling_check: too many parties");
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < k; ++p)
      if (mask & (std::size_t{1} << p)) kept.push_back(p);
    if (!detail::marginal_ignores_inputs(mp, kept, tolerance)) return false;
  }
  return true;
}

}  // namespace superchan

#endif  // SUPERCHAN_CHANNELS_HPP
