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

#ifndef SUPERCHAN_VACUUM_HPP
#define SUPERCHAN_VACUUM_HPP

#include <array>
#include <optional>
#include <vector>

#include "superchan/channels.hpp"
#include "superchan/random.hpp"

namespace superchan {

//=========================================================================
// Vacuum-extended channels
//=========================================================================

// A channel on X ⊕ Vac with Kraus operators N_i ⊕ nu_i |vac><vac|.
// The vacuum is one-dimensional and sits at basis index d (the last one),
// so X-sector indices coincide with those of the base channel.
class VacuumExtendedChannel {
 public:
  VacuumExtendedChannel(Channel base, std::vector<Complex> amplitudes)
      : base_(std::move(base)), amplitudes_(std::move(amplitudes)) {
    if (base_.dim_in() != base_.dim_out())
      throw DimensionError("vacuum extension needs a channel with equal input and output");
    if (amplitudes_.size() != base_.kraus_rank())
      throw ValidationError("vacuum amplitudes: got " + std::to_string(amplitudes_.size()) +
                            " for " + std::to_string(base_.kraus_rank()) +
                            " Kraus operators");
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-9)
      throw ValidationError("vacuum amplitudes: sum |nu|^2 = " + std::to_string(norm2));
    extended_ = Channel::from_kraus(build_extended_kraus());
    check_extension_conditions();
  }

  const Channel& base() const noexcept { return base_; }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dim() const noexcept { return base_.dim_in(); }
  std::size_t extended_dim() const noexcept { return base_.dim_in() + 1; }
  std::size_t vacuum_index() const noexcept { return base_.dim_in(); }

  /// The extension as an ordinary channel on dimension d+1.
  const Channel& extended() const noexcept { return *extended_; }

 private:
  std::vector<CMatrix> build_extended_kraus() const {
    const std::size_t d = dim();
    std::vector<CMatrix> out;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
      CMatrix k = CMatrix::Zero(d + 1, d + 1);
      k.topLeftCorner(d, d) = base_.kraus()[i];
      k(d, d) = amplitudes_[i];
      out.push_back(std::move(k));
    }
    return out;
  }

  // vacuum fixed; base action reproduced on the X-sector matrix units
  void check_extension_conditions() const {
    const std::size_t d = dim();
    const CMatrix vac = matrix_unit(d + 1, d, d);
    if (((*extended_)(vac) - vac).cwiseAbs().maxCoeff() > tol::kCptp)
      throw ValidationError("vacuum extension does not fix the vacuum");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const CMatrix full = (*extended_)(matrix_unit(d + 1, i, j));
        CMatrix expected = CMatrix::Zero(d + 1, d + 1);
        expected.topLeftCorner(d, d) = base_(matrix_unit(d, i, j));
        if ((full - expected).cwiseAbs().maxCoeff() > tol::kCptp)
          throw ValidationError("vacuum extension does not reproduce the base channel");
      }
  }

  Channel base_;
  std::vector<Complex> amplitudes_;
  std::optional<Channel> extended_;
};

inline VacuumExtendedChannel vacuum_extend(Channel base, std::vector<Complex> amplitudes) {
  return VacuumExtendedChannel(std::move(base), std::move(amplitudes));
}

/// F = sum_i conj(nu_i) N_i.
inline CMatrix interference_operator(const VacuumExtendedChannel& v) {
  CMatrix f = CMatrix::Zero(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.amplitudes().size(); ++i)
    f += std::conj(v.amplitudes()[i]) * v.base().kraus()[i];
  return f;
}

/// Extension with F = 0: Kraus list doubled as {N_i/sqrt2} ∪ {N_i/sqrt2}
/// with amplitudes +1/sqrt(2m) and -1/sqrt(2m).
inline VacuumExtendedChannel incoherent_extension(const Channel& base) {
  const std::size_t m = base.kraus_rank();
  std::vector<CMatrix> kraus;
  std::vector<Complex> amps;
  const double s = 1.0 / std::sqrt(2.0);
  const double a = 1.0 / std::sqrt(2.0 * static_cast<double>(m));
  for (int sign : {+1, -1})
    for (const auto& k : base.kraus()) {
      kraus.push_back(s * k);
      amps.emplace_back(sign * a);
    }
  return VacuumExtendedChannel(Channel::from_kraus(std::move(kraus)), std::move(amps));
}

/// Qubit depolarizing channel with Kraus {sigma_k/2} and vacuum amplitudes
/// nu_k = e^{i phase_k}/2.
inline VacuumExtendedChannel pauli_phase_extension(const std::array<double, 4>& phases) {
  std::vector<Complex> amps;
  for (double p : phases) amps.push_back(std::polar(0.5, p));
  return VacuumExtendedChannel(depolarizing(2), std::move(amps));
}

/// Output of the extension via N(P rho P) + <vac|rho|vac> |vac><vac|
/// + F rho |vac><vac| + |vac><vac| rho F^dagger.
inline DensityMatrix apply_extended(const VacuumExtendedChannel& v,
                                    const DensityMatrix& rho) {
  const std::size_t d = v.dim();
  if (rho.dim() != d + 1)
    throw DimensionError("apply_extended: state dimension " + std::to_string(rho.dim()) +
                         ", expected " + std::to_string(d + 1));
  const CMatrix& r = rho.matrix();
  const CMatrix f = interference_operator(v);
  CMatrix out = CMatrix::Zero(d + 1, d + 1);
  out.topLeftCorner(d, d) = v.base()(r.topLeftCorner(d, d));
  out(d, d) = r(d, d);
  out.topRightCorner(d, 1) = f * r.topRightCorner(d, 1);
  out.bottomLeftCorner(1, d) = r.bottomLeftCorner(1, d) * f.adjoint();
  return DensityMatrix(out);
}

/// later ∘ earlier as an extension of compose(later.base, earlier.base):
/// Kraus L_i K_j with amplitudes nu_i mu_j, so F = F_later F_earlier.
inline VacuumExtendedChannel compose_extended(const VacuumExtendedChannel& later,
                                              const VacuumExtendedChannel& earlier) {
  if (later.dim() != earlier.dim())
    throw DimensionError("compose_extended: base dimensions differ");
  std::vector<CMatrix> kraus;
  std::vector<Complex> amps;
  for (std::size_t i = 0; i < later.amplitudes().size(); ++i)
    for (std::size_t j = 0; j < earlier.amplitudes().size(); ++j) {
      kraus.push_back(later.base().kraus()[i] * earlier.base().kraus()[j]);
      amps.push_back(later.amplitudes()[i] * earlier.amplitudes()[j]);
    }
  return VacuumExtendedChannel(Channel::from_kraus(std::move(kraus)), std::move(amps));
}

//=========================================================================
// Interference-operator bounds
//=========================================================================

struct LemmaReport {
  double f_norm = 0.0;
  std::size_t choi_rank = 0;
  bool full_rank = false;
  bool depolarizing_base = false;
  // ||Choi(Ñ∘Ñ) - Choi(Ñ)||_F, only for depolarizing bases
  std::optional<double> idempotence_residual;
};

inline std::size_t choi_rank(const Channel& ch, double cutoff = kKrausEigenCutoff) {
  const auto eig = hermitian_eigs(choi_matrix(ch));
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    if (eig.values(k) > cutoff) ++r;
  return r;
}

inline double idempotence_residual(const VacuumExtendedChannel& v) {
  const Channel twice = compose(v.extended(), v.extended());
  return choi_distance(twice, v.extended());
}

inline LemmaReport lemma_suite(const VacuumExtendedChannel& v) {
  LemmaReport r;
  r.f_norm = operator_norm(interference_operator(v));
  r.choi_rank = choi_rank(v.base());
  r.full_rank = r.choi_rank == v.dim() * v.dim();
  r.depolarizing_base = choi_distance(v.base(), depolarizing(v.dim())) <= 1e-9;
  if (r.depolarizing_base) r.idempotence_residual = idempotence_residual(v);
  return r;
}

namespace random {

/// Random extension of `base`: its Kraus list remixed onto `kraus_count`
/// operators, with Haar-random unit amplitudes.
inline VacuumExtendedChannel extension(Rng& rng, const Channel& base,
                                       std::size_t kraus_count) {
  Channel remixed = remix(rng, base, kraus_count);
  return VacuumExtendedChannel(std::move(remixed), unit_amplitudes(rng, kraus_count));
}

}  // namespace random

}  // namespace superchan

#endif  // SUPERCHAN_VACUUM_HPP
