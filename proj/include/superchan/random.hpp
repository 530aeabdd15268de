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

// Seeded samplers for states, unitaries, isometries and channels.

#ifndef SUPERCHAN_RANDOM_HPP
#define SUPERCHAN_RANDOM_HPP

#include <cstdint>
#include <random>

#include "superchan/channels.hpp"

namespace superchan::random {

using Rng = std::mt19937_64;

inline CMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = Complex(g(rng), g(rng));
  return m;
}

/// Columns of a Haar-random isometry rows x cols (rows >= cols).
inline CMatrix isometry(Rng& rng, std::size_t rows, std::size_t cols) {
  const CMatrix g = ginibre(rng, rows, cols);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rows, cols);
  const CMatrix r = qr.matrixQR();
  for (std::size_t j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

inline CMatrix unitary(Rng& rng, std::size_t d) { return isometry(rng, d, d); }

inline CVector pure_vector(Rng& rng, std::size_t d) {
  CVector v = ginibre(rng, d, 1).col(0);
  return v / v.norm();
}

inline DensityMatrix pure_state(Rng& rng, std::size_t d) {
  return DensityMatrix::pure(pure_vector(rng, d));
}

/// Mixed state from the induced measure with the given ancilla rank.
inline DensityMatrix mixed_state(Rng& rng, std::size_t d, std::size_t rank = 0) {
  const CMatrix g = ginibre(rng, d, rank == 0 ? d : rank);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

/// Random CPTP map with `kraus_count` Kraus operators, sliced from an
/// isometry of shape (kraus_count*dim_out) x dim_in.
inline Channel channel(Rng& rng, std::size_t dim_in, std::size_t dim_out,
                       std::size_t kraus_count) {
  const CMatrix v = isometry(rng, kraus_count * dim_out, dim_in);
  std::vector<CMatrix> kraus;
  for (std::size_t k = 0; k < kraus_count; ++k)
    kraus.push_back(v.block(k * dim_out, 0, dim_out, dim_in));
  return Channel::from_kraus(std::move(kraus));
}

inline Channel channel(Rng& rng, std::size_t d) { return channel(rng, d, d, d * d); }

/// Unitary remixing K'_a = sum_b V_{ab} K_b of a Kraus list onto `count`
/// operators; describes the same channel.
inline std::vector<CMatrix> remix_kraus(Rng& rng, const std::vector<CMatrix>& kraus,
                                        std::size_t count) {
  const CMatrix v = isometry(rng, count, kraus.size());
  std::vector<CMatrix> out(count, CMatrix::Zero(kraus.front().rows(), kraus.front().cols()));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < kraus.size(); ++b) out[a] += v(a, b) * kraus[b];
  return out;
}

inline Channel remix(Rng& rng, const Channel& ch, std::size_t count) {
  return Channel::from_kraus(remix_kraus(rng, ch.kraus(), count));
}

inline std::vector<Complex> unit_amplitudes(Rng& rng, std::size_t n) {
  const CVector v = pure_vector(rng, n);
  return {v.data(), v.data() + v.size()};
}

}  // namespace superchan::random

#endif  // SUPERCHAN_RANDOM_HPP
