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

// Holevo information, coherent information, and side-channel and
// constant-channel certification.

#ifndef SUPERCHAN_CAPACITY_HPP
#define SUPERCHAN_CAPACITY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "superchan/channels.hpp"
#include "superchan/optimize.hpp"
#include "superchan/random.hpp"
#include "superchan/supermaps.hpp"

namespace superchan {

//=========================================================================
// Ensembles and Holevo quantity
//=========================================================================

class Ensemble {
 public:
  Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states)
      : probs_(std::move(probs)), states_(std::move(states)) {
    if (probs_.empty() || probs_.size() != states_.size())
      throw ValidationError("ensemble: need one probability per state");
    double total = 0.0;
    for (double p : probs_) {
      if (!(p >= 0.0)) throw ValidationError("ensemble: negative probability");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9)
      throw ValidationError("ensemble: probabilities sum to " + std::to_string(total));
    for (const auto& s : states_)
      if (s.dim() != states_.front().dim())
        throw DimensionError("ensemble: states of different dimension");
  }

  const std::vector<double>& probs() const noexcept { return probs_; }
  const std::vector<DensityMatrix>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return probs_.size(); }
  std::size_t dim() const noexcept { return states_.front().dim(); }

 private:
  std::vector<double> probs_;
  std::vector<DensityMatrix> states_;
};

/// S(sum p_i N(rho_i)) - sum p_i S(N(rho_i)), in bits.
inline double holevo_quantity(const Channel& ch, const Ensemble& ens) {
  if (ens.dim() != ch.dim_in())
    throw DimensionError("holevo_quantity: ensemble dimension " + std::to_string(ens.dim()) +
                         ", channel input " + std::to_string(ch.dim_in()));
  CMatrix avg = CMatrix::Zero(ch.dim_out(), ch.dim_out());
  double inner = 0.0;
  for (std::size_t i = 0; i < ens.size(); ++i) {
    const CMatrix out = ch(ens.states()[i].matrix());
    avg += ens.probs()[i] * out;
    inner += ens.probs()[i] * entropy_bits(out);
  }
  return std::max(0.0, entropy_bits(avg) - inner);
}

//=========================================================================
// Holevo maximization
//=========================================================================

struct OptimizerConfig {
  std::size_t ensemble_size = 0;  // 0 selects dim_in^2
  std::size_t restarts = 32;
  std::size_t max_iters = 5000;
  double tol = 1e-6;
  std::uint64_t seed = 1;
};

struct TracePoint {
  std::size_t restart = 0;
  std::size_t iteration = 0;
  double chi = 0.0;
};

struct HolevoResult {
  double chi = 0.0;
  std::optional<Ensemble> ensemble;
  std::size_t iterations = 0;
  bool converged = false;  // best restart reached the simplex size tolerance
  std::size_t restarts_converged = 0;
  std::size_t best_restart = 0;
  std::vector<TracePoint> trace;
};

namespace detail {

/// Euclidean projection onto the probability simplex.
inline std::vector<double> project_to_simplex(std::span<const double> v) {
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0, theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumsum += u[j];
    const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0) theta = t;
  }
  std::vector<double> p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = std::max(v[i] - theta, 0.0);
  return p;
}

// Parameter layout: n pure states as 2d reals each (re, im interleaved,
// normalized on decode), then n raw weights projected onto the simplex.
class EnsembleCoder {
 public:
  EnsembleCoder(std::size_t d, std::size_t n) : d_(d), n_(n) {}

  std::size_t size() const noexcept { return n_ * (2 * d_ + 1); }

  CVector state(std::span<const double> x, std::size_t i) const {
    CVector v(d_);
    for (std::size_t a = 0; a < d_; ++a)
      v(a) = Complex(x[i * 2 * d_ + 2 * a], x[i * 2 * d_ + 2 * a + 1]);
    const double norm = v.norm();
    if (norm < 1e-300) return basis_vector(d_, 0);
    return v / norm;
  }

  std::vector<double> probs(std::span<const double> x) const {
    return project_to_simplex(x.subspan(n_ * 2 * d_, n_));
  }

  Ensemble decode(std::span<const double> x) const {
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < n_; ++i) states.push_back(DensityMatrix::pure(state(x, i)));
    auto p = probs(x);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& q : p) q /= total;
    return Ensemble(std::move(p), std::move(states));
  }

  std::vector<double> random_start(random::Rng& rng) const {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> x(size());
    for (std::size_t k = 0; k < n_ * 2 * d_; ++k) x[k] = g(rng);
    for (std::size_t k = 0; k < n_; ++k)
      x[n_ * 2 * d_ + k] = 1.0 / static_cast<double>(n_) + 0.1 * g(rng);
    return x;
  }

 private:
  std::size_t d_, n_;
};

// Holevo quantity of the pure-state ensemble encoded in x, skipping state
// validation.
inline double holevo_of_params(const Channel& ch, const EnsembleCoder& coder,
                               std::size_t n, std::span<const double> x) {
  const auto p = coder.probs(x);
  const auto dout = static_cast<Eigen::Index>(ch.dim_out());
  CMatrix avg = CMatrix::Zero(dout, dout);
  double inner = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] <= 0.0) continue;
    const CVector psi = coder.state(x, i);
    CMatrix out = CMatrix::Zero(dout, dout);
    for (const auto& k : ch.kraus()) {
      const CVector kv = k * psi;
      out.noalias() += kv * kv.adjoint();
    }
    avg += p[i] * out;
    inner += p[i] * entropy_bits(out);
  }
  return entropy_bits(avg) - inner;
}

inline random::Rng restart_rng(std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), 0x5eedu};
  return random::Rng(seq);
}

}  // namespace detail

/// Multi-restart Nelder-Mead over ensembles of at most `ensemble_size` pure
/// states. Each restart is seeded from (seed, restart index) and re-started
/// from its own optimum until the gain drops below tol. The best restart
/// wins; ties go to the lower index.
inline HolevoResult maximize_holevo(const Channel& ch, const OptimizerConfig& cfg = {}) {
  if (cfg.tol <= 0) throw ValidationError("optimizer tol must be positive");
  if (cfg.restarts == 0) throw ValidationError("optimizer needs at least one restart");
  const std::size_t n = cfg.ensemble_size == 0 ? ch.dim_in() * ch.dim_in() : cfg.ensemble_size;
  const detail::EnsembleCoder coder(ch.dim_in(), n);
  const optimize::Objective f = [&](std::span<const double> x) {
    return -detail::holevo_of_params(ch, coder, n, x);
  };

  HolevoResult result;
  result.chi = -1.0;
  std::vector<double> best_x;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    auto rng = detail::restart_rng(cfg.seed, r);
    optimize::SimplexOptions opt;
    opt.max_iters = cfg.max_iters;
    opt.size_tol = cfg.tol;
    auto run = optimize::nelder_mead(f, coder.random_start(rng), opt);
    std::size_t iters = 0;
    auto record = [&](const optimize::SimplexResult& s) {
      for (double v : s.trace) result.trace.push_back({r, iters++, -v});
      result.iterations += s.iterations;
    };
    record(run);
    // re-polish from the optimum: a fresh simplex escapes premature collapse
    opt.step = 0.1;
    for (int polish = 0; polish < 8; ++polish) {
      auto again = optimize::nelder_mead(f, run.x, opt);
      record(again);
      const bool gained = again.value < run.value - cfg.tol;
      if (again.value <= run.value) run = std::move(again);
      if (!gained) break;
    }
    if (run.converged) ++result.restarts_converged;
    const double chi = -run.value;
    if (chi > result.chi) {
      result.chi = chi;
      result.best_restart = r;
      result.converged = run.converged;
      best_x = run.x;
    }
  }
  result.ensemble = coder.decode(best_x);
  result.chi = holevo_quantity(ch, *result.ensemble);
  return result;
}

//=========================================================================
// Parametrized families
//=========================================================================

using ChannelFamily = std::function<Channel(std::span<const double>)>;

struct FamilyResult {
  std::vector<double> params;
  HolevoResult holevo;
  std::size_t outer_iterations = 0;
  bool outer_converged = false;
};

/// Outer Nelder-Mead over family parameters, inner maximize_holevo with
/// `inner`; the best parameters are re-evaluated with `final_cfg`.
/// Parameters for which the family throws score zero.
inline FamilyResult maximize_holevo_family(const ChannelFamily& family,
                                           const std::vector<std::vector<double>>& starts,
                                           const OptimizerConfig& inner,
                                           const OptimizerConfig& final_cfg,
                                           const optimize::SimplexOptions& outer = {}) {
  if (starts.empty()) throw ValidationError("family optimization needs a start point");
  const optimize::Objective f = [&](std::span<const double> p) {
    try {
      return -maximize_holevo(family(p), inner).chi;
    } catch (const Error&) {
      return 0.0;
    }
  };
  FamilyResult out;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    auto run = optimize::nelder_mead(f, s, outer);
    out.outer_iterations += run.iterations;
    if (run.value < best) {
      best = run.value;
      out.params = run.x;
      out.outer_converged = run.converged;
    }
  }
  out.holevo = maximize_holevo(family(out.params), final_cfg);
  return out;
}

//=========================================================================
// Coherent information and constancy
//=========================================================================

/// S(N(rho)) - S((N ⊗ I)(psi_rho)) for a purification psi_rho on in ⊗ ref.
inline double coherent_information(const Channel& ch, const DensityMatrix& rho) {
  const std::size_t d = ch.dim_in();
  if (rho.dim() != d)
    throw DimensionError("coherent_information: state dimension " + std::to_string(rho.dim()) +
                         ", channel input " + std::to_string(d));
  const auto eig = hermitian_eigs(rho.matrix());
  CVector psi = CVector::Zero(d * d);
  for (std::size_t k = 0; k < d; ++k) {
    const double lam = std::max(0.0, eig.values(k));
    psi += std::sqrt(lam) * kron(CMatrix(eig.vectors.col(k)), CMatrix(basis_vector(d, k)));
  }
  const Channel joint = tensor(ch, identity(d));
  const CMatrix out = joint(projector(psi));
  return entropy_bits(ch(rho.matrix())) - entropy_bits(out);
}

/// Constancy is the zero-capacity certificate.
inline bool certify_zero_capacity(const Channel& ch) { return is_constant(ch, 1e-9); }

/// <Phi|(C ⊗ I)(Phi)|Phi> against the identity, for square channels.
inline double entanglement_fidelity(const Channel& ch) {
  if (ch.dim_in() != ch.dim_out())
    throw DimensionError("entanglement_fidelity: channel is not square");
  const std::size_t d = ch.dim_in();
  const CMatrix c = choi_matrix(ch);
  Complex s = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s += c(i * d + i, j * d + j);
  return s.real() / static_cast<double>(d * d);
}

//=========================================================================
// Side channels and constant-channel activation
//=========================================================================

inline constexpr double kNonzeroCapacity = 0.01;
inline constexpr double kIndependenceTol = 1e-6;

struct WitnessReport {
  bool witnessed = false;
  double chi = 0.0;
  std::size_t samples = 0;     // random tuples
  std::size_t structured = 0;  // {identity, constant, depolarizing}^k tuples
  double max_choi_distance = 0.0;
  std::uint64_t seed = 0;
  std::optional<double> entanglement_fidelity;
  std::optional<Channel> common_channel;
};

namespace detail {

inline std::vector<std::vector<Channel>> cartesian_tuples(const std::vector<Channel>& pool,
                                                          std::size_t k) {
  std::vector<std::vector<Channel>> out{{}};
  for (std::size_t slot = 0; slot < k; ++slot) {
    std::vector<std::vector<Channel>> next;
    for (const auto& prefix : out)
      for (const auto& c : pool) {
        auto t = prefix;
        t.push_back(c);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Evaluates D ∘ S(N1..Nk) ∘ E on structured and random tuples. The common
/// channel's Holevo information is computed only when every tuple gives
/// the same Choi within kIndependenceTol.
inline WitnessReport witness_side_channel(const SupermapDescriptor& s, const Channel& e,
                                          const Channel& d, std::size_t samples,
                                          std::uint64_t seed, OptimizerConfig cfg = {}) {
  const std::size_t dim = s.input_dim();
  const std::size_t k = s.arity();
  WitnessReport rep;
  rep.seed = seed;
  rep.samples = samples;

  const std::vector<Channel> pool{identity(dim),
                                  constant_channel(DensityMatrix::basis(dim, 0), dim),
                                  depolarizing(dim)};
  auto tuples = detail::cartesian_tuples(pool, k);
  rep.structured = tuples.size();
  random::Rng rng(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    std::vector<Channel> t;
    for (std::size_t slot = 0; slot < k; ++slot) t.push_back(random::channel(rng, dim));
    tuples.push_back(std::move(t));
  }

  std::optional<Channel> reference;
  CMatrix ref_choi;
  for (const auto& t : tuples) {
    const Channel c = compose(d, compose(s.evaluate(t), e));
    if (!reference) {
      reference = c;
      ref_choi = choi_matrix(c);
      continue;
    }
    if (c.dim_in() != reference->dim_in() || c.dim_out() != reference->dim_out())
      throw DimensionError("witness_side_channel: output dimensions vary across tuples");
    rep.max_choi_distance = std::max(rep.max_choi_distance,
                                     frobenius_distance(choi_matrix(c), ref_choi));
  }
  if (rep.max_choi_distance <= kIndependenceTol) {
    cfg.seed = seed;
    rep.chi = maximize_holevo(*reference, cfg).chi;
    if (reference->dim_in() == reference->dim_out())
      rep.entanglement_fidelity = entanglement_fidelity(*reference);
    rep.common_channel = reference;
    rep.witnessed = rep.chi > kNonzeroCapacity;
  }
  return rep;
}

/// True (activation found) iff some tuple of constant channels is mapped to
/// a non-constant channel. Tuples: all pure-basis constants, the
/// depolarizing tuple, and `samples` tuples with random mixed rho0.
inline bool check_constant_activation(const SupermapDescriptor& s, std::size_t samples,
                                      std::uint64_t seed) {
  const std::size_t dim = s.input_dim();
  const std::size_t k = s.arity();
  std::vector<Channel> basis_pool;
  for (std::size_t j = 0; j < dim; ++j)
    basis_pool.push_back(constant_channel(DensityMatrix::basis(dim, j), dim));
  auto tuples = detail::cartesian_tuples(basis_pool, k);
  tuples.push_back(std::vector<Channel>(k, depolarizing(dim)));
  random::Rng rng(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    std::vector<Channel> t;
    for (std::size_t slot = 0; slot < k; ++slot)
      t.push_back(constant_channel(random::mixed_state(rng, dim), dim));
    tuples.push_back(std::move(t));
  }
  for (const auto& t : tuples)
    if (!is_constant(s.evaluate(t), 1e-9)) return true;
  return false;
}

/// The supermap evaluated on completely depolarizing inputs (incoherently
/// extended where the kind takes vacuum extensions).
inline Channel reduced_process(const SupermapDescriptor& s) {
  return s.evaluate(std::vector<Channel>(s.arity(), depolarizing(s.input_dim())));
}

}  // namespace superchan

#endif  // SUPERCHAN_CAPACITY_HPP
