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

// Registered reproduction experiments. Each yields a JSON report, an
// optimizer trace and a pass/miss verdict; reports are a pure function of
// the settings.

#ifndef SUPERCHAN_TOOLS_EXPERIMENTS_HPP
#define SUPERCHAN_TOOLS_EXPERIMENTS_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "superchan/superchan.hpp"

namespace superchan::cli {

using nlohmann::json;

struct ExperimentSettings {
  std::uint64_t seed = 1;
  OptimizerConfig optimizer;  // seed copied from `seed`
};

struct ExperimentReport {
  json report;
  std::vector<TracePoint> trace;
  bool pass = false;
};

namespace detail {

inline DensityMatrix plus_state() { return DensityMatrix::pure(qubit::plus()); }

inline json config_json(const OptimizerConfig& c) {
  return {{"ensemble_size", c.ensemble_size},
          {"restarts", c.restarts},
          {"max_iters", c.max_iters},
          {"tol", c.tol},
          {"seed", c.seed}};
}

inline ExperimentReport header(const std::string& name, const ExperimentSettings& s,
                               const std::string& anchor, double tolerance) {
  ExperimentReport r;
  r.report = {{"experiment", name},
              {"anchor", anchor},
              {"tolerance", tolerance},
              {"seed", s.seed},
              {"optimizer", config_json(s.optimizer)}};
  return r;
}

inline DensityMatrix bloch_pure(double polar, double azimuth) {
  CVector v(2);
  v << Complex(std::cos(polar / 2)), std::polar(std::sin(polar / 2), azimuth);
  return DensityMatrix::pure(v);
}

inline std::array<double, 4> take4(std::span<const double> p, std::size_t offset) {
  return {p[offset], p[offset + 1], p[offset + 2], p[offset + 3]};
}

}  // namespace detail

inline ExperimentReport switch_depol(const ExperimentSettings& s) {
  constexpr double target = 0.049, tolerance = 0.002;
  auto r = detail::header("switch-depol", s,
                          "the value 0.049 of the Holevo information for the quantum SWITCH",
                          tolerance);
  const Channel ch = switch_place(depolarizing(2), depolarizing(2), detail::plus_state());
  const auto h = maximize_holevo(ch, s.optimizer);
  r.trace = h.trace;
  r.pass = std::abs(h.chi - target) <= tolerance;
  r.report["target"] = target;
  r.report["results"] = {{"chi", h.chi},
                         {"converged", h.converged},
                         {"restarts_converged", h.restarts_converged},
                         {"best_restart", h.best_restart},
                         {"iterations", h.iterations},
                         {"ensemble", superchan::json::ensemble_to_json(*h.ensemble)}};
  r.report["pass"] = r.pass;
  return r;
}

inline ExperimentReport superpose_depol_1use(const ExperimentSettings& s) {
  constexpr double zero_tol = 1e-4;
  auto r = detail::header(
      "superpose-depol-1use", s,
      "the Holevo information achievable by superposing the two channels is greater than the "
      "Holevo information achievable by putting them in the quantum SWITCH",
      zero_tol);
  const auto omega = detail::plus_state();
  const auto coherent = pauli_phase_extension({0, 0, 0, 0});
  const auto incoherent = incoherent_extension(depolarizing(2));
  const auto hc = maximize_holevo(superposition_place(coherent, coherent, omega), s.optimizer);
  const auto hi =
      maximize_holevo(superposition_place(incoherent, incoherent, omega), s.optimizer);
  const auto hs =
      maximize_holevo(switch_place(depolarizing(2), depolarizing(2), omega), s.optimizer);
  r.trace = hc.trace;
  r.pass = hi.chi <= zero_tol && hc.chi > hs.chi;
  r.report["results"] = {{"chi_coherent_uniform", hc.chi},
                         {"chi_incoherent", hi.chi},
                         {"chi_switch", hs.chi},
                         {"coherent_exceeds_switch", hc.chi > hs.chi},
                         {"incoherent_is_constant",
                          is_constant(superposition_place(incoherent, incoherent, omega))}};
  r.report["pass"] = r.pass;
  return r;
}

/// Family: nu_k = e^{i theta_k}/2 per path (theta1, theta2), each path
/// traversed twice, path state pure with Bloch angles (polar, azimuth).
inline Channel two_use_family(std::span<const double> p) {
  const auto e1 = pauli_phase_extension(detail::take4(p, 0));
  const auto e2 = pauli_phase_extension(detail::take4(p, 4));
  return superposition_place(compose_extended(e1, e1), compose_extended(e2, e2),
                             detail::bloch_pure(p[8], p[9]));
}

inline ExperimentReport superpose_depol_2use(const ExperimentSettings& s,
                                             std::size_t outer_iters = 120) {
  constexpr double target = 0.018, tolerance = 0.003;
  auto r = detail::header("superpose-depol-2use", s,
                          "the maximum Holevo information turned out to be 0.018", tolerance);
  r.report["contingent_on"] =
      "vacuum amplitudes nu_k = exp(i theta_k)/2 on the Pauli Kraus list {sigma_k/2}";
  OptimizerConfig inner = s.optimizer;
  inner.restarts = std::min<std::size_t>(inner.restarts, 4);
  inner.max_iters = std::min<std::size_t>(inner.max_iters, 2000);
  std::vector<std::vector<double>> starts;
  starts.push_back({0, 0, 0, 0, 0, 0, 0, 0, std::numbers::pi / 2, 0});
  random::Rng rng(s.seed);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  for (int k = 0; k < 2; ++k) {
    std::vector<double> x(10);
    for (auto& v : x) v = u(rng);
    x[8] = std::numbers::pi / 2;
    starts.push_back(std::move(x));
  }
  optimize::SimplexOptions outer;
  outer.max_iters = outer_iters;
  outer.size_tol = 1e-3;
  outer.step = 0.3;
  const auto fam = maximize_holevo_family(two_use_family, starts, inner, s.optimizer, outer);
  const auto h0 = maximize_holevo(two_use_family(starts.front()), s.optimizer);
  r.trace = fam.holevo.trace;
  r.pass = std::abs(fam.holevo.chi - target) <= tolerance;
  r.report["target"] = target;
  r.report["results"] = {{"chi", fam.holevo.chi},
                         {"chi_uniform_phases_plus", h0.chi},
                         {"params", fam.params},
                         {"outer_iterations", fam.outer_iterations},
                         {"outer_converged", fam.outer_converged},
                         {"starts", starts.size()},
                         {"converged", fam.holevo.converged},
                         {"ensemble", superchan::json::ensemble_to_json(*fam.holevo.ensemble)}};
  r.report["pass"] = r.pass;
  return r;
}

inline ExperimentReport sdpp_classical(const ExperimentSettings& s, std::size_t samples = 100) {
  constexpr double chi_tol = 1e-4, independence_tol = 1e-10;
  auto r = detail::header("sdpp-classical", s,
                          "perfect transmission line for classical communication", chi_tol);
  const auto w = witness_side_channel(SupermapDescriptor::sdpp_f(), identity(2),
                                      partial_trace_channel({2, 2}, {1}), samples, s.seed,
                                      s.optimizer);
  r.pass = w.witnessed && std::abs(w.chi - 1.0) <= chi_tol &&
           w.max_choi_distance <= independence_tol;
  r.report["target"] = 1.0;
  r.report["results"] = {{"verdict", w.witnessed ? "side-channel witnessed" : "not witnessed"},
                         {"chi", w.chi},
                         {"samples", w.samples},
                         {"structured_tuples", w.structured},
                         {"max_choi_distance", w.max_choi_distance},
                         {"seed", w.seed}};
  r.report["pass"] = r.pass;
  return r;
}

inline ExperimentReport sdpp_quantum(const ExperimentSettings& s, std::size_t samples = 100) {
  constexpr double fid_tol = 1e-9;
  auto r = detail::header("sdpp-quantum", s, "perfectly transmit one qubit", fid_tol);
  const auto omega = detail::plus_state();
  const Channel decoder = sdpp_g_decoder();
  random::Rng rng(s.seed);
  double min_fid = 1.0;
  for (std::size_t n = 0; n < samples; ++n) {
    const CVector psi = random::pure_vector(rng, 2);
    const Channel n1 = random::channel(rng, 2), n2 = random::channel(rng, 2);
    const Channel g = compose(decoder, sdpp_g(n1, n2, omega, omega));
    const double fid = (psi.adjoint() * g(projector(psi)) * psi)(0, 0).real();
    min_fid = std::min(min_fid, fid);
  }
  const auto w = witness_side_channel(SupermapDescriptor::sdpp_g(omega, omega), identity(2),
                                      decoder, samples, s.seed, s.optimizer);
  r.pass = min_fid >= 1.0 - fid_tol && w.witnessed;
  r.report["target"] = 1.0;
  r.report["results"] = {{"min_fidelity", min_fid},
                         {"samples", samples},
                         {"verdict", w.witnessed ? "side-channel witnessed" : "not witnessed"},
                         {"chi", w.chi},
                         {"entanglement_fidelity", w.entanglement_fidelity.value_or(0.0)},
                         {"max_choi_distance", w.max_choi_distance}};
  r.report["pass"] = r.pass;
  return r;
}

inline ExperimentReport lemma_suite_experiment(const ExperimentSettings& s,
                                               std::size_t random_extensions = 10000) {
  auto r = detail::header("lemma-suite", s, "one has ||F|| <= 1", 1e-9);
  random::Rng rng(s.seed);
  std::uniform_int_distribution<std::size_t> kraus_count(1, 6);

  double max_norm = 0.0;
  for (std::size_t n = 0; n < random_extensions; ++n) {
    const std::size_t m = kraus_count(rng);
    const Channel base = random::channel(rng, 2, 2, m);
    const auto v = random::extension(rng, base, m + kraus_count(rng) - 1);
    max_norm = std::max(max_norm, operator_norm(interference_operator(v)));
  }

  double max_full_rank = 0.0;
  std::size_t full_rank_count = 0;
  while (full_rank_count < 100) {
    const Channel base = random::channel(rng, 2, 2, 4);
    if (choi_rank(base) != 4) continue;
    ++full_rank_count;
    const auto v = random::extension(rng, base, 4);
    max_full_rank = std::max(max_full_rank, operator_norm(interference_operator(v)));
  }

  double unitary_dev = 0.0;
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  for (int n = 0; n < 100; ++n) {
    const auto v = vacuum_extend(unitary_channel(random::unitary(rng, 2)),
                                 {std::polar(1.0, phase(rng))});
    unitary_dev = std::max(unitary_dev, std::abs(operator_norm(interference_operator(v)) - 1));
  }

  double composition_err = 0.0;
  for (int n = 0; n < 100; ++n) {
    const auto a = random::extension(rng, random::channel(rng, 2, 2, 2), 3);
    const auto b = random::extension(rng, random::channel(rng, 2, 2, 3), 3);
    const CMatrix diff = interference_operator(compose_extended(a, b)) -
                         interference_operator(a) * interference_operator(b);
    composition_err = std::max(composition_err, diff.cwiseAbs().maxCoeff());
  }

  const bool l2 = max_norm <= 1 + 1e-9;
  const bool l3 = max_full_rank < 1 - 1e-6;
  const bool unit = unitary_dev <= 1e-10;
  const bool comp_ok = composition_err <= 1e-12;
  r.pass = l2 && l3 && unit && comp_ok;
  r.report["results"] = {
      {"bound", {{"max_f_norm", max_norm}, {"samples", random_extensions}, {"pass", l2}}},
      {"strict_bound_full_rank",
       {{"max_f_norm", max_full_rank}, {"samples", full_rank_count}, {"pass", l3}}},
      {"unitary_attains_bound", {{"max_deviation", unitary_dev}, {"pass", unit}}},
      {"composition", {{"max_entry_error", composition_err}, {"pass", comp_ok}}}};
  r.report["pass"] = r.pass;
  return r;
}

inline ExperimentReport prop_suite(const ExperimentSettings& s) {
  auto r = detail::header("prop-suite", s,
                          "applying the channel twice in a row is the same as applying it once",
                          1e-10);
  random::Rng rng(s.seed);

  double p1 = 0.0;
  bool p1_certified = true;
  for (int n = 0; n < 20; ++n) {
    const auto psi0 = random::pure_state(rng, 2);
    const auto omega = random::mixed_state(rng, 2);
    const Channel ch = switch_place(identity(2), constant_channel(psi0, 2), omega);
    p1 = std::max(p1, constancy_residual(ch));
    p1_certified = certify_zero_capacity(ch) && p1_certified;
  }

  double p2 = 0.0;
  for (int n = 0; n < 20; ++n) {
    const auto rho0 = random::mixed_state(rng, 2);
    const auto omega = random::mixed_state(rng, 2);
    const auto ext = incoherent_extension(constant_channel(rho0, 2));
    const Channel ch = superposition_place(ext, ext, omega);
    const CMatrix diag_omega = omega.matrix().diagonal().asDiagonal();
    const Channel target = constant_channel(DensityMatrix(kron(rho0.matrix(), diag_omega)), 2);
    p2 = std::max(p2, choi_distance(ch, target));
  }

  bool iff = true, strong = true;
  std::size_t coherent = 0;
  for (int n = 0; n < 50; ++n) {
    const auto v = random::extension(rng, depolarizing(2), 4);
    const double f = operator_norm(interference_operator(v));
    const double res = idempotence_residual(v);
    iff = ((res <= 1e-9) == (f <= 1e-9)) && iff;
    if (f > 1e-3) {
      ++coherent;
      strong = res > 1e-4 && strong;
    }
  }
  const auto inc = incoherent_extension(depolarizing(2));
  const double inc_f = operator_norm(interference_operator(inc));
  const double inc_res = idempotence_residual(inc);
  const bool inc_ok = inc_f <= 1e-9 && inc_res <= 1e-9;

  const bool ok1 = p1 <= 1e-10 && p1_certified;
  const bool ok2 = p2 <= 1e-10;
  const bool ok3 = iff && strong && inc_ok;
  r.pass = ok1 && ok2 && ok3;
  r.report["results"] = {
      {"switch_identity_constant",
       {{"max_constancy_residual", p1}, {"certified", p1_certified}, {"pass", ok1}}},
      {"superposition_incoherent_constant", {{"max_choi_distance", p2}, {"pass", ok2}}},
      {"depolarizing_idempotence_iff_incoherent",
       {{"iff_holds", iff},
        {"coherent_samples", coherent},
        {"coherent_fail_idempotence", strong},
        {"incoherent_f_norm", inc_f},
        {"incoherent_residual", inc_res},
        {"pass", ok3}}}};
  r.report["pass"] = r.pass;
  return r;
}

struct Experiment {
  const char* name;
  std::function<ExperimentReport(const ExperimentSettings&)> run;
};

inline const std::vector<Experiment>& experiments() {
  static const std::vector<Experiment> registry{
      {"switch-depol", [](const auto& s) { return switch_depol(s); }},
      {"superpose-depol-1use", [](const auto& s) { return superpose_depol_1use(s); }},
      {"superpose-depol-2use", [](const auto& s) { return superpose_depol_2use(s); }},
      {"sdpp-classical", [](const auto& s) { return sdpp_classical(s); }},
      {"sdpp-quantum", [](const auto& s) { return sdpp_quantum(s); }},
      {"lemma-suite", [](const auto& s) { return lemma_suite_experiment(s); }},
      {"prop-suite", [](const auto& s) { return prop_suite(s); }},
  };
  return registry;
}

}  // namespace superchan::cli

#endif  // SUPERCHAN_TOOLS_EXPERIMENTS_HPP
