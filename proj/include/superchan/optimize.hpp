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

// Thin RAII wrapper over the GSL Nelder-Mead simplex minimizer.

#ifndef SUPERCHAN_OPTIMIZE_HPP
#define SUPERCHAN_OPTIMIZE_HPP

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <vector>

namespace superchan::optimize {

using Objective = std::function<double(std::span<const double>)>;

struct SimplexOptions {
  std::size_t max_iters = 5000;
  double size_tol = 1e-6;  // stop when the simplex characteristic size drops below
  double step = 0.5;       // initial simplex edge length
};

struct SimplexResult {
  std::vector<double> x;
  double value = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> trace;  // best value after each iteration
};

namespace detail {

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

inline double trampoline(const gsl_vector* v, void* params) {
  const auto& f = *static_cast<const Objective*>(params);
  const double value = f(std::span<const double>(v->data, v->size));
  return std::isfinite(value) ? value : std::numeric_limits<double>::max();
}

// GSL's default handler aborts the process; errors are reported through
// status codes instead.
inline void disable_gsl_abort() {
  static const bool once = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)once;
}

}  // namespace detail

/// Minimizes `f` from `x0` with nmsimplex2.
inline SimplexResult nelder_mead(const Objective& f, std::span<const double> x0,
                                 const SimplexOptions& opt = {}) {
  detail::disable_gsl_abort();
  SimplexResult out;
  const std::size_t n = x0.size();
  out.x.assign(x0.begin(), x0.end());
  if (n == 0) {
    out.value = f(out.x);
    out.converged = true;
    return out;
  }

  std::unique_ptr<gsl_vector, detail::VectorDeleter> x(gsl_vector_alloc(n));
  std::unique_ptr<gsl_vector, detail::VectorDeleter> step(gsl_vector_alloc(n));
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x.get(), i, x0[i]);
  gsl_vector_set_all(step.get(), opt.step);

  std::unique_ptr<gsl_multimin_fminimizer, detail::MinimizerDeleter> m(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  gsl_multimin_function fn;
  fn.n = n;
  fn.f = &detail::trampoline;
  fn.params = const_cast<Objective*>(&f);
  gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), step.get());

  for (std::size_t it = 0; it < opt.max_iters; ++it) {
    const int status = gsl_multimin_fminimizer_iterate(m.get());
    ++out.iterations;
    out.trace.push_back(m->fval);
    if (status != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), opt.size_tol) ==
        GSL_SUCCESS) {
      out.converged = true;
      break;
    }
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(m.get());
  for (std::size_t i = 0; i < n; ++i) out.x[i] = gsl_vector_get(best, i);
  out.value = gsl_multimin_fminimizer_minimum(m.get());
  return out;
}

}  // namespace superchan::optimize

#endif  // SUPERCHAN_OPTIMIZE_HPP
