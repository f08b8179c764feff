/*
Copyright 2026 The dirichlet-j Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef DIRICHLET_JFUN_HPP
#define DIRICHLET_JFUN_HPP

#include <cstddef>
#include <vector>

#include "dirichlet/exact.hpp"
#include "dirichlet/special.hpp"

// J(s) = 2 / (pi Gamma(s+1)) * integral_0^{pi/2} x^s / sin(x) dx, s > 0.
//
// Four independent routes are provided: tanh-sinh quadrature of the
// integral, the Euler-number series at integer order, the midpoint Riemann
// sum, and the closed combinations of beta(even) and lambda(odd).

namespace dirichlet::jfun {

struct QuadratureConfig {
  double target_abs_tol = 1e-13;
  /// When positive, the target becomes max(abs, rel * |J|).
  double target_rel_tol = 0.0;
  int max_level = 12;  // at most 20 halvings of the step

  void validate() const;
};

/// Integrand x^s / sin(x), continuously extended at x = 0.
double integrand(double s, double x);

/// Gamma(s + 1); exact factorial for integral s.
double gamma_plus_one(double s);

EvalResult j_quadrature(double s, const QuadratureConfig& cfg = {});

struct EulerSeriesConfig {
  /// Largest Euler index the series may request (E_{2k} with 2k <= this).
  std::size_t max_euler_index = 4000;
};

/// J(n) from sum_k (-1)^k E_{2k} (pi/2)^{n+2k} / (n+2k+1)!. The slowly
/// decaying remainder is summed in closed form from the asymptotic size of
/// |E_{2k}|; see jfun.cpp.
EvalResult j_euler_series(unsigned n, double abs_tol,
                          const EulerSeriesConfig& cfg = {});

/// Term k of the series above (positive for every k).
Real euler_series_term(unsigned n, unsigned k);

/// Upper bound 4 (pi/2)^n / pi * (2k)! / (n+2k+1)! on term k.
Real euler_series_term_bound(unsigned n, unsigned k);

/// Midpoint sum (1 / (Gamma(s+1) n)) sum_{p=1}^{n} f(x_p) on the grid
/// x_p = (2p-1) pi / (4n). Diagnostic only; no error estimate.
double j_riemann_sum(double s, unsigned n);

/// J(2n-1) = (4/pi) (-1)^{n-1} sum_{k<n} (-1)^k beta(2n-2k) (pi/2)^{2k}/(2k)!
EvalResult j_closed_odd(unsigned n, int digits);

/// J(2n) = (4/pi) (-1)^n [lambda(2n+1)
///          - sum_{k<n} (-1)^k beta(2n-2k) (pi/2)^{2k+1}/(2k+1)!]
EvalResult j_closed_even(unsigned n, int digits);

/// Formal expansion W(m) = sum_{k=0}^{m} coefficients[k] * J(k).
/// W and J(0) diverge; this only carries exact coefficients.
struct WExpansion {
  unsigned order = 0;
  std::vector<exact::PiPoly> coefficients;
};

WExpansion w_expansion(unsigned m);

}  // namespace dirichlet::jfun

#endif  // DIRICHLET_JFUN_HPP
