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

#ifndef DIRICHLET_IDENTITIES_HPP
#define DIRICHLET_IDENTITIES_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dirichlet/exact.hpp"
#include "dirichlet/jfun.hpp"
#include "dirichlet/report.hpp"

namespace dirichlet::identities {

/// Which evaluator supplies J(k) on the right-hand side of a theorem.
enum class JSource { quadrature, euler_series };

struct NumericOptions {
  int digits = 15;
  /// Absolute tolerance; when unset, 100x the summed error estimates of
  /// both sides, floored at 1e-10.
  std::optional<double> tol;
  JSource j_source = JSource::quadrature;
};

/// J(k) at integer k through the selected route.
EvalResult j_value(unsigned k, const NumericOptions& opt);

/// lambda(2m+1) = sum_{k=1}^{m} (-1)^{k-1} lambda(2m-2k+2) J(2k-1)
///                + (-1)^m beta(1) J(2m)
IdentityReport check_theorem1(unsigned m, const NumericOptions& opt = {});

/// The same identity with the J(2k-1) factor dropped from the sum. This
/// variant is wrong for m >= 2 and is kept to show that; `pass` keeps its
/// usual meaning (|lhs - rhs| <= tol).
IdentityReport check_theorem1_literal(unsigned m,
                                      const NumericOptions& opt = {});

/// beta(2m) = sum_{k=1}^{m} (-1)^{k-1} beta(2m-2k+1) J(2k-1)
IdentityReport check_theorem2(unsigned m, const NumericOptions& opt = {});

/// Closed form of J(2n-1) (odd) or J(2n) (even) against quadrature.
IdentityReport check_theorem4(unsigned n, bool odd,
                              const NumericOptions& opt = {});

/// Both closed-form identities for (pi/2)^{2m-1}/(2m-1)! and
/// (pi/2)^{2m}/(2m)!, checked in exact arithmetic.
std::pair<IdentityReport, IdentityReport> check_remark1(unsigned m);

/// Partial sum with `terms` terms of f_order (sine) or g_order (cosine):
/// sum_k trig((2k-1)x) / (2k-1)^order.
double fourier_partial(TrigKind kind, unsigned order, double x,
                       unsigned long terms);

/// Polynomial closed form of f_{2m+1}(x) (sine) or g_{2m}(x) (cosine),
/// valid for 0 <= x <= pi/2. Sine allows m = 0 (f_1 = beta(1)).
double fourier_closed(TrigKind kind, unsigned m, double x);

/// The same polynomial evaluated exactly at x = pi/2.
exact::PiPoly fourier_closed_at_half_pi(TrigKind kind, unsigned m);

/// Upper bound on sum_{k > terms} 1 / (2k-1)^order (order >= 2).
double fourier_tail_bound(unsigned order, unsigned long terms);

/// Partial sum of the order-2m+1 sine (eq_a3) or order-2m cosine (eq_a4)
/// series at x = x_eighths * pi / 8 against its closed polynomial.
/// tol defaults to the tail bound plus 1e-12.
IdentityReport check_fourier(TrigKind kind, unsigned m, unsigned x_eighths,
                             unsigned long terms,
                             std::optional<double> tol = {});

/// Base sine case: sum_k sin((2k-1)x)/(2k-1)^3 = lambda(2) x - beta(1) x^2/2
/// at x = x_index * (pi/2) / 15.
IdentityReport check_eq_a2(unsigned x_index, unsigned long terms);

/// Exact coefficient of J(q), q = 0..2m-1, in the expansion of beta(2m)
/// through W-sums.
std::vector<exact::PiPoly> collapse_coefficients(unsigned m);

/// Coefficients predicted by the Fourier closed forms at pi/2: zero for
/// even q and (-1)^{k-1} beta(2m-2k+1) for q = 2k-1.
std::vector<exact::PiPoly> expected_collapse_coefficients(unsigned m);

IdentityReport check_collapse(unsigned m);

/// Midpoint sums at each n of `grid` against quadrature at 1e-13. Report i
/// passes when its error is below that of report i-1 (and below
/// final_tol for the last one).
std::vector<IdentityReport> check_riemann_convergence(
    double s, std::span<const unsigned> grid, double final_tol);

}  // namespace dirichlet::identities

#endif  // DIRICHLET_IDENTITIES_HPP
