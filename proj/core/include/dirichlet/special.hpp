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

#ifndef DIRICHLET_SPECIAL_HPP
#define DIRICHLET_SPECIAL_HPP

#include <cstdint>
#include <string_view>

#include "dirichlet/exact.hpp"
#include "dirichlet/real.hpp"

namespace dirichlet {

enum class Method {
  closed_form,
  accelerated_series,
  quadrature,
  euler_series,
  riemann_sum,
};

std::string_view to_string(Method m);

/// Outcome of a numeric evaluation. `work` counts series terms or
/// quadrature nodes and is zero only for closed forms.
struct EvalResult {
  Real value;
  double error_estimate = 0.0;
  Method method = Method::closed_form;
  std::uint64_t work = 0;

  double approx() const { return to_double(value); }
};

namespace special {

/// lambda(2m) = (2^{2m}-1) (-1)^{m-1} B_{2m} pi^{2m} / (2 (2m)!), m >= 1.
exact::PiPoly lambda_even_closed(unsigned m);

/// beta(2m-1) = (-1)^{m-1} E_{2m-2} / (2 (2m-2)!) (pi/2)^{2m-1}, m >= 1.
exact::PiPoly beta_odd_closed(unsigned m);

/// Number of terms the alternating-series accelerator uses for `digits`.
unsigned accelerated_terms(int digits);

/// Dirichlet lambda for real s > 1 as (1 - 2^{-s}) eta(s) / (1 - 2^{1-s}).
/// `terms` overrides the accelerator length (0 = derived from digits).
EvalResult lambda_numeric(const Real& s, int digits, unsigned terms = 0);

/// Dirichlet beta for real s > 0.
EvalResult beta_numeric(const Real& s, int digits, unsigned terms = 0);

/// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k
/// with a_k = (offset + stride*k)^{-s}. Relative error <= 2 / (3+sqrt 8)^n
/// for these completely monotone sequences.
Real alternating_power_sum(const Real& s, unsigned offset, unsigned stride,
                           unsigned n);

}  // namespace special
}  // namespace dirichlet

#endif  // DIRICHLET_SPECIAL_HPP
