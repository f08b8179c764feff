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

#include "dirichlet/special.hpp"

#include <cmath>
#include <limits>

#include "dirichlet/errors.hpp"

namespace dirichlet {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::accelerated_series: return "accelerated_series";
    case Method::quadrature: return "quadrature";
    case Method::euler_series: return "euler_series";
    case Method::riemann_sum: return "riemann_sum";
  }
  return "unknown";
}

namespace special {

using exact::BigInt;
using exact::PiPoly;
using exact::Rational;

PiPoly lambda_even_closed(unsigned m) {
  if (m == 0) throw DomainError("lambda_even_closed: m must be >= 1");
  const auto bern = exact::shared_bernoulli_numbers(m + 1);
  BigInt two_pow = 1;
  two_pow <<= 2 * m;
  Rational c = Rational(two_pow - 1) * bern->values[m] /
               Rational(2 * exact::factorial(2 * m));
  if (m % 2 == 0) c = -c;
  return PiPoly::monomial(c, 2 * m);
}

PiPoly beta_odd_closed(unsigned m) {
  if (m == 0) throw DomainError("beta_odd_closed: m must be >= 1");
  const auto euler = exact::shared_euler_numbers(m);
  BigInt den = 2 * exact::factorial(2 * m - 2);
  den <<= 2 * m - 1;
  Rational c = euler->values[m - 1] / Rational(den);
  if (m % 2 == 0) c = -c;
  return PiPoly::monomial(c, 2 * m - 1);
}

unsigned accelerated_terms(int digits) {
  return static_cast<unsigned>(std::ceil(1.32 * digits)) + 4;
}

namespace {

Real inverse_power(const Real& base, const Real& s) {
  if (s == floor(s) && s <= 4096) {
    return 1 / pow(base, s.convert_to<int>());
  }
  return exp(-s * log(base));
}

// Relative truncation bound of the accelerator after n terms.
Real acceleration_bound(unsigned n) {
  return 2 / pow(3 + sqrt(Real(8)), static_cast<int>(n));
}

double relative_error_estimate(const Real& value, unsigned n) {
  const Real rounding = std::numeric_limits<Real>::epsilon() * (4 * n + 16);
  return (abs(value) * (acceleration_bound(n) + rounding)).convert_to<double>();
}

unsigned resolve_terms(int digits, unsigned terms) {
  require_digits(digits, 1);
  return terms != 0 ? terms : accelerated_terms(digits);
}

}  // namespace

Real alternating_power_sum(const Real& s, unsigned offset, unsigned stride,
                           unsigned n) {
  Real d = pow(3 + sqrt(Real(8)), static_cast<int>(n));
  d = (d + 1 / d) / 2;
  Real b = -1;
  Real c = -d;
  Real sum = 0;
  for (unsigned k = 0; k < n; ++k) {
    c = b - c;
    sum += c * inverse_power(Real(offset) + Real(stride) * k, s);
    b = Real(static_cast<long long>(k) + n) *
        (static_cast<long long>(k) - static_cast<long long>(n)) * b /
        ((Real(k) + Real(0.5)) * (k + 1));
  }
  return sum / d;
}

EvalResult lambda_numeric(const Real& s, int digits, unsigned terms) {
  if (!(s > 1)) throw DomainError("lambda(s) requires s > 1");
  const unsigned n = resolve_terms(digits, terms);
  const Real eta = alternating_power_sum(s, 1, 1, n);
  const Real zeta = eta / (1 - pow(Real(2), 1 - s));
  EvalResult r;
  r.value = (1 - pow(Real(2), -s)) * zeta;
  r.error_estimate = relative_error_estimate(r.value, n);
  r.method = Method::accelerated_series;
  r.work = n;
  return r;
}

EvalResult beta_numeric(const Real& s, int digits, unsigned terms) {
  if (!(s > 0)) throw DomainError("beta(s) requires s > 0");
  const unsigned n = resolve_terms(digits, terms);
  EvalResult r;
  r.value = alternating_power_sum(s, 1, 2, n);
  r.error_estimate = relative_error_estimate(r.value, n);
  r.method = Method::accelerated_series;
  r.work = n;
  return r;
}

}  // namespace special
}  // namespace dirichlet
