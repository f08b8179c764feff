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

#include "dirichlet/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dirichlet/errors.hpp"
#include "dirichlet/special.hpp"

namespace dirichlet::identities {

using exact::PiPoly;
using exact::Rational;
using special::beta_odd_closed;
using special::lambda_even_closed;

namespace {

constexpr double kPi = std::numbers::pi;

// Running sum of products value * factor with first-order error tracking.
struct Side {
  Real value = 0;
  double error = 0;

  void add(const Real& factor, const Real& v, double factor_err, double v_err) {
    value += factor * v;
    error += (abs(factor) * v_err + abs(v) * factor_err).convert_to<double>();
  }
};

double resolve_tol(const NumericOptions& opt, const Side& lhs, const Side& rhs) {
  if (opt.tol) return *opt.tol;
  return std::max(1e-10, 100 * (lhs.error + rhs.error));
}

exact::Approx closed(const PiPoly& p, int digits) {
  return exact::pipoly_eval(p, digits);
}

std::int64_t as_param(unsigned v) { return static_cast<std::int64_t>(v); }

// Sum of products lambda(2m-2k+2) J(2k-1), k = 1..m, with alternating sign,
// as it appears in the lambda(odd) recurrence.
Side theorem1_rhs(unsigned m, const NumericOptions& opt, bool with_j) {
  Side rhs;
  for (unsigned k = 1; k <= m; ++k) {
    const auto lam = closed(lambda_even_closed(m - k + 1), opt.digits);
    const Real sign = k % 2 == 1 ? 1 : -1;
    if (with_j) {
      const EvalResult j = j_value(2 * k - 1, opt);
      rhs.add(sign * lam.value, j.value, lam.error_estimate, j.error_estimate);
    } else {
      rhs.add(sign, lam.value, 0.0, lam.error_estimate);
    }
  }
  const auto beta1 = closed(beta_odd_closed(1), opt.digits);
  const EvalResult j = j_value(2 * m, opt);
  const Real sign = m % 2 == 0 ? 1 : -1;
  rhs.add(sign * beta1.value, j.value, beta1.error_estimate, j.error_estimate);
  return rhs;
}

IdentityReport numeric(IdentityId id, std::vector<std::int64_t> params,
                       const Side& lhs, const Side& rhs, double tol) {
  return numeric_report(id, std::move(params), to_double(lhs.value),
                        to_double(rhs.value), tol);
}

}  // namespace

EvalResult j_value(unsigned k, const NumericOptions& opt) {
  if (opt.j_source == JSource::euler_series) {
    return jfun::j_euler_series(k, 1e-15);
  }
  return jfun::j_quadrature(static_cast<double>(k));
}

IdentityReport check_theorem1(unsigned m, const NumericOptions& opt) {
  if (m == 0) throw DomainError("check_theorem1 requires m >= 1");
  const EvalResult l = special::lambda_numeric(Real(2 * m + 1), opt.digits);
  const Side lhs{l.value, l.error_estimate};
  const Side rhs = theorem1_rhs(m, opt, true);
  return numeric(IdentityId::thm1, {as_param(m)}, lhs, rhs,
                 resolve_tol(opt, lhs, rhs));
}

IdentityReport check_theorem1_literal(unsigned m, const NumericOptions& opt) {
  if (m == 0) throw DomainError("check_theorem1_literal requires m >= 1");
  const EvalResult l = special::lambda_numeric(Real(2 * m + 1), opt.digits);
  const Side lhs{l.value, l.error_estimate};
  const Side rhs = theorem1_rhs(m, opt, false);
  IdentityReport r = numeric(IdentityId::thm1_literal, {as_param(m)}, lhs, rhs,
                             resolve_tol(opt, lhs, rhs));
  r.note = "sum without the J(2k-1) factor";
  return r;
}

IdentityReport check_theorem2(unsigned m, const NumericOptions& opt) {
  if (m == 0) throw DomainError("check_theorem2 requires m >= 1");
  const EvalResult b = special::beta_numeric(Real(2 * m), opt.digits);
  const Side lhs{b.value, b.error_estimate};
  Side rhs;
  for (unsigned k = 1; k <= m; ++k) {
    const auto beta = closed(beta_odd_closed(m - k + 1), opt.digits);
    const EvalResult j = j_value(2 * k - 1, opt);
    const Real sign = k % 2 == 1 ? 1 : -1;
    rhs.add(sign * beta.value, j.value, beta.error_estimate, j.error_estimate);
  }
  return numeric(IdentityId::thm2, {as_param(m)}, lhs, rhs,
                 resolve_tol(opt, lhs, rhs));
}

IdentityReport check_theorem4(unsigned n, bool odd, const NumericOptions& opt) {
  if (n == 0) throw DomainError("check_theorem4 requires n >= 1");
  const EvalResult c =
      odd ? jfun::j_closed_odd(n, opt.digits) : jfun::j_closed_even(n, opt.digits);
  const EvalResult q = j_value(odd ? 2 * n - 1 : 2 * n, opt);
  const Side lhs{c.value, c.error_estimate};
  const Side rhs{q.value, q.error_estimate};
  return numeric(odd ? IdentityId::thm4_odd : IdentityId::thm4_even,
                 {as_param(n)}, lhs, rhs, resolve_tol(opt, lhs, rhs));
}

std::pair<IdentityReport, IdentityReport> check_remark1(unsigned m) {
  if (m == 0) throw DomainError("check_remark1 requires m >= 1");
  const PiPoly quarter_pi = PiPoly::monomial(Rational(1) / Rational(4), 1);

  // (a): (pi/4) (pi/2)^{2m-1}/(2m-1)!
  //        = (-1)^{m-1} sum_{k<m} (-1)^k lambda(2m-2k) (pi/2)^{2k}/(2k)!
  PiPoly lhs_a = quarter_pi * PiPoly::half_pi_power_over_factorial(2 * m - 1);
  PiPoly rhs_a;
  for (unsigned k = 0; k < m; ++k) {
    PiPoly t = lambda_even_closed(m - k) * PiPoly::half_pi_power_over_factorial(2 * k);
    rhs_a += k % 2 == 0 ? t : -t;
  }
  if (m % 2 == 0) rhs_a = -rhs_a;

  // (b): (pi/4) (pi/2)^{2m}/(2m)! = (-1)^m [beta(2m+1)
  //        - sum_{k<m} (-1)^k lambda(2m-2k) (pi/2)^{2k+1}/(2k+1)!]
  PiPoly lhs_b = quarter_pi * PiPoly::half_pi_power_over_factorial(2 * m);
  PiPoly rhs_b = beta_odd_closed(m + 1);
  for (unsigned k = 0; k < m; ++k) {
    PiPoly t =
        lambda_even_closed(m - k) * PiPoly::half_pi_power_over_factorial(2 * k + 1);
    rhs_b -= k % 2 == 0 ? t : -t;
  }
  if (m % 2 == 1) rhs_b = -rhs_b;

  return {exact_report(IdentityId::remark1_a, {as_param(m)}, std::move(lhs_a),
                       std::move(rhs_a)),
          exact_report(IdentityId::remark1_b, {as_param(m)}, std::move(lhs_b),
                       std::move(rhs_b))};
}

// --- Fourier partial sums ----------------------------------------------------

double fourier_partial(TrigKind kind, unsigned order, double x,
                       unsigned long terms) {
  if (order < 2) throw DomainError("fourier_partial requires order >= 2");
  if (terms == 0) throw DomainError("fourier_partial requires terms >= 1");
  double sum = 0;
  for (unsigned long k = terms; k >= 1; --k) {  // smallest terms first
    const double odd = 2.0 * static_cast<double>(k) - 1;
    const double t = kind == TrigKind::sine ? std::sin(odd * x) : std::cos(odd * x);
    sum += t / std::pow(odd, static_cast<int>(order));
  }
  return sum;
}

namespace {

// Coefficient list c_j of the closed polynomial sum_j c_j x^j / j!, with
// c_j a PiPoly constant (lambda or beta(1) times a sign).
std::vector<std::pair<unsigned, PiPoly>> fourier_poly(TrigKind kind, unsigned m) {
  std::vector<std::pair<unsigned, PiPoly>> out;
  const unsigned shift = kind == TrigKind::sine ? 0 : 1;
  for (unsigned k = 1; k <= m; ++k) {
    PiPoly c = lambda_even_closed(m - k + 1);
    if (k % 2 == 0) c = -c;
    out.emplace_back(2 * k - 1 - shift, std::move(c));
  }
  PiPoly b = beta_odd_closed(1);
  if (m % 2 == 1) b = -b;
  out.emplace_back(2 * m - shift, std::move(b));
  return out;
}

void check_fourier_args(TrigKind kind, unsigned m, double x) {
  if (m == 0 && kind == TrigKind::cosine) {
    throw DomainError("fourier_closed(cosine) requires m >= 1");
  }
  if (!(x >= 0 && x <= kPi / 2 + 1e-15)) {
    throw DomainError("fourier_closed requires 0 <= x <= pi/2");
  }
}

}  // namespace

double fourier_closed(TrigKind kind, unsigned m, double x) {
  check_fourier_args(kind, m, x);
  double sum = 0;
  for (const auto& [power, c] : fourier_poly(kind, m)) {
    double term = to_double(exact::pipoly_eval(c, kMinDigits).value);
    for (unsigned j = 1; j <= power; ++j) term *= x / j;
    sum += term;
  }
  return sum;
}

PiPoly fourier_closed_at_half_pi(TrigKind kind, unsigned m) {
  check_fourier_args(kind, m, 0.0);
  PiPoly sum;
  for (const auto& [power, c] : fourier_poly(kind, m)) {
    sum += c * PiPoly::half_pi_power_over_factorial(power);
  }
  return sum;
}

double fourier_tail_bound(unsigned order, unsigned long terms) {
  if (order < 2) throw DomainError("fourier_tail_bound requires order >= 2");
  const double base = 2.0 * static_cast<double>(terms) - 1;
  return 1.0 / (2.0 * (order - 1) * std::pow(base, static_cast<int>(order - 1)));
}

IdentityReport check_fourier(TrigKind kind, unsigned m, unsigned x_eighths,
                             unsigned long terms, std::optional<double> tol) {
  if (m == 0) throw DomainError("check_fourier requires m >= 1");
  const double x = x_eighths * kPi / 8;
  const unsigned order = kind == TrigKind::sine ? 2 * m + 1 : 2 * m;
  const double bound = tol ? *tol : fourier_tail_bound(order, terms) + 1e-12;
  IdentityReport r = numeric_report(
      kind == TrigKind::sine ? IdentityId::eq_a3 : IdentityId::eq_a4,
      {as_param(m), as_param(x_eighths), static_cast<std::int64_t>(terms)},
      fourier_partial(kind, order, x, terms), fourier_closed(kind, m, x), bound);
  r.note = "x=" + std::to_string(x_eighths) + "pi/8";
  return r;
}

IdentityReport check_eq_a2(unsigned x_index, unsigned long terms) {
  if (x_index > 15) throw DomainError("check_eq_a2 requires x_index <= 15");
  const double x = x_index * (kPi / 2) / 15;
  const double lam2 = to_double(exact::pipoly_eval(lambda_even_closed(1), kMinDigits).value);
  const double rhs = lam2 * x - (kPi / 4) * x * x / 2;
  return numeric_report(IdentityId::eq_a2,
                        {as_param(x_index), static_cast<std::int64_t>(terms)},
                        fourier_partial(TrigKind::sine, 3, x, terms), rhs,
                        fourier_tail_bound(3, terms) + 1e-12);
}

// --- coefficient collapse ----------------------------------------------------

std::vector<PiPoly> collapse_coefficients(unsigned m) {
  if (m == 0) throw DomainError("collapse_coefficients requires m >= 1");
  std::vector<PiPoly> coeff(2 * m);
  auto absorb = [&coeff](const PiPoly& factor, unsigned order) {
    const jfun::WExpansion w = jfun::w_expansion(order);
    for (unsigned q = 0; q <= order; ++q) coeff[q] += factor * w.coefficients[q];
  };
  // beta(2m) = sum_k (-1)^{k-1} lambda(2m-2k+2) W(2k-2) + (-1)^m beta(1) W(2m-1)
  for (unsigned k = 1; k <= m; ++k) {
    PiPoly f = lambda_even_closed(m - k + 1);
    absorb(k % 2 == 1 ? f : -f, 2 * k - 2);
  }
  PiPoly b = beta_odd_closed(1);
  absorb(m % 2 == 0 ? b : -b, 2 * m - 1);
  return coeff;
}

std::vector<PiPoly> expected_collapse_coefficients(unsigned m) {
  if (m == 0) throw DomainError("expected_collapse_coefficients requires m >= 1");
  std::vector<PiPoly> out(2 * m);
  for (unsigned k = 1; k <= m; ++k) {
    PiPoly even = fourier_closed_at_half_pi(TrigKind::cosine, m - k + 1);
    PiPoly odd = fourier_closed_at_half_pi(TrigKind::sine, m - k);
    if (k % 2 == 0) {
      even = -even;
      odd = -odd;
    }
    out[2 * k - 2] = std::move(even);
    out[2 * k - 1] = std::move(odd);
  }
  return out;
}

IdentityReport check_collapse(unsigned m) {
  std::vector<PiPoly> expected = expected_collapse_coefficients(m);
  // The Fourier values at pi/2 must themselves be 0 and +-beta(odd).
  std::string defect;
  for (unsigned k = 1; k <= m; ++k) {
    if (!expected[2 * k - 2].is_zero()) {
      defect = "g_" + std::to_string(2 * (m - k + 1)) + "(pi/2) != 0";
    }
    PiPoly b = beta_odd_closed(m - k + 1);
    if (k % 2 == 0) b = -b;
    if (expected[2 * k - 1] != b) {
      defect = "f_" + std::to_string(2 * (m - k) + 1) + "(pi/2) != beta";
    }
  }
  IdentityReport r = exact_report(IdentityId::collapse, {as_param(m)},
                                  collapse_coefficients(m), std::move(expected));
  if (!defect.empty()) {
    r.pass = false;
    r.note = defect;
  }
  return r;
}

// --- Riemann sums ------------------------------------------------------------

std::vector<IdentityReport> check_riemann_convergence(
    double s, std::span<const unsigned> grid, double final_tol) {
  jfun::QuadratureConfig cfg;
  cfg.target_abs_tol = 1e-13;
  const double reference = jfun::j_quadrature(s, cfg).approx();
  const auto s_milli = static_cast<std::int64_t>(std::llround(s * 1000));
  std::vector<IdentityReport> out;
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const unsigned n = grid[i];
    const bool last = i + 1 == grid.size();
    const double approx = jfun::j_riemann_sum(s, n);
    const double err = std::fabs(approx - reference);
    // Each step must improve on the previous grid; the last must also
    // land under final_tol.
    const double tol = last ? std::min(previous, final_tol) : previous;
    IdentityReport r = numeric_report(IdentityId::lemma5,
                                      {s_milli, static_cast<std::int64_t>(n)},
                                      approx, reference, tol);
    r.pass = err < tol;
    r.note = "s=" + format(s, 6) + "; tolerance = previous error";
    out.push_back(std::move(r));
    previous = err;
  }
  return out;
}

}  // namespace dirichlet::identities
