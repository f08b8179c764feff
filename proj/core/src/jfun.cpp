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

#include "dirichlet/jfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

#include "dirichlet/errors.hpp"

namespace dirichlet::jfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_integral(double s) { return s == std::floor(s); }

// x - sin(x) without cancellation for small x.
double x_minus_sin(double x) {
  if (std::fabs(x) >= 0.5) return x - std::sin(x);
  const double x2 = x * x;
  double term = x * x2 / 6;
  double sum = term;
  for (int k = 2; std::fabs(term) > 1e-18 * std::fabs(sum); ++k) {
    term *= -x2 / ((2.0 * k) * (2.0 * k + 1));
    sum += term;
  }
  return sum;
}

// x^{s-1} (x / sin(x) - 1): the integrand with its x^{s-1} singular part
// removed. Smooth at both ends for every s > 0.
double regular_part(double s, double x) {
  if (x <= 0) return 0.0;
  if (x < 1e-4) {
    // x / sin(x) - 1 = x^2/6 + 7 x^4/360 + O(x^6)
    return std::exp((s + 1) * std::log(x)) * (1.0 / 6 + 7 * x * x / 360);
  }
  return std::exp((s - 1) * std::log(x)) * (x_minus_sin(x) / std::sin(x));
}

// Tanh-sinh nodes on [0, pi/2]. For t >= 0 the abscissas are pi/2 - d and
// d, where d = (pi/2) / (1 + exp(2u)), u = (pi/2) sinh(t), and both share
// the weight dx/dt.
struct Node {
  double offset;  // d
  double weight;
};

constexpr double kTMax = 6.5;
constexpr int kCachedLevels = 16;

Node make_node(double t) {
  const double u = kHalfPi * std::sinh(t);
  const double e = std::exp(-2 * u);
  Node n;
  n.offset = kHalfPi * e / (1 + e);
  n.weight = (kPi * kPi / 2) * std::cosh(t) * e / ((1 + e) * (1 + e));
  return n;
}

// Nodes first used at `level`: t = k h for all k >= 1 at level 0, odd k
// above that; h = 2^-level.
std::vector<Node> build_level(int level) {
  const double h = std::ldexp(1.0, -level);
  const int step = level == 0 ? 1 : 2;
  std::vector<Node> nodes;
  for (int k = 1; k * h <= kTMax; k += step) {
    Node n = make_node(k * h);
    if (n.offset == 0 || n.weight == 0) break;
    nodes.push_back(n);
  }
  return nodes;
}

const std::vector<Node>& level_nodes(int level) {
  static std::array<std::once_flag, kCachedLevels> flags;
  static std::array<std::vector<Node>, kCachedLevels> cache;
  std::call_once(flags[level], [level] { cache[level] = build_level(level); });
  return cache[level];
}

Real half_pi_real() { return pi() / 2; }

}  // namespace

void QuadratureConfig::validate() const {
  if (!(target_abs_tol > 0)) throw DomainError("target_abs_tol must be > 0");
  if (!(target_rel_tol >= 0)) throw DomainError("target_rel_tol must be >= 0");
  if (max_level < 1 || max_level > 20) {
    throw DomainError("max_level must lie in [1, 20]");
  }
}

double integrand(double s, double x) {
  if (x == 0) {
    if (s == 1) return 1.0;
    return s > 1 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::exp(s * std::log(x) - std::log(std::sin(x)));
}

double gamma_plus_one(double s) {
  if (is_integral(s) && s >= 0 && s <= 170) {
    return exact::Rational(exact::factorial(static_cast<unsigned>(s)))
        .to_double();
  }
  return std::tgamma(s + 1);
}

EvalResult j_quadrature(double s, const QuadratureConfig& cfg) {
  if (!(s > 0)) throw DomainError("J(s) requires s > 0");
  cfg.validate();

  // integral_0^{pi/2} x^s / sin x dx = (pi/2)^s / s + integral of
  // regular_part; scale maps that integral onto J.
  const double scale = 2 / (kPi * gamma_plus_one(s));
  const double singular = std::pow(kHalfPi, s) / s;

  std::uint64_t evaluations = 1;
  double sum = regular_part(s, kPi / 4) * (kPi * kPi / 8);  // t = 0 node
  double previous = 0;
  double diff = std::numeric_limits<double>::infinity();
  double achieved = diff;
  double target = cfg.target_abs_tol;
  for (int level = 0; level <= cfg.max_level; ++level) {
    std::vector<Node> local;
    const std::vector<Node>* nodes = nullptr;
    if (level < kCachedLevels) {
      nodes = &level_nodes(level);
    } else {
      local = build_level(level);
      nodes = &local;
    }
    for (const Node& n : *nodes) {
      sum += n.weight *
             (regular_part(s, n.offset) + regular_part(s, kHalfPi - n.offset));
    }
    evaluations += 2 * nodes->size();

    const double h = std::ldexp(1.0, -level);
    const double current = scale * (singular + h * sum);
    if (level > 0) diff = std::fabs(current - previous);
    previous = current;

    const double floor = 16 * kEps * std::fabs(current);
    target = std::max(cfg.target_abs_tol, cfg.target_rel_tol * std::fabs(current));
    achieved = std::max(diff, floor);
    if (level >= 3 && diff < target / 2) {
      if (achieved > target) break;
      EvalResult r;
      r.value = current;
      r.error_estimate = achieved;
      r.method = Method::quadrature;
      r.work = evaluations;
      return r;
    }
  }
  throw ConvergenceError("J(" + format(s) + "): quadrature did not reach " +
                             format(target, 3) + " by level " +
                             std::to_string(cfg.max_level),
                         s, achieved);
}

// --- Euler-number series ---------------------------------------------------
//
// With |E_{2k}| = 2^{2k+2} (2k)! beta(2k+1) / pi^{2k+1}, term k equals
//   C r_k beta(2k+1),  C = (4/pi)(pi/2)^n,  r_k = (2k)! / (n+2k+1)!,
// so the terms decay only like k^{-(n+1)}. Past index K the remainder is
// C sum_{k>=K} r_k beta(2k+1), and since 1 - 3^{-(2k+1)} <= beta(2k+1) <= 1
// it is pinned by T(K) = sum_{k>=K} r_k. Writing r_k as a Beta integral,
//   T(K) = (1/n!) int_0^1 x^{2K} (1-x)^{n-1} / (1+x) dx
//        = (1/n!) sum_{i>=0} 2^{-(i+1)} (2K)! (n+i-1)! / (2K+n+i)!,
// a positive series with ratio below 1/2.

namespace {

Real remainder_sum(unsigned n, unsigned K) {
  Real term = Real(1) / (2 * n);
  for (unsigned j = 1; j <= n; ++j) term /= Real(2 * K + j);
  Real sum = 0;
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (unsigned i = 0;; ++i) {
    sum += term;
    if (term <= eps * sum) break;
    term *= Real(n + i) / (2 * Real(2 * K + n + i + 1));
  }
  return sum;
}

}  // namespace

Real euler_series_term(unsigned n, unsigned k) {
  const auto table = exact::shared_euler_numbers(k + 1);
  exact::Rational e = table->values[k];
  if (e.sign() < 0) e = -e;
  const exact::Rational ratio = e / exact::Rational(exact::factorial(n + 2 * k + 1));
  return ratio.to_real() * pow(half_pi_real(), static_cast<int>(n + 2 * k));
}

Real euler_series_term_bound(unsigned n, unsigned k) {
  const Real c = 4 / pi() * pow(half_pi_real(), static_cast<int>(n));
  return c * exact::Rational(exact::factorial(2 * k),
                             exact::factorial(n + 2 * k + 1))
                 .to_real();
}

EvalResult j_euler_series(unsigned n, double abs_tol,
                          const EulerSeriesConfig& cfg) {
  if (n == 0) throw DomainError("j_euler_series requires n >= 1");
  if (!(abs_tol > 0)) throw DomainError("j_euler_series requires abs_tol > 0");

  const Real c = 4 / pi() * pow(half_pi_real(), static_cast<int>(n));
  const Real eps = std::numeric_limits<Real>::epsilon();
  const std::size_t max_k = cfg.max_euler_index / 2;

  Real partial = 0;
  for (unsigned K = 0; K <= max_k; ++K) {
    if (K > 0) {
      const Real tail = c * remainder_sum(n, K);
      const Real third = pow(Real(3), -static_cast<int>(2 * K + 1));
      const Real residual = tail * third / 2;
      const Real rounding = eps * (K + 8) * (partial + tail);
      if (residual + rounding <= abs_tol / 4) {
        EvalResult r;
        r.value = partial + tail * (1 - third / 2);
        r.error_estimate = (residual + rounding).convert_to<double>();
        r.method = Method::euler_series;
        r.work = K;
        return r;
      }
      if (rounding > abs_tol / 4) break;  // tolerance below working precision
    }
    if (K < max_k) partial += euler_series_term(n, K);
  }
  throw ConvergenceError("J(" + std::to_string(n) + "): Euler series cannot reach " +
                             format(abs_tol, 3) + " within E_" +
                             std::to_string(cfg.max_euler_index),
                         n, abs_tol);
}

double j_riemann_sum(double s, unsigned n) {
  if (!(s > 0)) throw DomainError("J(s) requires s > 0");
  if (n == 0) throw DomainError("j_riemann_sum requires n >= 1");
  double sum = 0;
  const double step = kPi / (4.0 * n);
  for (unsigned p = 1; p <= n; ++p) sum += integrand(s, (2.0 * p - 1) * step);
  return sum / (gamma_plus_one(s) * n);
}

// --- closed combinations ---------------------------------------------------

namespace {

struct Accumulator {
  Real value = 0;
  double error = 0;
  std::uint64_t work = 0;

  void add(const Real& coeff, const EvalResult& r) {
    value += coeff * r.value;
    error += (abs(coeff) * r.error_estimate).convert_to<double>();
    work += r.work;
  }
  void add(const Real& coeff, const exact::Approx& a) {
    value += coeff * a.value;
    error += (abs(coeff) * a.error_estimate).convert_to<double>();
  }
};

EvalResult finish(const Accumulator& acc, int sign) {
  const Real scale = 4 / pi();
  EvalResult r;
  r.value = sign * scale * acc.value;
  r.error_estimate = (scale * acc.error).convert_to<double>() +
                     (abs(r.value) * std::numeric_limits<Real>::epsilon() * 16)
                         .convert_to<double>();
  r.method = Method::closed_form;
  r.work = acc.work;
  return r;
}

}  // namespace

EvalResult j_closed_odd(unsigned n, int digits) {
  if (n == 0) throw DomainError("j_closed_odd requires n >= 1");
  require_digits(digits);
  Accumulator acc;
  for (unsigned k = 0; k < n; ++k) {
    const Real factor =
        exact::pipoly_eval(exact::PiPoly::half_pi_power_over_factorial(2 * k),
                           kMaxDigits)
            .value;
    acc.add(k % 2 == 0 ? factor : Real(-factor),
            special::beta_numeric(Real(2 * (n - k)), digits));
  }
  return finish(acc, n % 2 == 1 ? 1 : -1);
}

EvalResult j_closed_even(unsigned n, int digits) {
  if (n == 0) throw DomainError("j_closed_even requires n >= 1");
  require_digits(digits);
  Accumulator acc;
  acc.add(Real(1), special::lambda_numeric(Real(2 * n + 1), digits));
  for (unsigned k = 0; k < n; ++k) {
    const Real factor =
        exact::pipoly_eval(
            exact::PiPoly::half_pi_power_over_factorial(2 * k + 1), kMaxDigits)
            .value;
    acc.add(k % 2 == 0 ? Real(-factor) : factor,
            special::beta_numeric(Real(2 * (n - k)), digits));
  }
  return finish(acc, n % 2 == 0 ? 1 : -1);
}

WExpansion w_expansion(unsigned m) {
  WExpansion w;
  w.order = m;
  w.coefficients.reserve(m + 1);
  for (unsigned k = 0; k <= m; ++k) {
    exact::PiPoly c = exact::PiPoly::half_pi_power_over_factorial(m - k);
    if (k % 2 == 1) c = -c;
    w.coefficients.push_back(std::move(c));
  }
  return w;
}

}  // namespace dirichlet::jfun
