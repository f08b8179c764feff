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

#include "dirichlet/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "dirichlet/errors.hpp"

namespace dirichlet::linalg {

namespace {

constexpr double kPi = std::numbers::pi;

// sin/cos of r * pi / (4n) for 0 <= r < 8n, folded into [0, pi/4] so the
// argument handed to libm is small.
double eval_reduced(TrigKind kind, std::uint64_t r, std::uint64_t n) {
  const std::uint64_t period = 8 * n;
  r %= period;
  // Work in units of pi/(4n): pi = 4n units, pi/2 = 2n units.
  double sign = 1.0;
  bool use_sin = kind == TrigKind::sine;
  if (r >= 4 * n) {  // x -> x - pi
    r -= 4 * n;
    sign = -sign;
  }
  if (r > 2 * n) {  // x -> pi - x
    r = 4 * n - r;
    if (!use_sin) sign = -sign;
  }
  if (r > n) {  // x -> pi/2 - x
    r = 2 * n - r;
    use_sin = !use_sin;
  }
  const double angle = static_cast<double>(r) * kPi / (4.0 * static_cast<double>(n));
  return sign * (use_sin ? std::sin(angle) : std::cos(angle));
}

void check_pole(TrigSum which, double x) {
  const bool lemma1 = which != TrigSum::lemma2_altcos;
  const double denom = lemma1 ? std::sin(x) : std::cos(x);
  if (std::fabs(denom) < 1e-12) {
    throw PoleError(std::string("trig sum closed form has a pole at x = ") +
                    format(x));
  }
}

IdentityId trig_id(TrigSum which) {
  switch (which) {
    case TrigSum::lemma1_cos: return IdentityId::lemma1_cos;
    case TrigSum::lemma1_sin: return IdentityId::lemma1_sin;
    case TrigSum::lemma2_altcos: return IdentityId::lemma2_altcos;
  }
  return IdentityId::lemma1_cos;
}

}  // namespace

double odd_grid_entry(std::size_t n, TrigKind kind, std::size_t i,
                      std::size_t j) {
  const std::uint64_t r = static_cast<std::uint64_t>(2 * i + 1) * (2 * j + 1);
  return eval_reduced(kind, r, n);
}

OddGridMatrix::OddGridMatrix(std::size_t n, TrigKind kind)
    : n_(n), kind_(kind), entries_(n * n) {
  if (n == 0) throw DomainError("OddGridMatrix requires n >= 1");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = odd_grid_entry(n, kind, i, j);
      entries_[i * n + j] = v;
      entries_[j * n + i] = v;
    }
  }
}

OddGridMatrix build_matrix(std::size_t n, TrigKind kind) {
  return OddGridMatrix(n, kind);
}

namespace {

double square_defect(const OddGridMatrix& m, double scale, double diagonal) {
  const std::size_t n = m.size();
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += m(i, k) * m(k, j);
      const double target = i == j ? diagonal : 0.0;
      worst = std::max(worst, std::fabs(scale * acc - target));
    }
  }
  return worst;
}

}  // namespace

double involution_defect(const OddGridMatrix& m) {
  return square_defect(m, 1.0, static_cast<double>(m.size()) / 2);
}

double inverse_defect(const OddGridMatrix& m) {
  return square_defect(m, 2.0 / static_cast<double>(m.size()), 1.0);
}

IdentityReport check_involution(std::size_t n, TrigKind kind, double tol) {
  const OddGridMatrix m = build_matrix(n, kind);
  IdentityReport r = numeric_report(
      kind == TrigKind::sine ? IdentityId::lemma3 : IdentityId::lemma4,
      {static_cast<std::int64_t>(n)}, involution_defect(m), 0.0, tol);
  r.note = "lhs = max|M^2 - (n/2) I|";
  return r;
}

double trig_sum_direct(TrigSum which, unsigned n, double x) {
  double sum = 0;
  for (unsigned k = 1; k <= n; ++k) {
    const double arg = (2.0 * k - 1) * x;
    switch (which) {
      case TrigSum::lemma1_cos: sum += std::cos(arg); break;
      case TrigSum::lemma1_sin: sum += std::sin(arg); break;
      case TrigSum::lemma2_altcos:
        sum += (k % 2 == 1 ? 1.0 : -1.0) * std::cos(arg);
        break;
    }
  }
  return sum;
}

double trig_sum_closed(TrigSum which, unsigned n, double x) {
  check_pole(which, x);
  switch (which) {
    case TrigSum::lemma1_cos:
      return 0.5 * std::sin(2.0 * n * x) / std::sin(x);
    case TrigSum::lemma1_sin: {
      const double s = std::sin(n * x);
      return s * s / std::sin(x);
    }
    case TrigSum::lemma2_altcos: {
      const double s = std::sin(n * (kPi - 2 * x) / 2);
      return s * s / std::cos(x);
    }
  }
  return 0.0;
}

IdentityReport trig_sum_check(TrigSum which, unsigned n, double x) {
  IdentityReport r = numeric_report(trig_id(which), {static_cast<std::int64_t>(n)},
                                    trig_sum_direct(which, n, x),
                                    trig_sum_closed(which, n, x), n * 1e-13);
  r.note = "x=" + format(x);
  return r;
}

double odd_grid_sequence(TrigKind kind, std::size_t n, std::size_t p,
                         std::size_t k) {
  const std::uint64_t r = static_cast<std::uint64_t>(2 * k - 1) * (2 * p - 1);
  return eval_reduced(kind, r, n);
}

IdentityReport check_periodic(TrigKind kind, std::size_t n, std::size_t m,
                              std::size_t k, std::size_t p, int form) {
  if (n == 0 || m == 0 || p == 0 || p > n || k == 0 || k > n) {
    throw DomainError("check_periodic requires n, m >= 1 and 1 <= k, p <= n");
  }
  if (form != 0 && form != 1) throw DomainError("check_periodic form must be 0 or 1");
  const std::size_t target = form == 0 ? 2 * m * n - (k - 1) : 2 * m * n + k;
  double sign = m % 2 == 0 ? 1.0 : -1.0;  // (-1)^m
  if (form == 0 && kind == TrigKind::sine) sign = -sign;
  const double lhs = odd_grid_sequence(kind, n, p, k);
  const double rhs = sign * odd_grid_sequence(kind, n, p, target);
  const std::int64_t kind_id = kind == TrigKind::sine ? 0 : 1;
  return numeric_report(
      IdentityId::periodic,
      {kind_id, static_cast<std::int64_t>(n), static_cast<std::int64_t>(m),
       static_cast<std::int64_t>(k), static_cast<std::int64_t>(p), form},
      lhs, rhs, 1e-13);
}

double log_tan_series(double x, unsigned terms) {
  if (!(x > 0 && x < kPi)) throw DomainError("log_tan_series requires 0 < x < pi");
  if (terms == 0) throw DomainError("log_tan_series requires terms >= 1");
  double sum = 0;
  for (unsigned k = terms; k >= 1; --k) {  // smallest terms first
    const double odd = 2.0 * k - 1;
    sum += std::cos(odd * x) / odd;
  }
  return sum;
}

double log_tan_closed(double x) {
  if (!(x > 0 && x < kPi)) throw DomainError("log_tan_closed requires 0 < x < pi");
  return -0.5 * std::log(std::tan(x / 2));
}

double log_tan_series_averaged(double x, unsigned terms) {
  if (!(x > 0 && x < kPi)) throw DomainError("log_tan_series requires 0 < x < pi");
  if (terms == 0) throw DomainError("log_tan_series requires terms >= 1");
  // (1/T) sum_{j<=T} S_j = sum_k (T - k + 1) / T * a_k
  const double t = terms;
  double sum = 0;
  for (unsigned k = terms; k >= 1; --k) {
    const double odd = 2.0 * k - 1;
    sum += (t - k + 1) / t * std::cos(odd * x) / odd;
  }
  return sum;
}

IdentityReport check_log_tan(double x, unsigned terms) {
  const double lhs = log_tan_series_averaged(x, terms);
  const double rhs = log_tan_closed(x);
  const double tol = 1.5 / (terms * std::sin(x)) + 1e-12;
  IdentityReport r = numeric_report(
      IdentityId::lemma7,
      {std::llround(x * 1e6), static_cast<std::int64_t>(terms)}, lhs, rhs, tol);
  r.note = "x=" + format(x);
  return r;
}

std::vector<exact::Rational> csc_taylor_coefficients(unsigned k_max) {
  const unsigned len = 2 * k_max + 1;
  // sin(pi/2 + t) = sum_j sin^{(j)}(pi/2) t^j / j!, derivative cycle
  // sin^{(j)}(pi/2) = 1, 0, -1, 0, ...
  std::vector<exact::Rational> series(len);
  for (unsigned j = 0; j < len; ++j) {
    static constexpr int cycle[4] = {1, 0, -1, 0};
    if (cycle[j % 4] != 0) {
      series[j] = exact::Rational(exact::BigInt(cycle[j % 4]), exact::factorial(j));
    }
  }
  // Reciprocal: out_0 = 1 / a_0, out_i = -(sum_{j=1}^{i} a_j out_{i-j}) / a_0.
  std::vector<exact::Rational> out(len);
  out[0] = exact::Rational(1) / series[0];
  for (unsigned i = 1; i < len; ++i) {
    exact::Rational acc;
    for (unsigned j = 1; j <= i; ++j) {
      if (!series[j].is_zero()) acc += series[j] * out[i - j];
    }
    out[i] = -acc / series[0];
  }
  return out;
}

IdentityReport csc_taylor_check(unsigned k_max) {
  if (k_max == 0) throw DomainError("csc_taylor_check requires k_max >= 1");
  const auto coeffs = csc_taylor_coefficients(k_max);
  const auto euler = exact::euler_numbers(k_max + 1);
  std::vector<exact::PiPoly> lhs;
  std::vector<exact::PiPoly> rhs;
  bool odd_vanish = true;
  for (unsigned k = 0; k <= k_max; ++k) {
    lhs.push_back(exact::PiPoly::constant(
        coeffs[2 * k] * exact::Rational(exact::factorial(2 * k))));
    const exact::Rational& e = euler.values[k];
    rhs.push_back(exact::PiPoly::constant(k % 2 == 0 ? e : -e));
    if (k < k_max && !coeffs[2 * k + 1].is_zero()) odd_vanish = false;
  }
  IdentityReport r = exact_report(IdentityId::lemma8,
                                  {static_cast<std::int64_t>(k_max)},
                                  std::move(lhs), std::move(rhs));
  if (!odd_vanish) {
    r.pass = false;
    r.note = "odd Taylor coefficient of csc at pi/2 is nonzero";
  }
  return r;
}

}  // namespace dirichlet::linalg
