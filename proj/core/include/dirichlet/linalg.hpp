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

#ifndef DIRICHLET_LINALG_HPP
#define DIRICHLET_LINALG_HPP

#include <cstddef>
#include <vector>

#include "dirichlet/report.hpp"

namespace dirichlet::linalg {


/// n x n matrix with entry (i, j) = sin or cos of (2i-1)(2j-1) pi / (4n),
/// indices 1-based in the formula, 0-based in the accessor.
class OddGridMatrix {
 public:
  OddGridMatrix(std::size_t n, TrigKind kind);

  std::size_t size() const noexcept { return n_; }
  TrigKind kind() const noexcept { return kind_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  const std::vector<double>& entries() const noexcept { return entries_; }

 private:
  std::size_t n_;
  TrigKind kind_;
  std::vector<double> entries_;
};

/// Entry (i, j), 0-based: sin/cos((2i+1)(2j+1) pi / (4n)), with the angle
/// reduced modulo 2 pi in exact integer arithmetic first.
double odd_grid_entry(std::size_t n, TrigKind kind, std::size_t i,
                      std::size_t j);

OddGridMatrix build_matrix(std::size_t n, TrigKind kind);

/// Max-norm distance of M*M from (n/2) I.
double involution_defect(const OddGridMatrix& m);

/// Max-norm distance of M * ((2/n) M) from I.
double inverse_defect(const OddGridMatrix& m);

/// Checks M^2 = (n/2) I by direct multiplication.
IdentityReport check_involution(std::size_t n, TrigKind kind, double tol);

enum class TrigSum { lemma1_cos, lemma1_sin, lemma2_altcos };

/// Direct n-term sum of the chosen odd-frequency trig series.
double trig_sum_direct(TrigSum which, unsigned n, double x);

/// Closed form of the same sum. Throws PoleError where the closed form has
/// a pole (x = 0 mod pi for the Lemma-1 sums, x = pi/2 mod pi for the
/// alternating cosine sum).
double trig_sum_closed(TrigSum which, unsigned n, double x);

/// Direct sum vs closed form; pass iff |difference| <= n * 1e-13.
IdentityReport trig_sum_check(TrigSum which, unsigned n, double x);

/// Element k (1-based) of the periodic sequence sin/cos((2k-1)(2p-1)pi/(4n)).
double odd_grid_sequence(TrigKind kind, std::size_t n, std::size_t p,
                         std::size_t k);

/// Checks the reflection a_k = (-1)^{m+1} a_{2mn-(k-1)} (form 0) or the
/// shift a_k = (-1)^m a_{2mn+k} (form 1) for the sine sequence, and
/// b_k = (-1)^m b_{2mn-(k-1)} (form 0) or b_k = (-1)^m b_{2mn+k} (form 1)
/// for the cosine one. Params are {kind, n, m, k, p, form}, kind 0 = sine.
IdentityReport check_periodic(TrigKind kind, std::size_t n, std::size_t m,
                              std::size_t k, std::size_t p, int form);

/// sum_{k=1}^{terms} cos((2k-1)x) / (2k-1), for 0 < x < pi.
double log_tan_series(double x, unsigned terms);

/// -ln(tan(x/2)) / 2, the limit of log_tan_series.
double log_tan_closed(double x);

/// Cesaro mean of the partial sums S_1 .. S_terms. Its error decays like
/// 1/terms without the phase oscillation of the plain partial sums.
double log_tan_series_averaged(double x, unsigned terms);

/// Cesaro mean against the closed form, with tolerance 1.5 / (terms sin x)
/// from summation by parts. Params are {round(x * 1e6), terms}.
IdentityReport check_log_tan(double x, unsigned terms);

/// Taylor coefficients of csc(pi/2 + t), t^0 .. t^{2 k_max}, computed as
/// the exact reciprocal of the series of sin(pi/2 + t) built from the
/// derivative cycle of sin. Odd entries are zero.
std::vector<exact::Rational> csc_taylor_coefficients(unsigned k_max);

/// Coefficient of t^{2k} times (2k)! against (-1)^k E_{2k}, k = 0..k_max.
IdentityReport csc_taylor_check(unsigned k_max);

}  // namespace dirichlet::linalg

#endif  // DIRICHLET_LINALG_HPP
