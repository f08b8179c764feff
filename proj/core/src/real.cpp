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

#include "dirichlet/real.hpp"

#include <cstdio>
#include <limits>
#include <string>

#include "dirichlet/errors.hpp"

namespace dirichlet {

namespace {

// arctan(1/x) = sum_k (-1)^k / ((2k+1) x^{2k+1}) for integer x > 1.
Real arctan_inverse(unsigned x) {
  const Real x2 = Real(x) * x;
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real power = Real(1) / x;
  Real sum = power;
  for (unsigned k = 1;; ++k) {
    power /= x2;
    Real term = power / (2 * k + 1);
    if (term < eps * sum) break;
    sum += (k % 2 == 1) ? -term : term;
  }
  return sum;
}

}  // namespace

void require_digits(int digits, int min_digits) {
  if (digits < min_digits || digits > kMaxDigits) {
    throw DomainError("digits must lie in [" + std::to_string(min_digits) +
                      ", " + std::to_string(kMaxDigits) + "], got " +
                      std::to_string(digits));
  }
}

const Real& pi() {
  // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
  static const Real value = 16 * arctan_inverse(5) - 4 * arctan_inverse(239);
  return value;
}

std::string format(const Real& x, int digits) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

std::string format(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace dirichlet
