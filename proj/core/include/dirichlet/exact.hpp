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

#ifndef DIRICHLET_EXACT_HPP
#define DIRICHLET_EXACT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dirichlet/real.hpp"

namespace dirichlet::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction num/den with den > 0 and gcd(|num|, den) == 1.
/// Every constructor and operator returns a reduced value.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit on purpose
  Rational(BigInt n) : num_(std::move(n)) {}  // NOLINT
  Rational(BigInt n, BigInt d);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws DomainError on 0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  Real to_real() const;
  double to_double() const;
  std::string str() const;  // "p/q", or "p" when q == 1

 private:
  void reduce();

  BigInt num_{0};
  BigInt den_{1};
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Exact constant sum_j c_j * pi^j with non-negative integer exponents.
/// Zero coefficients are never stored, so the zero polynomial is empty and
/// equality of values is equality of term maps.
class PiPoly {
 public:
  using Terms = std::map<unsigned, Rational>;

  PiPoly() = default;
  static PiPoly constant(const Rational& c) { return monomial(c, 0); }
  static PiPoly monomial(const Rational& c, unsigned exponent);
  /// (pi/2)^k / k!
  static PiPoly half_pi_power_over_factorial(unsigned k);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of pi^exponent (zero when absent).
  Rational coefficient(unsigned exponent) const;

  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  PiPoly& operator*=(const PiPoly& o);
  PiPoly& operator*=(const Rational& c);

  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(PiPoly a, const PiPoly& b) { return a *= b; }
  friend PiPoly operator*(PiPoly a, const Rational& c) { return a *= c; }
  friend PiPoly operator*(const Rational& c, PiPoly a) { return a *= c; }
  PiPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const PiPoly&, const PiPoly&) = default;

  /// e.g. "5/1536*pi^5 - 1/4*pi"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void add_term(unsigned exponent, const Rational& c);

  Terms terms_;
};

enum class PiPolyOp { add, sub, mul, scale };

PiPoly pipoly_add(const PiPoly& a, const PiPoly& b);
PiPoly pipoly_sub(const PiPoly& a, const PiPoly& b);
PiPoly pipoly_mul(const PiPoly& a, const PiPoly& b);
PiPoly pipoly_scale(const PiPoly& a, const Rational& c);

/// Value of a closed form together with a bound on its absolute error.
struct Approx {
  Real value;
  double error_estimate = 0.0;
};

/// Evaluates p at pi with at least `digits` correct significant digits.
/// Throws DomainError when digits is outside [kMinDigits, kMaxDigits].
Approx pipoly_eval(const PiPoly& p, int digits);

/// values[k] = E_{2k}; integers with alternating sign, values[0] = 1.
struct EulerTable {
  std::vector<Rational> values;
};

/// values[m] = B_{2m}; values[0] = 1, values[1] = 1/6.
struct BernoulliTable {
  std::vector<Rational> values;
};

/// E_0, E_2, ..., E_{2(count-1)} from the exact reciprocal of the cosine
/// power series. Throws DomainError for count == 0.
EulerTable euler_numbers(std::size_t count);

/// B_0, B_2, ..., B_{2(count-1)} from sum_{j<=m} C(m+1, j) B_j = 0.
/// Throws DomainError for count == 0.
BernoulliTable bernoulli_numbers(std::size_t count);

/// Process-wide Euler table that grows on demand. The returned snapshot
/// holds at least `count` entries and stays valid after later growth.
std::shared_ptr<const EulerTable> shared_euler_numbers(std::size_t count);
std::shared_ptr<const BernoulliTable> shared_bernoulli_numbers(
    std::size_t count);

}  // namespace dirichlet::exact

#endif  // DIRICHLET_EXACT_HPP
