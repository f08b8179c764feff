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

#include "dirichlet/exact.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>
#include <utility>

#include "dirichlet/errors.hpp"

namespace dirichlet::exact {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw DomainError("rational with zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Real Rational::to_real() const { return Real(num_) / Real(den_); }

double Rational::to_double() const { return to_real().convert_to<double>(); }

std::string Rational::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// --- PiPoly ---------------------------------------------------------------

PiPoly PiPoly::monomial(const Rational& c, unsigned exponent) {
  PiPoly p;
  p.add_term(exponent, c);
  return p;
}

PiPoly PiPoly::half_pi_power_over_factorial(unsigned k) {
  BigInt den = factorial(k);
  den <<= k;
  return monomial(Rational(BigInt(1), den), k);
}

Rational PiPoly::coefficient(unsigned exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

void PiPoly::add_term(unsigned exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PiPoly& PiPoly::operator*=(const PiPoly& o) {
  PiPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  terms_ = std::move(out.terms_);
  return *this;
}

PiPoly& PiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

std::string PiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.str();
      continue;
    }
    if (mag != Rational(1)) os << mag.str() << "*";
    os << "pi";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

PiPoly pipoly_add(const PiPoly& a, const PiPoly& b) { return a + b; }
PiPoly pipoly_sub(const PiPoly& a, const PiPoly& b) { return a - b; }
PiPoly pipoly_mul(const PiPoly& a, const PiPoly& b) { return a * b; }
PiPoly pipoly_scale(const PiPoly& a, const Rational& c) { return a * c; }

Approx pipoly_eval(const PiPoly& p, int digits) {
  require_digits(digits);
  Approx out;
  Real magnitude = 0;
  for (const auto& [e, c] : p.terms()) {
    Real term = c.to_real() * pow(pi(), e);
    out.value += term;
    magnitude += abs(term);
  }
  // Each term carries a few ulps of Real; the sum adds one more per term.
  const Real ulp = std::numeric_limits<Real>::epsilon();
  out.error_estimate =
      (magnitude * ulp * (4 * p.terms().size() + 4)).convert_to<double>();
  return out;
}

// --- Euler and Bernoulli numbers -----------------------------------------

EulerTable euler_numbers(std::size_t count) {
  if (count == 0) throw DomainError("euler_numbers: count must be >= 1");
  // cos(t) = sum_j a_j t^{2j} with a_j = (-1)^j / (2j)!; its reciprocal
  // sec(t) = sum_k c_k t^{2k} satisfies c_0 = 1 and
  // c_k = -sum_{j=1}^{k} a_j c_{k-j}. Then |E_{2k}| = c_k (2k)!.
  std::vector<Rational> cos_coeff(count);
  for (std::size_t j = 0; j < count; ++j) {
    cos_coeff[j] = Rational(BigInt(j % 2 == 0 ? 1 : -1),
                            factorial(static_cast<unsigned>(2 * j)));
  }
  std::vector<Rational> sec_coeff(count);
  sec_coeff[0] = 1;
  for (std::size_t k = 1; k < count; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += cos_coeff[j] * sec_coeff[k - j];
    sec_coeff[k] = -acc;
  }
  EulerTable table;
  table.values.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rational e = sec_coeff[k] * Rational(factorial(static_cast<unsigned>(2 * k)));
    table.values.push_back(k % 2 == 0 ? e : -e);
  }
  return table;
}

BernoulliTable bernoulli_numbers(std::size_t count) {
  if (count == 0) throw DomainError("bernoulli_numbers: count must be >= 1");
  const unsigned top = static_cast<unsigned>(2 * (count - 1));
  // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
  std::vector<Rational> all(top + 1);
  all[0] = 1;
  for (unsigned m = 1; m <= top; ++m) {
    if (m > 1 && m % 2 == 1) continue;  // odd B beyond B_1 vanish
    Rational acc;
    for (unsigned j = 0; j < m; ++j) {
      if (!all[j].is_zero()) acc += Rational(binomial(m + 1, j)) * all[j];
    }
    all[m] = -acc / Rational(m + 1);
  }
  BernoulliTable table;
  table.values.reserve(count);
  for (unsigned m = 0; m <= top; m += 2) table.values.push_back(all[m]);
  return table;
}

namespace {

template <class Table, class Builder>
std::shared_ptr<const Table> grow_shared(std::shared_ptr<const Table>& slot,
                                         std::mutex& mu, std::size_t count,
                                         Builder build) {
  std::lock_guard lock(mu);
  if (!slot || slot->values.size() < count) {
    std::size_t target = slot ? std::max(count, 2 * slot->values.size()) : count;
    slot = std::make_shared<const Table>(build(std::max<std::size_t>(target, 16)));
  }
  return slot;
}

}  // namespace

std::shared_ptr<const EulerTable> shared_euler_numbers(std::size_t count) {
  static std::mutex mu;
  static std::shared_ptr<const EulerTable> slot;
  return grow_shared(slot, mu, count, euler_numbers);
}

std::shared_ptr<const BernoulliTable> shared_bernoulli_numbers(
    std::size_t count) {
  static std::mutex mu;
  static std::shared_ptr<const BernoulliTable> slot;
  return grow_shared(slot, mu, count, bernoulli_numbers);
}

}  // namespace dirichlet::exact
