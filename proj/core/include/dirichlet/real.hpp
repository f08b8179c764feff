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

#ifndef DIRICHLET_REAL_HPP
#define DIRICHLET_REAL_HPP

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dirichlet/errors.hpp"

namespace dirichlet {

/// Extended-precision binary float used wherever a value must carry more
/// than 17 significant digits (closed forms, accelerated series).
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<80>,
    boost::multiprecision::et_off>;

/// Largest `digits` request any evaluator honors. Real keeps ~20 guard
/// digits above this.
enum class TrigKind { sine, cosine };

inline constexpr int kMaxDigits = 60;
inline constexpr int kMinDigits = 15;

/// Throws DomainError unless min_digits <= digits <= kMaxDigits.
void require_digits(int digits, int min_digits = kMinDigits);

/// pi to the full precision of Real, from Machin's arctangent formula.
/// Computed once; safe to call concurrently.
const Real& pi();

inline double to_double(const Real& x) { return x.convert_to<double>(); }

/// Decimal rendering with `digits` significant digits, scientific only
/// when the magnitude calls for it.
std::string format(const Real& x, int digits);
std::string format(double x, int digits = 17);

}  // namespace dirichlet

#endif  // DIRICHLET_REAL_HPP
