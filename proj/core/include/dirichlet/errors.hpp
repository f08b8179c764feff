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

#ifndef DIRICHLET_ERRORS_HPP
#define DIRICHLET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dirichlet {

// Argument outside the domain of the function (s <= 1 for lambda, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument sits on a pole of a closed form (csc at multiples of pi, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative method could not reach the requested tolerance within its
// work cap. Carries the parameters of the failing evaluation.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double argument, double achieved)
      : std::runtime_error(what), argument_(argument), achieved_(achieved) {}

  double argument() const noexcept { return argument_; }
  double achieved() const noexcept { return achieved_; }

 private:
  double argument_;
  double achieved_;
};

}  // namespace dirichlet

#endif  // DIRICHLET_ERRORS_HPP
