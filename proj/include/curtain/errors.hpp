// Copyright 2026 The Curtain Planner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CURTAIN__ERRORS_HPP_
#define CURTAIN__ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curtain
{

// Input outside the mathematical domain of an operation (p outside [0,1],
// point behind the laser, ...).
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Malformed or inconsistent arguments.
class ArgumentError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Brute-force enumeration refused: the search space is too large.
class InstanceTooLargeError : public std::length_error
{
public:
  using std::length_error::length_error;
};

// No feasible placement exists, or a planner walked into a dead end.
class PlanningError : public std::runtime_error
{
public:
  PlanningError(const std::string & what, std::size_t ray)
  : std::runtime_error(what), ray_(ray)
  {
  }

  std::size_t ray() const noexcept { return ray_; }

private:
  std::size_t ray_;
};

// Random scene generation could not satisfy its placement constraints.
class GenerationError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// A file could not be parsed into the expected schema.
class FormatError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace curtain

#endif  // CURTAIN__ERRORS_HPP_
