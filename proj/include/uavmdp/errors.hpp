// Copyright 2026 The uavmdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UAVMDP_ERRORS_HPP_
#define UAVMDP_ERRORS_HPP_

#include <stdexcept>

namespace uavmdp {

// Parameter set violates an invariant. The message names the field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Action leaves the height band or sends more data than remains.
class InfeasibleActionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// No policy can meet the data-volume and height constraints.
class InfeasibleInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rollout reached a state the policy table has no action for.
class PolicyCoverageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Brute-force enumeration refused because the instance is too large.
class GuardExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uavmdp

#endif  // UAVMDP_ERRORS_HPP_
