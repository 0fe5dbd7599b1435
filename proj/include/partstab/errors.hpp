// Copyright 2026 The partstab Authors.
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

#ifndef PARTSTAB_ERRORS_HPP_
#define PARTSTAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace partstab {

// Malformed or out-of-range caller input (bad player index, length mismatch,
// unparsable file, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard refused the request (player cap, Bell-number guards).
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Some block C has v(C) below the sum of its singleton values, so no
// individually rational allocation is efficient on it.
class EmptyBlockAllocation : public std::domain_error {
 public:
  EmptyBlockAllocation(const std::string& what, unsigned block_bits)
      : std::domain_error(what), block_bits_(block_bits) {}
  unsigned block_bits() const noexcept { return block_bits_; }

 private:
  unsigned block_bits_;
};

// max_nongrand_worth on a one-player game.
class NoNonGrandPartition : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The allocation is not individually rational and blockwise efficient for
// the partition it is paired with.
class InfeasiblePair : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// best_coarsening on the grand-coalition partition.
class NoCoarsening : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace partstab

#endif  // PARTSTAB_ERRORS_HPP_
