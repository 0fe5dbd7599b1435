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

#ifndef PARTSTAB_RATIONAL_HPP_
#define PARTSTAB_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace partstab {

// Arbitrary-precision rational; every value, payoff and LP entry uses it.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (surrounding whitespace allowed). Throws
// InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Parses a comma-separated list of rationals, e.g. "0,6,2" or "1/2,3/2".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace partstab

#endif  // PARTSTAB_RATIONAL_HPP_
