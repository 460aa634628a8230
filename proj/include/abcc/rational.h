// Copyright 2026 The Authors.
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

#ifndef ABCC_RATIONAL_H_
#define ABCC_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace abcc {

// Exact arbitrary-precision rational. All scores and model coefficients use
// this type.
using Rational = mpq_class;

// Parses "a", "-a" or "a/b" into a canonical rational. Throws
// Error(kInvalidArgument) on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// "7", "3/2", "-1/6".
std::string RationalToString(const Rational& r);

// Decimal rendering with up to `significant_digits` significant digits and
// no trailing zeros, e.g. 3/2 -> "1.5", 1/3 -> "0.333333333333".
std::string RationalToDecimal(const Rational& r, int significant_digits = 12);

// Decimal rendering rounded to `fraction_digits` places after the point,
// trailing zeros trimmed. Absolute error is at most 0.5 * 10^-fraction_digits.
std::string RationalToFixed(const Rational& r, int fraction_digits = 12);

}  // namespace abcc

#endif  // ABCC_RATIONAL_H_
