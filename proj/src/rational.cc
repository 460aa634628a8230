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

#include "abcc/rational.h"

#include <cctype>
#include <string>

#include "abcc/error.h"

namespace abcc {
namespace {

bool IsInteger(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

// Round-half-away-from-zero of n / d for d > 0.
mpz_class RoundDiv(const mpz_class& n, const mpz_class& d) {
  mpz_class twice = 2 * abs(n) + d;
  mpz_class q = twice / (2 * d);
  return n < 0 ? mpz_class(-q) : q;
}

std::string InsertPoint(std::string digits, long fraction_digits,
                        bool negative) {
  if (fraction_digits > 0) {
    if (static_cast<long>(digits.size()) <= fraction_digits) {
      digits.insert(0, fraction_digits - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - fraction_digits, ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  } else if (fraction_digits < 0) {
    digits.append(-fraction_digits, '0');
  }
  if (negative && digits != "0") digits.insert(0, "-");
  return digits;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!IsInteger(num) || !IsInteger(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::kInvalidArgument,
                "malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = ParseInteger(den);
  if (d == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(ParseInteger(num), d);
  r.canonicalize();
  return r;
}

std::string RationalToString(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string RationalToFixed(const Rational& r, int fraction_digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction_digits);
  const mpz_class scaled = RoundDiv(r.get_num() * scale, r.get_den());
  return InsertPoint(mpz_class(abs(scaled)).get_str(), fraction_digits, scaled < 0);
}

std::string RationalToDecimal(const Rational& r, int significant_digits) {
  if (r == 0) return "0";
  const Rational a = abs(r);
  // Find e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 10));
  auto pow10 = [](long p) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(p));
    return Rational(out);
  };
  auto scaled_power = [&](long p) {
    return p >= 0 ? pow10(p) : Rational(1) / pow10(-p);
  };
  while (a < scaled_power(e)) --e;
  while (a >= scaled_power(e + 1)) ++e;
  const long fraction_digits = significant_digits - 1 - e;
  const Rational shifted = r * scaled_power(fraction_digits);
  const mpz_class rounded = RoundDiv(shifted.get_num(), shifted.get_den());
  return InsertPoint(mpz_class(abs(rounded)).get_str(), fraction_digits, rounded < 0);
}

}  // namespace abcc
