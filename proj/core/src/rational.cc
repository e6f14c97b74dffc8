// Copyright 2026 The VBE Social Requirements Authors
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

#include "vbe/rational.h"

#include <string>

#include "vbe/errors.h"

namespace vbe {

namespace {

using boost::multiprecision::cpp_int;

// floor(|value| * 10^places + 1/2), with the sign handled by the caller.
cpp_int ScaledHalfUp(const Rational& magnitude, int places) {
  cpp_int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const cpp_int num = boost::multiprecision::numerator(magnitude) * scale * 2 +
                      boost::multiprecision::denominator(magnitude);
  return num / (boost::multiprecision::denominator(magnitude) * 2);
}

// Number of decimal places needed to write `value` exactly, or -1 if the
// expansion does not terminate.
int TerminatingPlaces(const Rational& value) {
  cpp_int den = boost::multiprecision::denominator(value);
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return -1;
  return twos > fives ? twos : fives;
}

}  // namespace

Rational MakeRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidArgument("zero denominator");
  return Rational(numerator, denominator);
}

bool IsInteger(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

std::string FractionString(const Rational& value) {
  if (IsInteger(value)) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string DecimalString(const Rational& value, int places) {
  const bool negative = value < 0;
  const cpp_int scaled = ScaledHalfUp(negative ? Rational(-value) : value,
                                      places);
  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

std::int64_t RoundedPercent(const Rational& value) {
  const bool negative = value < 0;
  const cpp_int scaled =
      ScaledHalfUp((negative ? Rational(-value) : value) * 100, 0);
  const auto magnitude = scaled.convert_to<std::int64_t>();
  return negative ? -magnitude : magnitude;
}

std::string LiteralString(const Rational& value) {
  if (IsInteger(value)) return FractionString(value);
  const int places = TerminatingPlaces(value);
  if (places < 0 || places > 12) return FractionString(value);
  return DecimalString(value, places);
}

std::string ObservedString(const Rational& value) {
  if (IsInteger(value)) return FractionString(value);
  return FractionString(value) + " (" + DecimalString(value) + ")";
}

}  // namespace vbe
