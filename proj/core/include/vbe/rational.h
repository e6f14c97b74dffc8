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

#ifndef VBE_RATIONAL_H_
#define VBE_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vbe {

// Every metric and threshold is an exact ratio of integers; comparisons never
// go through floating point.
using Rational = boost::multiprecision::cpp_rational;

Rational MakeRational(std::int64_t numerator, std::int64_t denominator = 1);

bool IsInteger(const Rational& value);
// Lowest terms, e.g. "17/30", or "5" for integral values.
// "51/90", or "5" for integral values.
std::string FractionString(const Rational& value);

// Fixed-point rendering rounded half away from zero, e.g. "0.5667".
std::string DecimalString(const Rational& value, int places = 4);

// Nearest integer percent, halves rounded up: 51/90 -> 57.
std::int64_t RoundedPercent(const Rational& value);

// Shortest exact literal: "5", "0.8", "0.125", otherwise "1/3". The result
// re-parses to the same value in the requirements grammar.
std::string LiteralString(const Rational& value);

// Human-facing rendering of an observed value: integers bare, other values
// as "7/9 (0.7778)".
std::string ObservedString(const Rational& value);

}  // namespace vbe

#endif  // VBE_RATIONAL_H_
