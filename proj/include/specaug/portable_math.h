// Copyright 2026 The SpecAug Toolkit Authors
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

// Elementary functions built only from IEEE-754 basic operations (+, -, *,
// /, sqrt) plus exact exponent manipulation (frexp/ldexp/floor). The C
// library's log/exp/sin/cos are not required to be correctly rounded, so
// their last bit can differ between platforms; these versions cannot, as
// long as the build disables floating-point contraction (the CMake project
// passes -ffp-contract=off).
//
// Accuracy is within a few ulp over the ranges the toolkit uses. They are
// not general replacements for <cmath>.

#ifndef SPECAUG_PORTABLE_MATH_H_
#define SPECAUG_PORTABLE_MATH_H_

namespace specaug::pmath {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kLn10 = 2.30258509299404568402;

// Natural log. Requires x > 0 and finite; returns -inf for 0 and NaN for
// negative input.
double Log(double x);
double Log10(double x);
// Returns +inf on overflow and 0 on underflow.
double Exp(double x);
// Intended for |x| < 1e5; argument reduction loses accuracy beyond that.
double Sin(double x);
double Cos(double x);

}  // namespace specaug::pmath

#endif  // SPECAUG_PORTABLE_MATH_H_
