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

#include "specaug/portable_math.h"

#include <cmath>
#include <limits>

namespace specaug::pmath {
namespace {

// ln(2) and pi/2 split so that k * kHi is exact for the k we see.
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kInvLn2 = 1.44269504088896338700e+00;
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Lo = 6.07710050650619224932e-11;
constexpr double kTwoOverPi = 6.36619772367581382433e-01;

// Taylor series for |r| <= pi/4.
double SinKernel(double r) {
  const double r2 = r * r;
  double sum = 0.0;
  // Horner over r^(2n+1)/(2n+1)! for n = 0..11.
  for (int n = 11; n >= 1; --n) {
    sum = (sum + 1.0) * (-r2) / static_cast<double>((2 * n) * (2 * n + 1));
  }
  return r * (1.0 + sum);
}

double CosKernel(double r) {
  const double r2 = r * r;
  double sum = 0.0;
  for (int n = 11; n >= 1; --n) {
    sum = (sum + 1.0) * (-r2) / static_cast<double>((2 * n - 1) * (2 * n));
  }
  return 1.0 + sum;
}

// Reduces x to r in [-pi/4, pi/4] with x = r + q * pi/2; returns q mod 4.
int Reduce(double x, double* r) {
  const double n = std::floor(x * kTwoOverPi + 0.5);
  *r = (x - n * kPio2Hi) - n * kPio2Lo;
  const long long q = static_cast<long long>(n);
  return static_cast<int>(((q % 4) + 4) % 4);
}

}  // namespace

double Log(double x) {
  if (std::isnan(x) || x < 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (std::isinf(x)) return x;
  int e = 0;
  double m = std::frexp(x, &e);  // m in [0.5, 1)
  if (m < 0.70710678118654752440) {
    m *= 2.0;
    --e;
  }
  // ln(m) = 2 atanh(z), z = (m - 1) / (m + 1), |z| <= 0.172.
  const double z = (m - 1.0) / (m + 1.0);
  const double z2 = z * z;
  double series = 0.0;
  for (int k = 13; k >= 1; --k) {
    series = z2 * (series + 1.0 / static_cast<double>(2 * k + 1));
  }
  const double log_m = 2.0 * z * (1.0 + series);
  const double de = static_cast<double>(e);
  return de * kLn2Hi + (log_m + de * kLn2Lo);
}

double Log10(double x) { return Log(x) / kLn10; }

double Exp(double x) {
  if (std::isnan(x)) return x;
  if (x > 709.782712893384) return std::numeric_limits<double>::infinity();
  if (x < -745.2) return 0.0;
  const double k = std::floor(x * kInvLn2 + 0.5);
  const double r = (x - k * kLn2Hi) - k * kLn2Lo;  // |r| <= 0.35
  double p = 1.0;
  for (int n = 20; n >= 1; --n) {
    p = 1.0 + p * r / static_cast<double>(n);
  }
  return std::ldexp(p, static_cast<int>(k));
}

double Sin(double x) {
  double r = 0.0;
  switch (Reduce(x, &r)) {
    case 0: return SinKernel(r);
    case 1: return CosKernel(r);
    case 2: return -SinKernel(r);
    default: return -CosKernel(r);
  }
}

double Cos(double x) {
  double r = 0.0;
  switch (Reduce(x, &r)) {
    case 0: return CosKernel(r);
    case 1: return -SinKernel(r);
    case 2: return -CosKernel(r);
    default: return SinKernel(r);
  }
}

}  // namespace specaug::pmath
