/*
   Copyright 2026 genocchi developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GENOCCHI_POLYNOMIAL_HPP
#define GENOCCHI_POLYNOMIAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "genocchi/exact.hpp"

namespace genocchi {

/// Dense univariate polynomial over Rat, coefficients ascending by degree,
/// trailing zeros trimmed. The zero polynomial has an empty coefficient list
/// and degree -1. Structural equality coincides with mathematical equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rat& c);
  /// c * x^deg
  static Poly monomial(long deg, const Rat& c);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  /// Coefficient of x^i; 0 beyond the stored range.
  Rat coeff(long i) const;

  Rat eval(const Rat& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  /// k-th derivative; k = 0 is the identity, k > degree gives zero.
  /// Throws std::domain_error for k < 0.
  Poly derivative(long k = 1) const;

  /// Antiderivative with zero constant term.
  Poly antiderivative() const;

  /// Exact definite integral over [a, b].
  Rat integrate(const Rat& a, const Rat& b) const;

  /// q with q(x) = p(x + c), by binomial re-expansion of each power.
  Poly shift(const Rat& c) const;

  /// q with q(x) = p(c x).
  Poly dilate(const Rat& c) const;

  /// Comma-separated ascending coefficients; "0" for the zero polynomial.
  /// frac = true renders every coefficient as "p/q".
  std::string to_csv(bool frac = false) const;

  /// Inverse of to_csv. Throws parse_error naming the offending token.
  static Poly parse_csv(std::string_view text);

 private:
  std::vector<Rat> c_;
  void trim();
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& p, const Rat& s);
Poly operator*(const Rat& s, const Poly& p);
bool operator==(const Poly& a, const Poly& b);

}  // namespace genocchi

#endif
