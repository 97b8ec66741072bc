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

#ifndef GENOCCHI_EXACT_HPP
#define GENOCCHI_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace genocchi {

/// Arbitrary-precision integer. Zero is canonical and unique.
using Int = mpz_class;

/// Arbitrary-precision rational, kept canonical at all times:
/// gcd(|num|, den) = 1 and den > 0. Equal values have identical
/// representations.
using Rat = mpq_class;

/// Thrown when a textual number or polynomial fails to parse; carries the
/// offending token in what().
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// num/den as a canonical rational. Throws std::domain_error when den = 0.
Rat make_rat(const Int& num, const Int& den);

/// C(n, k); returns 0 for k < 0 or k > n. Throws std::domain_error for n < 0.
Int binomial(long n, long k);

/// n!. Throws std::domain_error for n < 0.
Int factorial(long n);

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0. Throws for n < 0.
Rat harmonic(long n);

/// Kronecker delta: 1 if n = m, else 0.
int kronecker(long n, long m);

/// base^e for e >= 0 (throws for e < 0).
Rat rat_pow(const Rat& base, long e);

/// "p/q" even when q = 1 (machine form).
std::string to_frac(const Rat& r);

/// "p" when q = 1, otherwise "p/q" (human form).
std::string to_plain(const Rat& r);

/// Parses "p", "p/q", optional leading sign, arbitrary precision.
/// Throws parse_error naming the offending token.
Rat parse_rat(std::string_view text);

}  // namespace genocchi

#endif
