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

#ifndef GENOCCHI_SEQUENCES_HPP
#define GENOCCHI_SEQUENCES_HPP

#include <vector>

#include "genocchi/polynomial.hpp"

namespace genocchi {

enum class Family { bernoulli, euler, genocchi };

/// B_n, from B_0 = 1 and the reflection recurrence B_n(1) - B_n = [n = 1].
Rat bernoulli_number(long n);

/// E_n = E_n(0), from E_0 = 1 and E_n(1) + E_n = 2[n = 0]. Rational values,
/// not the integer secant numbers.
Rat euler_number(long n);

/// G_n, from G_0 = 0 and G_n(1) + G_n = 2[n = 1]. Always integer-valued;
/// G_{n+1} = (n+1) E_n ties the family to the Euler numbers.
Rat genocchi_number(long n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}; degree n.
Poly bernoulli_poly(long n);

/// E_n(x) = sum_k C(n,k) E_k x^{n-k}; degree n.
Poly euler_poly(long n);

/// G_n(x) = sum_k C(n,k) G_k x^{n-k}; degree n-1 with leading coefficient n
/// (G_0(x) is the zero polynomial).
Poly genocchi_poly(long n);

Rat family_number(Family f, long n);
Poly family_poly(Family f, long n);

/// Independent oracle: the numbers up to index `order`, computed by truncated
/// division of the exponential generating function with exact rational
/// coefficients (t/(e^t - 1), 2/(e^t + 1), 2t/(e^t + 1)). Shares no code with
/// the recurrences above.
std::vector<Rat> series_numbers(Family f, long order);

}  // namespace genocchi

#endif
