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

#ifndef GENOCCHI_INTEGRALS_HPP
#define GENOCCHI_INTEGRALS_HPP

#include "genocchi/sequences.hpp"

namespace genocchi {

/// T(m,n) = int_0^1 G_m(x) x^n dx, m >= 1, n >= 0.
///
/// Three independent routes: the brute-force integral is the reference; the
/// recurrence and the closed form are checked against it.

/// Direct polynomial integration (the reference path).
Rat t_oracle(long m, long n);

/// Integration by parts: T(m,n) = -G_{m+1}/(m+1) - n/(m+1) T(m+1, n-1),
/// with base T(m,0) = -2 G_{m+1}/(m+1). Memoized, write-once.
Rat t_recurrence(long m, long n);

/// Closed form in Genocchi numbers, m, n >= 1:
///   T(m,n) = 1/(n+1) sum_{j=1}^{n} (-1)^j C(n+1,j)/C(m+j,m) G_{m+j}
///            + 2 (-1)^{n+1} G_{n+m+1} / ((n+m+1) C(n+m,m))
/// with the 1/(n+1) factor applying to the alternating sum only; the grid
/// sweep against t_oracle confirms this scope.
Rat t_closed(long m, long n);

/// Audited variant with 1/(n+1) applied to both terms. Not exact; first
/// differs from t_oracle at (m,n) = (1,2). Kept for the identity audit.
Rat t_closed_full_prefactor(long m, long n);

/// I(m,n) = int_0^1 B_m(x) x^n dx, m, n >= 0.
Rat i_moment(long m, long n);

/// J(m,n) = int_0^1 E_m(x) x^n dx, m, n >= 0.
Rat j_moment(long m, long n);

}  // namespace genocchi

#endif
