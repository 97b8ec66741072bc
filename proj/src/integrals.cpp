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

#include "genocchi/integrals.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace genocchi {

namespace {

void check_t_domain(long m, long n) {
  if (m < 1) throw std::domain_error("T(m,n): m must be >= 1");
  if (n < 0) throw std::domain_error("T(m,n): n must be >= 0");
}

Rat t_recurrence_impl(long m, long n);

struct TMemo {
  std::mutex mu;
  std::map<std::pair<long, long>, Rat> values;
};

TMemo& t_memo() {
  static TMemo memo;
  return memo;
}

Rat t_recurrence_impl(long m, long n) {
  {
    std::lock_guard lock(t_memo().mu);
    auto it = t_memo().values.find({m, n});
    if (it != t_memo().values.end()) return it->second;
  }
  Rat v;
  if (n == 0) {
    v = Rat(-2) * genocchi_number(m + 1) / Rat(m + 1);
  } else {
    v = -genocchi_number(m + 1) / Rat(m + 1) -
        Rat(n) / Rat(m + 1) * t_recurrence_impl(m + 1, n - 1);
  }
  std::lock_guard lock(t_memo().mu);
  t_memo().values.emplace(std::make_pair(m, n), v);
  return v;
}

// The alternating sum and the trailing term of the closed form, separately,
// so both prefactor scopes can be formed.
void t_closed_parts(long m, long n, Rat& sum, Rat& tail) {
  sum = 0;
  for (long j = 1; j <= n; ++j) {
    Rat term = make_rat(binomial(n + 1, j), binomial(m + j, m)) * genocchi_number(m + j);
    if (j % 2 != 0) term = -term;
    sum += term;
  }
  tail = Rat(2) * genocchi_number(n + m + 1) / (Rat(n + m + 1) * Rat(binomial(n + m, m)));
  if (n % 2 == 0) tail = -tail;  // the (-1)^{n+1} factor
}

}  // namespace

Rat t_oracle(long m, long n) {
  check_t_domain(m, n);
  Poly p = genocchi_poly(m) * Poly::monomial(n, Rat(1));
  return p.integrate(Rat(0), Rat(1));
}

Rat t_recurrence(long m, long n) {
  check_t_domain(m, n);
  return t_recurrence_impl(m, n);
}

Rat t_closed(long m, long n) {
  check_t_domain(m, n);
  if (n < 1) throw std::domain_error("t_closed: n must be >= 1");
  Rat sum, tail;
  t_closed_parts(m, n, sum, tail);
  return sum / Rat(n + 1) + tail;
}

Rat t_closed_full_prefactor(long m, long n) {
  check_t_domain(m, n);
  if (n < 1) throw std::domain_error("t_closed_full_prefactor: n must be >= 1");
  Rat sum, tail;
  t_closed_parts(m, n, sum, tail);
  return (sum + tail) / Rat(n + 1);
}

Rat i_moment(long m, long n) {
  if (m < 0 || n < 0) throw std::domain_error("I(m,n): negative index");
  Poly p = bernoulli_poly(m) * Poly::monomial(n, Rat(1));
  return p.integrate(Rat(0), Rat(1));
}

Rat j_moment(long m, long n) {
  if (m < 0 || n < 0) throw std::domain_error("J(m,n): negative index");
  Poly p = euler_poly(m) * Poly::monomial(n, Rat(1));
  return p.integrate(Rat(0), Rat(1));
}

}  // namespace genocchi
