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

#include "genocchi/sequences.hpp"

#include <mutex>

namespace genocchi {

namespace {

// Write-once grow-only tables. Entries are appended under the lock and never
// mutated afterwards, so readers can only observe finished values.
struct Cache {
  std::mutex mu;
  std::vector<Rat> bernoulli{Rat(1)};
  std::vector<Rat> euler{Rat(1)};
  std::vector<Rat> genocchi{Rat(0)};
  std::vector<Poly> bernoulli_p;
  std::vector<Poly> euler_p;
  std::vector<Poly> genocchi_p;
};

Cache& cache() {
  static Cache c;
  return c;
}

// Next Bernoulli number from sum_{k=0}^{m-1} C(m+1,k) B_k = [m+1 = 1] = 0.
Rat next_bernoulli(const std::vector<Rat>& b) {
  const long m = static_cast<long>(b.size());
  Rat acc = 0;
  for (long k = 0; k < m; ++k) acc += Rat(binomial(m + 1, k)) * b[static_cast<size_t>(k)];
  return -acc / Rat(m + 1);
}

// Next Euler number from sum_{k=0}^{m} C(m,k) E_k + E_m = 0 for m >= 1.
Rat next_euler(const std::vector<Rat>& e) {
  const long m = static_cast<long>(e.size());
  Rat acc = 0;
  for (long k = 0; k < m; ++k) acc += Rat(binomial(m, k)) * e[static_cast<size_t>(k)];
  return -acc / 2;
}

// Next Genocchi number from sum_{k=0}^{m} C(m,k) G_k + G_m = 2[m = 1].
Rat next_genocchi(const std::vector<Rat>& g) {
  const long m = static_cast<long>(g.size());
  Rat acc = 0;
  for (long k = 0; k < m; ++k) acc += Rat(binomial(m, k)) * g[static_cast<size_t>(k)];
  Rat v = (Rat(2 * kronecker(1, m)) - acc) / 2;
  if (v.get_den() != 1) throw std::logic_error("genocchi number with nontrivial denominator");
  return v;
}

const Rat& number_locked(std::vector<Rat>& table, long n, Rat (*step)(const std::vector<Rat>&)) {
  while (static_cast<long>(table.size()) <= n) table.push_back(step(table));
  return table[static_cast<size_t>(n)];
}

Poly appell_from_numbers(const std::vector<Rat>& numbers, long n) {
  // sum_k C(n,k) a_k x^{n-k}, ascending storage.
  std::vector<Rat> v(static_cast<size_t>(n) + 1, Rat(0));
  for (long k = 0; k <= n; ++k) {
    v[static_cast<size_t>(n - k)] = Rat(binomial(n, k)) * numbers[static_cast<size_t>(k)];
  }
  return Poly(std::move(v));
}

}  // namespace

Rat bernoulli_number(long n) {
  if (n < 0) throw std::domain_error("bernoulli_number: negative index");
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  return number_locked(c.bernoulli, n, next_bernoulli);
}

Rat euler_number(long n) {
  if (n < 0) throw std::domain_error("euler_number: negative index");
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  return number_locked(c.euler, n, next_euler);
}

Rat genocchi_number(long n) {
  if (n < 0) throw std::domain_error("genocchi_number: negative index");
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  return number_locked(c.genocchi, n, next_genocchi);
}

Poly bernoulli_poly(long n) {
  if (n < 0) throw std::domain_error("bernoulli_poly: negative index");
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  number_locked(c.bernoulli, n, next_bernoulli);
  while (static_cast<long>(c.bernoulli_p.size()) <= n) {
    c.bernoulli_p.push_back(
        appell_from_numbers(c.bernoulli, static_cast<long>(c.bernoulli_p.size())));
  }
  return c.bernoulli_p[static_cast<size_t>(n)];
}

Poly euler_poly(long n) {
  if (n < 0) throw std::domain_error("euler_poly: negative index");
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  number_locked(c.euler, n, next_euler);
  while (static_cast<long>(c.euler_p.size()) <= n) {
    c.euler_p.push_back(appell_from_numbers(c.euler, static_cast<long>(c.euler_p.size())));
  }
  return c.euler_p[static_cast<size_t>(n)];
}

Poly genocchi_poly(long n) {
  if (n < 0) throw std::domain_error("genocchi_poly: negative index");
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  number_locked(c.genocchi, n, next_genocchi);
  while (static_cast<long>(c.genocchi_p.size()) <= n) {
    c.genocchi_p.push_back(
        appell_from_numbers(c.genocchi, static_cast<long>(c.genocchi_p.size())));
  }
  return c.genocchi_p[static_cast<size_t>(n)];
}

Rat family_number(Family f, long n) {
  switch (f) {
    case Family::bernoulli: return bernoulli_number(n);
    case Family::euler: return euler_number(n);
    case Family::genocchi: return genocchi_number(n);
  }
  throw std::invalid_argument("family_number: bad family");
}

Poly family_poly(Family f, long n) {
  switch (f) {
    case Family::bernoulli: return bernoulli_poly(n);
    case Family::euler: return euler_poly(n);
    case Family::genocchi: return genocchi_poly(n);
  }
  throw std::invalid_argument("family_poly: bad family");
}

namespace {

// q = a / b as truncated formal power series, q_n = (a_n - sum b_j q_{n-j}) / b_0.
std::vector<Rat> divide_series(const std::vector<Rat>& a, const std::vector<Rat>& b,
                               long order) {
  std::vector<Rat> q(static_cast<size_t>(order) + 1, Rat(0));
  for (long n = 0; n <= order; ++n) {
    Rat acc = n < static_cast<long>(a.size()) ? a[static_cast<size_t>(n)] : Rat(0);
    for (long j = 1; j <= n && j < static_cast<long>(b.size()); ++j) {
      acc -= b[static_cast<size_t>(j)] * q[static_cast<size_t>(n - j)];
    }
    q[static_cast<size_t>(n)] = acc / b[0];
  }
  return q;
}

}  // namespace

std::vector<Rat> series_numbers(Family f, long order) {
  if (order < 0) throw std::domain_error("series_numbers: negative order");
  std::vector<Rat> num, den(static_cast<size_t>(order) + 1);
  switch (f) {
    case Family::bernoulli:
      // t/(e^t - 1): cancel the shared factor t, divide 1 by sum t^k/(k+1)!.
      num = {Rat(1)};
      for (long k = 0; k <= order; ++k) den[static_cast<size_t>(k)] = make_rat(1, factorial(k + 1));
      break;
    case Family::euler:
      num = {Rat(2)};
      den[0] = 2;
      for (long k = 1; k <= order; ++k) den[static_cast<size_t>(k)] = make_rat(1, factorial(k));
      break;
    case Family::genocchi:
      num = {Rat(0), Rat(2)};
      den[0] = 2;
      for (long k = 1; k <= order; ++k) den[static_cast<size_t>(k)] = make_rat(1, factorial(k));
      break;
  }
  std::vector<Rat> q = divide_series(num, den, order);
  for (long n = 0; n <= order; ++n) q[static_cast<size_t>(n)] *= Rat(factorial(n));
  return q;
}

}  // namespace genocchi
