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

#include "genocchi/exact.hpp"

#include <cctype>

namespace genocchi {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative n");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rat harmonic(long n) {
  if (n < 0) throw std::domain_error("harmonic: negative n");
  Rat h = 0;
  for (long j = 1; j <= n; ++j) h += make_rat(1, j);
  return h;
}

int kronecker(long n, long m) { return n == m ? 1 : 0; }

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) throw std::domain_error("rat_pow: negative exponent");
  Rat acc = 1;
  for (long i = 0; i < e; ++i) acc *= base;
  return acc;
}

std::string to_frac(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_plain(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_frac(r);
}

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw parse_error("empty rational token");
  auto slash = t.find('/');
  std::string_view num = trim(t.substr(0, slash));
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : trim(t.substr(slash + 1));
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw parse_error("bad rational token '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);  // mpz rejects a leading '+'
  if (den.front() == '+') den.remove_prefix(1);
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  return make_rat(n, d);
}

}  // namespace genocchi
