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

#include "genocchi/polynomial.hpp"

#include <algorithm>

namespace genocchi {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(long deg, const Rat& c) {
  if (deg < 0) throw std::domain_error("monomial: negative degree");
  std::vector<Rat> v(static_cast<size_t>(deg) + 1, Rat(0));
  v.back() = c;
  return Poly(std::move(v));
}

Rat Poly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rat> v = c_;
  for (auto& r : v) r = -r;
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly Poly::derivative(long k) const {
  if (k < 0) throw std::domain_error("derivative: negative order");
  if (k == 0) return *this;
  if (k > degree()) return Poly();
  std::vector<Rat> v(c_.size() - static_cast<size_t>(k));
  // factor (i+k)! / i! on the coefficient of x^{i+k}
  for (size_t i = 0; i < v.size(); ++i) {
    Int f = 1;
    for (long j = 1; j <= k; ++j) f *= Int(static_cast<long>(i) + j);
    v[i] = c_[i + static_cast<size_t>(k)] * Rat(f);
  }
  return Poly(std::move(v));
}

Poly Poly::antiderivative() const {
  if (is_zero()) return Poly();
  std::vector<Rat> v(c_.size() + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    v[i + 1] = c_[i] / Rat(static_cast<long>(i) + 1);
  }
  return Poly(std::move(v));
}

Rat Poly::integrate(const Rat& a, const Rat& b) const {
  Poly anti = antiderivative();
  Rat r = anti.eval(b) - anti.eval(a);
  return r;
}

Poly Poly::shift(const Rat& c) const {
  // p(x + c) = sum_i p_i (x + c)^i, (x + c)^i expanded incrementally.
  Poly result;
  Poly pw = Poly::constant(1);
  Poly base(std::vector<Rat>{c, Rat(1)});
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) result += pw * c_[i];
    if (i + 1 < c_.size()) pw = pw * base;
  }
  return result;
}

Poly Poly::dilate(const Rat& c) const {
  std::vector<Rat> v = c_;
  Rat pw = 1;
  for (size_t i = 1; i < v.size(); ++i) {
    pw *= c;
    v[i] *= pw;
  }
  return Poly(std::move(v));
}

std::string Poly::to_csv(bool frac) const {
  if (c_.empty()) return frac ? "0/1" : "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += frac ? to_frac(c_[i]) : to_plain(c_[i]);
  }
  return out;
}

Poly Poly::parse_csv(std::string_view text) {
  std::vector<Rat> v;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    v.push_back(parse_rat(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Poly(std::move(v));
}

Poly operator+(Poly a, const Poly& b) {
  a += b;
  return a;
}

Poly operator-(Poly a, const Poly& b) {
  a -= b;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Rat> v(ac.size() + bc.size() - 1, Rat(0));
  for (size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (size_t j = 0; j < bc.size(); ++j) v[i + j] += ac[i] * bc[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Poly& p, const Rat& s) {
  if (s == 0) return Poly();
  std::vector<Rat> v = p.coeffs();
  for (auto& r : v) r *= s;
  return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& p) { return p * s; }

bool operator==(const Poly& a, const Poly& b) {
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  if (ac.size() != bc.size()) return false;
  for (size_t i = 0; i < ac.size(); ++i) {
    if (mpq_cmp(ac[i].get_mpq_t(), bc[i].get_mpq_t()) != 0) return false;
  }
  return true;
}

}  // namespace genocchi
