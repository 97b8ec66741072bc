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

#include "genocchi/basis.hpp"

namespace genocchi {

Expansion to_basis(const Poly& p, BasisKind kind) {
  if (kind == BasisKind::power) {
    Expansion e{kind, 0, p.coeffs()};
    if (e.coeffs.empty()) e.coeffs.push_back(Rat(0));
    return e;
  }
  const long n = p.is_zero() ? 0 : p.degree();
  Expansion e;
  e.kind = kind;
  switch (kind) {
    case BasisKind::bernoulli: {
      e.start_index = 0;
      e.coeffs.resize(static_cast<size_t>(n) + 1, Rat(0));
      e.coeffs[0] = p.integrate(Rat(0), Rat(1));
      Poly d = p;
      for (long k = 1; k <= n; ++k) {
        e.coeffs[static_cast<size_t>(k)] = (d.eval(1) - d.eval(0)) / Rat(factorial(k));
        d = d.derivative();
      }
      break;
    }
    case BasisKind::euler: {
      e.start_index = 0;
      e.coeffs.resize(static_cast<size_t>(n) + 1, Rat(0));
      Poly d = p;
      for (long k = 0; k <= n; ++k) {
        e.coeffs[static_cast<size_t>(k)] = (d.eval(1) + d.eval(0)) / (Rat(2) * Rat(factorial(k)));
        d = d.derivative();
      }
      break;
    }
    case BasisKind::genocchi: {
      e.start_index = 1;
      if (p.is_zero()) {
        e.coeffs.assign(1, Rat(0));
        return e;
      }
      e.coeffs.resize(static_cast<size_t>(n) + 1, Rat(0));
      Poly d = p;
      for (long k = 1; k <= n + 1; ++k) {
        e.coeffs[static_cast<size_t>(k - 1)] =
            (d.eval(1) + d.eval(0)) / (Rat(2) * Rat(factorial(k)));
        d = d.derivative();
      }
      break;
    }
    default: break;
  }
  return e;
}

Poly from_basis(const Expansion& e) {
  if (e.kind == BasisKind::power) {
    return Poly(e.coeffs);
  }
  Family f = e.kind == BasisKind::bernoulli ? Family::bernoulli
             : e.kind == BasisKind::euler   ? Family::euler
                                            : Family::genocchi;
  Poly acc;
  for (size_t i = 0; i < e.coeffs.size(); ++i) {
    if (e.coeffs[i] == 0) continue;
    acc += family_poly(f, e.start_index + static_cast<long>(i)) * e.coeffs[i];
  }
  return acc;
}

TriMatrix genocchi_change_matrix(long n) {
  if (n < 0) throw std::domain_error("genocchi_change_matrix: negative size");
  TriMatrix m;
  m.n = n;
  m.entries.assign(static_cast<size_t>(n) + 1,
                   std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
  for (long j = 0; j <= n; ++j) {
    Poly g = genocchi_poly(j + 1);
    for (long i = 0; i <= j; ++i) {
      m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = g.coeff(i);
    }
  }
  return m;
}

std::vector<Rat> solve_upper_triangular(const TriMatrix& m, const Poly& p) {
  const long n = m.n;
  if (p.degree() > n) throw std::domain_error("solve_upper_triangular: polynomial too large");
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  for (long i = n; i >= 0; --i) {
    Rat acc = p.coeff(i);
    for (long j = i + 1; j <= n; ++j) {
      acc -= m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] * c[static_cast<size_t>(j)];
    }
    const Rat& diag = m.entries[static_cast<size_t>(i)][static_cast<size_t>(i)];
    if (diag == 0) throw std::domain_error("solve_upper_triangular: zero diagonal entry");
    c[static_cast<size_t>(i)] = acc / diag;
  }
  return c;
}

std::string to_string(BasisKind k) {
  switch (k) {
    case BasisKind::power: return "power";
    case BasisKind::bernoulli: return "bernoulli";
    case BasisKind::euler: return "euler";
    case BasisKind::genocchi: return "genocchi";
  }
  return "?";
}

BasisKind parse_basis(const std::string& name) {
  if (name == "power") return BasisKind::power;
  if (name == "bernoulli") return BasisKind::bernoulli;
  if (name == "euler") return BasisKind::euler;
  if (name == "genocchi") return BasisKind::genocchi;
  throw std::invalid_argument("unknown basis '" + name + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::bernoulli: return "bernoulli";
    case Family::euler: return "euler";
    case Family::genocchi: return "genocchi";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "bernoulli") return Family::bernoulli;
  if (name == "euler") return Family::euler;
  if (name == "genocchi") return Family::genocchi;
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace genocchi
