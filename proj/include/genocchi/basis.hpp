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

#ifndef GENOCCHI_BASIS_HPP
#define GENOCCHI_BASIS_HPP

#include <string>
#include <vector>

#include "genocchi/sequences.hpp"

namespace genocchi {

enum class BasisKind { power, bernoulli, euler, genocchi };

/// Coefficients of a polynomial in one of the four bases. coeffs[i] belongs
/// to basis element start_index + i. The Genocchi basis of the degree-n space
/// is {G_1, ..., G_{n+1}} and starts at 1; the others start at 0.
struct Expansion {
  BasisKind kind = BasisKind::power;
  long start_index = 0;
  std::vector<Rat> coeffs;
};

/// Expands p in the given basis. The Bernoulli coefficients come from
/// a_0 = int_0^1 p and a_k = (p^(k-1)(1) - p^(k-1)(0)) / k!; the Euler ones
/// from b_k = (p^(k)(1) + p^(k)(0)) / (2 k!); the Genocchi ones from
/// a_k = (p^(k-1)(1) + p^(k-1)(0)) / (2 k!), k = 1..deg+1. The zero
/// polynomial yields a single zero coefficient.
Expansion to_basis(const Poly& p, BasisKind kind);

/// sum coeffs[i] * basis_{start_index + i}(x).
Poly from_basis(const Expansion& e);

/// Upper-triangular change-of-basis matrix of the Genocchi basis: column j
/// (1-based) holds the power-basis coefficients of G_j(x), so entry (i, j)
/// is the coefficient of x^{i-1} in G_j and the diagonal is 1, 2, ..., n+1.
struct TriMatrix {
  long n = 0;                            // matrix is (n+1) x (n+1)
  std::vector<std::vector<Rat>> entries; // row-major, 0-based
};

TriMatrix genocchi_change_matrix(long n);

/// Back-substitution for m * c = p (power-basis coordinates of p). Requires
/// deg(p) <= m.n; throws std::domain_error on a zero diagonal entry. The
/// result vector c matches to_basis(p, genocchi) padded to length n+1.
std::vector<Rat> solve_upper_triangular(const TriMatrix& m, const Poly& p);

std::string to_string(BasisKind k);
BasisKind parse_basis(const std::string& name);  // throws std::invalid_argument

std::string to_string(Family f);
Family parse_family(const std::string& name);    // throws std::invalid_argument

}  // namespace genocchi

#endif
