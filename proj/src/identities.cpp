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

#include "genocchi/identities.hpp"

#include <algorithm>

#include "genocchi/basis.hpp"
#include "genocchi/integrals.hpp"
#include "genocchi/sequences.hpp"

namespace genocchi {

namespace {

// Genocchi number with out-of-range indices treated as zero. Negative
// indices occur only in audited readings with transposed subscripts.
Rat gnum(long m) { return m < 0 ? Rat(0) : genocchi_number(m); }

// G_m written through Euler numbers: m E_{m-1}, with 0 at m <= 0. The
// Euler-form corollaries substitute this for every Genocchi number.
Rat esub(long m) { return m <= 0 ? Rat(0) : Rat(m) * euler_number(m - 1); }

Rat rfact(long n) { return Rat(factorial(n)); }
Rat rbinom(long n, long k) { return Rat(binomial(n, k)); }

Rat pow2(long e) {
  if (e >= 0) return rat_pow(Rat(2), e);
  return Rat(1) / rat_pow(Rat(2), -e);
}

Rat sign(long e) { return e % 2 == 0 ? Rat(1) : Rat(-1); }

Poly xpow(long n) { return Poly::monomial(n, Rat(1)); }

// Fixed probe offsets for the identities that carry a free shift parameter;
// cycled by n so reruns are byte-identical.
const Rat& probe_offset(long n) {
  static const std::vector<Rat> offsets = {
      make_rat(3, 7), make_rat(-2, 5), make_rat(1, 3), make_rat(-7, 4), make_rat(5, 2)};
  return offsets[static_cast<size_t>(n % 5)];
}

// Builds an Appell-type polynomial from the derivative law alone:
// P_0 = a_0 and P_m = a_m + m * int_0^x P_{m-1}. Shares no code with the
// binomial construction in sequences; the binomial identities are checked
// against this path.
Poly appell_recursive(Family f, long n) {
  Poly p = Poly::constant(family_number(f, 0));
  for (long m = 1; m <= n; ++m) {
    p = Poly::constant(family_number(f, m)) + p.antiderivative() * Rat(m);
  }
  return p;
}

// Closed moment form with every Genocchi number replaced by its Euler form.
Rat t_closed_esub(long m, long n) {
  Rat sum = 0;
  for (long j = 1; j <= n; ++j) {
    sum += sign(j) * rbinom(n + 1, j) / rbinom(m + j, m) * esub(m + j);
  }
  Rat tail = Rat(2) * sign(n + 1) * esub(n + m + 1) / (Rat(n + m + 1) * rbinom(n + m, m));
  return sum / Rat(n + 1) + tail;
}

// ---- right-hand sides of the audited expansion theorems -------------------

// Product sum expanded over the Bernoulli basis, formula as usually printed:
// the leading-coefficient constant keeps a -2 G_{k+1}/(k+1) term inside the
// k-sum and the B_k coefficients distribute the reflection constant over the
// whole inner sum.
Poly product_bernoulli_stated(long n) {
  Rat constant = 0;
  for (long k = 1; k <= n - 1; ++k) {
    constant += t_closed(k, n - k) - Rat(2) * gnum(k + 1) / Rat(k + 1);
  }
  Poly acc = Poly::constant(constant);
  for (long k = 1; k <= n; ++k) {
    Rat inner = 0;
    for (long l = k - 1; l <= n - 1; ++l) {
      inner += Rat(2) - gnum(l - k + 1) - gnum(n - k + 1);
    }
    acc += bernoulli_poly(k) * (rbinom(n + 2, k) / Rat(n + 2) * inner);
  }
  return acc;
}

// Variant reading: the trailing constant terms swept inside the j-sum.
Poly product_bernoulli_wide_j_sum(long n) {
  Rat constant = 0;
  for (long k = 1; k <= n - 1; ++k) {
    for (long j = 1; j <= n - k; ++j) {
      constant += sign(j) * rbinom(n - k + 1, j) /
                  (Rat(n - k + 1) * rbinom(k + j, k)) * gnum(k + j);
      constant += Rat(2) * sign(n - k + 1) * gnum(n + 1) / (Rat(n + 1) * rbinom(n, k));
      constant -= Rat(2) * gnum(k + 1) / Rat(k + 1);
    }
  }
  Poly acc = Poly::constant(constant);
  for (long k = 1; k <= n; ++k) {
    Rat inner = 0;
    for (long l = k - 1; l <= n - 1; ++l) {
      inner += Rat(2) - gnum(l - k + 1) - gnum(n - k + 1);
    }
    acc += bernoulli_poly(k) * (rbinom(n + 2, k) / Rat(n + 2) * inner);
  }
  return acc;
}

// Re-derived form: the constant is sum_k T(k, n-k) with the k = n moment
// taken once, and the B_k coefficient follows from the reflection values
// G_m(1) + G_m = 2 [m = 1].
Poly product_bernoulli_corrected(long n) {
  Rat constant = Rat(-2) * gnum(n + 1) / Rat(n + 1);
  for (long k = 1; k <= n - 1; ++k) constant += t_closed(k, n - k);
  Poly acc = Poly::constant(constant);
  for (long k = 1; k <= n; ++k) {
    Rat tally = 2;
    for (long m = 0; m <= n - k + 1; ++m) tally -= gnum(m);
    tally -= gnum(n - k + 1);
    acc += bernoulli_poly(k) * (rbinom(n + 2, k) / Rat(n + 2) * tally);
  }
  return acc;
}

Poly product_bernoulli_euler_stated(long n) {
  Rat constant = 0;
  for (long k = 1; k <= n - 1; ++k) {
    for (long j = 1; j <= n - k; ++j) {
      constant += sign(j) * Rat(k + j) * rbinom(n - k + 1, j) /
                  (Rat(n - k + 1) * rbinom(k + j, j)) * euler_number(k + j - 1);
    }
    constant += Rat(2) * sign(n - k + 1) * euler_number(n) / rbinom(n, k);
    constant -= Rat(2) * euler_number(k);
  }
  Poly acc = Poly::constant(constant);
  for (long k = 1; k <= n; ++k) {
    Rat inner = 0;
    for (long l = k - 1; l <= n - 1; ++l) {
      inner += Rat(2) - esub(l - k + 1) - esub(n - k + 1);
    }
    acc += bernoulli_poly(k) * (rbinom(n + 2, k) / Rat(n + 2) * inner);
  }
  return acc;
}

Poly product_bernoulli_euler_corrected(long n) {
  Rat constant = Rat(-2) * euler_number(n);
  for (long k = 1; k <= n - 1; ++k) constant += t_closed_esub(k, n - k);
  Poly acc = Poly::constant(constant);
  for (long k = 1; k <= n; ++k) {
    Rat tally = 2;
    for (long m = 0; m <= n - k + 1; ++m) tally -= esub(m);
    tally -= esub(n - k + 1);
    acc += bernoulli_poly(k) * (rbinom(n + 2, k) / Rat(n + 2) * tally);
  }
  return acc;
}

// Product sum over the Euler basis. The subtracted final Genocchi number is
// weighted once per inner term as printed, or once in total under the
// single-final-term reading.
Poly product_euler_printed(long n, bool single_final_term, bool euler_form) {
  Poly acc;
  for (long k = 0; k <= n; ++k) {
    Rat inner = 0;
    for (long l = k; l <= n - 1; ++l) {
      inner += euler_form ? esub(l - k) : gnum(l - k);
      if (!single_final_term) inner -= euler_form ? esub(n - k) : gnum(n - k);
    }
    if (single_final_term && n - 1 >= k) inner -= euler_form ? esub(n - k) : gnum(n - k);
    Rat coeff = Rat(n + 1) * rbinom(n, k) - rbinom(n + 1, k) / 2 * inner;
    acc += euler_poly(k) * coeff;
  }
  return acc;
}

Poly product_euler_corrected(long n, bool euler_form) {
  // b_k = C(n+1,k) (1 - (1/2) sum_{l=k}^{n-1} G_{l-k}) for k < n; b_n = 0.
  Poly acc;
  for (long k = 0; k <= n - 1; ++k) {
    Rat inner = 0;
    for (long l = k; l <= n - 1; ++l) inner += euler_form ? esub(l - k) : gnum(l - k);
    acc += euler_poly(k) * (rbinom(n + 1, k) * (Rat(1) - inner / 2));
  }
  return acc;
}

// Weighted product sum over the Genocchi basis. The printed coefficient
// distributes the reflection constant 2 over every j and (in the statement)
// transposes the inner subscript; both readings are audited.
Poly weighted_genocchi_printed(long n, bool transposed_index) {
  Poly acc;
  for (long l = 1; l <= n; ++l) {
    Rat inner = 0;
    for (long j = l - 1; j <= n; ++j) {
      Rat g = transposed_index ? gnum(j - l + 1) : gnum(l - j + 1);
      inner += (Rat(2) - g) / (rfact(j - l + 1) * rfact(n - j));
    }
    Rat coeff = pow2(l - 2) / rfact(l) * inner +
                pow2(l - 2) / (rfact(l) * rfact(n - l + 1)) * gnum(n - l + 1);
    acc += genocchi_poly(l) * coeff;
  }
  return acc;
}

Poly weighted_genocchi_corrected(long n) {
  Poly acc;
  for (long l = 1; l <= n; ++l) {
    Rat inner = Rat(2) / rfact(n - l);
    for (long j = l - 1; j <= n; ++j) {
      inner -= gnum(j - l + 1) / (rfact(j - l + 1) * rfact(n - j));
    }
    inner += gnum(n - l + 1) / rfact(n - l + 1);
    acc += genocchi_poly(l) * (pow2(l - 2) / rfact(l) * inner);
  }
  return acc;
}

// Weighted product sum over the Bernoulli basis.
Poly weighted_bernoulli_stated(long n) {
  Rat constant = Rat(-2) * gnum(n + 1) / Rat(n + 1);
  for (long l = 1; l <= n - 1; ++l) {
    for (long j = 1; j <= n - l; ++j) {
      constant += sign(j) / (rfact(l) * rfact(n - l + 1)) * rbinom(n - l + 1, j) /
                  rbinom(l + j, l) * gnum(l + j);
    }
    constant += Rat(2) * sign(n - l + 1) * gnum(n + 1) / (Rat(n + 1) * rbinom(n, l));
  }
  Poly acc = Poly::constant(constant);
  for (long k = 1; k <= n; ++k) {
    Rat inner = 0;
    for (long l = k - 1; l <= n; ++l) {
      inner += (Rat(2) - gnum(l - k + 1)) / (rfact(l - k + 1) * rfact(n - l));
    }
    Rat coeff = pow2(k - 1) / rfact(k) * inner -
                pow2(k - 1) / (rfact(k) * rfact(n - k + 1)) * gnum(n - k + 1);
    acc += bernoulli_poly(k) * coeff;
  }
  return acc;
}

Poly weighted_bernoulli_corrected(long n) {
  // a_0 = sum_l T(l, n-l)/(l!(n-l)!) with the closed moment form for the
  // interior terms and the mean value -2 G_{n+1}/(n+1) at l = n.
  Rat constant = Rat(-2) * gnum(n + 1) / Rat(n + 1) / rfact(n);
  for (long l = 1; l <= n - 1; ++l) {
    constant += t_closed(l, n - l) / (rfact(l) * rfact(n - l));
  }
  Poly acc = Poly::constant(constant);
  for (long k = 1; k <= n; ++k) {
    Rat inner = Rat(2) / rfact(n - k);
    for (long l = k - 1; l <= n; ++l) {
      inner -= gnum(l - k + 1) / (rfact(l - k + 1) * rfact(n - l));
    }
    inner -= gnum(n - k + 1) / rfact(n - k + 1);
    acc += bernoulli_poly(k) * (pow2(k - 1) / rfact(k) * inner);
  }
  return acc;
}

// Euler form of the weighted Bernoulli expansion. The printed inner sum is
// singular at its lower bound l = k-1 (a 2/(l-k+1) term); `boundary` selects
// how that term is handled: dropped, or restored from the pre-substitution
// value 2/(n-k+1)!.
Poly weighted_bernoulli_euler_stated(long n, bool g_form_boundary) {
  Rat constant = Rat(-2) * euler_number(n);
  for (long l = 1; l <= n - 1; ++l) {
    for (long j = 1; j <= n - l; ++j) {
      constant += sign(j) / (rfact(l) * rfact(n - l + 1)) * Rat(l + j) *
                  rbinom(n - l + 1, j) / rbinom(l + j, l) * euler_number(l + j - 1);
    }
    constant += Rat(2) * sign(n - l + 1) * euler_number(n) / rbinom(n, l);
  }
  Poly acc = Poly::constant(constant);
  for (long k = 1; k <= n; ++k) {
    Rat inner = 0;
    if (g_form_boundary) inner += Rat(2) / rfact(n - k + 1);
    for (long l = k; l <= n; ++l) {
      inner += (Rat(2) / Rat(l - k + 1) - euler_number(l - k)) /
               (rfact(l - k) * rfact(n - l));
    }
    Rat coeff = pow2(k - 1) / rfact(k) * inner -
                pow2(k - 1) / (rfact(k) * rfact(n - k)) * euler_number(n - k);
    acc += bernoulli_poly(k) * coeff;
  }
  return acc;
}

Poly weighted_bernoulli_euler_corrected(long n) {
  Rat constant = Rat(-2) * euler_number(n) / rfact(n);
  for (long l = 1; l <= n - 1; ++l) {
    constant += t_closed_esub(l, n - l) / (rfact(l) * rfact(n - l));
  }
  Poly acc = Poly::constant(constant);
  for (long k = 1; k <= n; ++k) {
    Rat inner = Rat(2) / rfact(n - k);
    for (long l = k - 1; l <= n; ++l) {
      inner -= esub(l - k + 1) / (rfact(l - k + 1) * rfact(n - l));
    }
    inner -= esub(n - k + 1) / rfact(n - k + 1);
    acc += bernoulli_poly(k) * (pow2(k - 1) / rfact(k) * inner);
  }
  return acc;
}

// Harmonic-weighted product sum over the Genocchi basis. The k = 0 term of
// the printed sum multiplies G_0(x) = 0 and is skipped.
Poly harmonic_genocchi_stated(long n, bool euler_form) {
  Poly acc;
  for (long k = 1; k <= n; ++k) {
    Rat inner = 0;
    for (long l = k; l <= n - 1; ++l) {
      if (euler_form) {
        inner += (Rat(2) / Rat(l - k + 1) - euler_number(l - k)) / Rat(n - l);
      } else {
        inner += (Rat(2) - gnum(l - k + 1)) / (Rat(n - l) * Rat(l - k + 1));
      }
    }
    Rat coeff = rbinom(n, k) * (harmonic(n - 1) - harmonic(n - k)) / (Rat(2) * Rat(n - k + 1)) -
                rbinom(n, k) / (Rat(2) * Rat(n)) * inner;
    Poly basis_elem = euler_form ? euler_poly(k - 1) * Rat(k) : genocchi_poly(k);
    acc += basis_elem * coeff;
  }
  return acc;
}

Poly harmonic_genocchi_corrected(long n, bool euler_form) {
  Poly acc;
  for (long k = 1; k <= n - 1; ++k) {
    Rat inner = Rat(2) / Rat(n - k);
    for (long l = k; l <= n - 1; ++l) {
      if (euler_form) {
        inner -= euler_number(l - k) / Rat(n - l);
      } else {
        inner -= gnum(l - k + 1) / (Rat(n - l) * Rat(l - k + 1));
      }
    }
    Rat coeff = rbinom(n, k) / (Rat(2) * Rat(n)) * inner;
    Poly basis_elem = euler_form ? euler_poly(k - 1) * Rat(k) : genocchi_poly(k);
    acc += basis_elem * coeff;
  }
  Rat top = harmonic(n - 1) / Rat(n);
  acc += (euler_form ? euler_poly(n - 1) * Rat(n) : genocchi_poly(n)) * top;
  return acc;
}

// The harmonic coefficients C_k and the binomial-harmonic relation for them,
// packed as polynomials so a residual localizes the failing k.
Poly harmonic_coefficient_lhs(long n) {
  Poly acc;
  for (long k = 1; k <= n; ++k) {
    acc += xpow(k) * (harmonic_weight_coefficient(n, k - 1) / rfact(k));
  }
  return acc;
}

Poly harmonic_coefficient_rhs(long n, bool corrected) {
  Poly acc;
  for (long k = 1; k <= n; ++k) {
    Rat v = rbinom(n, k) * (harmonic(n - 1) - harmonic(n - k)) / Rat(n - k + 1);
    if (corrected) v /= Rat(n);
    acc += xpow(k) * v;
  }
  return acc;
}

void add_identity(std::vector<Identity>& out, Identity id) {
  std::sort(id.readings.begin(), id.readings.end(),
            [](const Reading& a, const Reading& b) { return a.id < b.id; });
  out.push_back(std::move(id));
}

std::vector<Identity> build_registry() {
  std::vector<Identity> ids;

  // ---- foundation: independently derivable facts; all must verify --------

  add_identity(ids, {
      "fundamental-integral", Suite::foundation,
      "int_b^x G_n = (G_{n+1}(x) - G_{n+1}(b))/(n+1), b a fixed probe offset",
      0,
      [](long n) {
        Poly a = genocchi_poly(n).antiderivative();
        return a - Poly::constant(a.eval(probe_offset(n)));
      },
      {{"stated",
        [](long n) {
          Poly g = genocchi_poly(n + 1);
          return (g - Poly::constant(g.eval(probe_offset(n)))) * make_rat(1, n + 1);
        }}},
  });

  add_identity(ids, {
      "genocchi-binomial", Suite::foundation,
      "G_n(x) = sum_k C(n,k) G_k x^{n-k}, against the derivative-law construction",
      0,
      [](long n) { return appell_recursive(Family::genocchi, n); },
      {{"stated", [](long n) { return genocchi_poly(n); }}},
  });

  add_identity(ids, {
      "bernoulli-binomial", Suite::foundation,
      "B_n(x) = sum_k C(n,k) B_k x^{n-k}, against the derivative-law construction",
      0,
      [](long n) { return appell_recursive(Family::bernoulli, n); },
      {{"stated", [](long n) { return bernoulli_poly(n); }}},
  });

  add_identity(ids, {
      "euler-binomial", Suite::foundation,
      "E_n(x) = sum_k C(n,k) E_k x^{n-k}, against the derivative-law construction",
      0,
      [](long n) { return appell_recursive(Family::euler, n); },
      {{"stated", [](long n) { return euler_poly(n); }}},
  });

  add_identity(ids, {
      "mean-value", Suite::foundation,
      "int_0^1 G_n = -2 G_{n+1}/(n+1)",
      1,
      [](long n) { return Poly::constant(genocchi_poly(n).integrate(Rat(0), Rat(1))); },
      {{"stated",
        [](long n) { return Poly::constant(Rat(-2) * genocchi_number(n + 1) / Rat(n + 1)); }}},
  });

  add_identity(ids, {
      "difference-equation", Suite::foundation,
      "(G_{n+1}(x+1) + G_{n+1}(x))/(n+1) = 2 x^n",
      0,
      [](long n) {
        Poly g = genocchi_poly(n + 1);
        return (g.shift(Rat(1)) + g) * make_rat(1, n + 1);
      },
      {{"stated", [](long n) { return xpow(n) * Rat(2); }}},
  });

  add_identity(ids, {
      "moment-closed-form", Suite::foundation,
      "closed form of T(m,n) in Genocchi numbers, packed along m + n = const",
      2,
      [](long n) {
        Poly acc;
        for (long m = 1; m <= n - 1; ++m) acc += xpow(m) * t_oracle(m, n - m);
        return acc;
      },
      {{"stated",
        [](long n) {
          Poly acc;
          for (long m = 1; m <= n - 1; ++m) acc += xpow(m) * t_closed(m, n - m);
          return acc;
        }},
       {"prefactor-total",
        [](long n) {
          Poly acc;
          for (long m = 1; m <= n - 1; ++m) acc += xpow(m) * t_closed_full_prefactor(m, n - m);
          return acc;
        }}},
  });

  add_identity(ids, {
      "addition-theorem", Suite::foundation,
      "G_n(x+y) = sum_k C(n,k) G_k(x) y^{n-k} at a fixed probe offset y",
      0,
      [](long n) { return genocchi_poly(n).shift(probe_offset(n)); },
      {{"stated",
        [](long n) {
          const Rat& y = probe_offset(n);
          Poly acc;
          for (long k = 0; k <= n; ++k) {
            acc += genocchi_poly(k) * (rbinom(n, k) * rat_pow(y, n - k));
          }
          return acc;
        }}},
  });

  add_identity(ids, {
      "doubling", Suite::foundation,
      "G_n(2x)/n! = sum_k G_k(x) x^{n-k}/(k!(n-k)!)",
      0,
      [](long n) { return genocchi_poly(n).dilate(Rat(2)) * (Rat(1) / rfact(n)); },
      {{"stated", [](long n) { return weighted_product_sum(n); }}},
  });

  add_identity(ids, {
      "euler-bridge", Suite::foundation,
      "G_{n+1}/(n+1) = E_n",
      0,
      [](long n) { return Poly::constant(genocchi_number(n + 1) / Rat(n + 1)); },
      {{"stated", [](long n) { return Poly::constant(euler_number(n)); }}},
  });

  // ---- audited expansion theorems ----------------------------------------

  add_identity(ids, {
      "product-bernoulli", Suite::theorems,
      "sum_l G_l(x) x^{n-l} expanded over the Bernoulli basis",
      2,
      [](long n) { return product_sum(n); },
      {{"stated", product_bernoulli_stated},
       {"wide-j-sum", product_bernoulli_wide_j_sum},
       {"corrected", product_bernoulli_corrected}},
  });

  add_identity(ids, {
      "product-bernoulli-euler-form", Suite::theorems,
      "the same expansion with Genocchi numbers written as (m+1) E_m",
      2,
      [](long n) { return product_sum(n); },
      {{"stated", product_bernoulli_euler_stated},
       {"corrected", product_bernoulli_euler_corrected}},
  });

  add_identity(ids, {
      "product-euler", Suite::theorems,
      "sum_l G_l(x) x^{n-l} expanded over the Euler basis",
      1,
      [](long n) { return product_sum(n); },
      {{"stated", [](long n) { return product_euler_printed(n, false, false); }},
       {"single-final-term", [](long n) { return product_euler_printed(n, true, false); }},
       {"corrected", [](long n) { return product_euler_corrected(n, false); }}},
  });

  add_identity(ids, {
      "product-euler-euler-form", Suite::theorems,
      "the Euler-basis expansion with Genocchi numbers written as (m+1) E_m",
      1,
      [](long n) { return product_sum(n); },
      {{"stated", [](long n) { return product_euler_printed(n, false, true); }},
       {"single-final-term", [](long n) { return product_euler_printed(n, true, true); }},
       {"corrected", [](long n) { return product_euler_corrected(n, true); }}},
  });

  add_identity(ids, {
      "weighted-genocchi", Suite::theorems,
      "sum_l G_l(x) x^{n-l}/(l!(n-l)!) expanded over the Genocchi basis",
      1,
      [](long n) { return weighted_product_sum(n); },
      {{"stated", [](long n) { return weighted_genocchi_printed(n, false); }},
       {"transposed-index", [](long n) { return weighted_genocchi_printed(n, true); }},
       {"corrected", weighted_genocchi_corrected}},
  });

  add_identity(ids, {
      "weighted-bernoulli", Suite::theorems,
      "sum_l G_l(x) x^{n-l}/(l!(n-l)!) expanded over the Bernoulli basis",
      1,
      [](long n) { return weighted_product_sum(n); },
      {{"stated", weighted_bernoulli_stated},
       {"corrected", weighted_bernoulli_corrected}},
  });

  add_identity(ids, {
      "weighted-bernoulli-euler-form", Suite::theorems,
      "the weighted Bernoulli expansion with Genocchi numbers written as (m+1) E_m",
      1,
      [](long n) { return weighted_product_sum(n); },
      {{"stated-from-k", [](long n) { return weighted_bernoulli_euler_stated(n, false); }},
       {"stated-g-form-boundary",
        [](long n) { return weighted_bernoulli_euler_stated(n, true); }},
       {"corrected", weighted_bernoulli_euler_corrected}},
  });

  add_identity(ids, {
      "doubling-genocchi", Suite::theorems,
      "G_n(2x)/n! against the Genocchi-basis expansion of the weighted sum",
      1,
      [](long n) { return genocchi_poly(n).dilate(Rat(2)) * (Rat(1) / rfact(n)); },
      {{"stated", [](long n) { return weighted_genocchi_printed(n, false); }},
       {"transposed-index", [](long n) { return weighted_genocchi_printed(n, true); }},
       {"corrected", weighted_genocchi_corrected}},
  });

  add_identity(ids, {
      "harmonic-genocchi", Suite::theorems,
      "sum_k G_k(x) x^{n-k}/(k(n-k)) expanded over the Genocchi basis",
      2,
      [](long n) { return harmonic_product_sum(n); },
      {{"stated", [](long n) { return harmonic_genocchi_stated(n, false); }},
       {"corrected", [](long n) { return harmonic_genocchi_corrected(n, false); }}},
  });

  add_identity(ids, {
      "harmonic-genocchi-euler-form", Suite::theorems,
      "the harmonic expansion with G_k(x) written as k E_{k-1}(x)",
      2,
      [](long n) { return harmonic_product_sum(n); },
      {{"stated", [](long n) { return harmonic_genocchi_stated(n, true); }},
       {"corrected", [](long n) { return harmonic_genocchi_corrected(n, true); }}},
  });

  add_identity(ids, {
      "harmonic-coefficient", Suite::theorems,
      "C_{k-1}/k! against the binomial-harmonic form, packed over k",
      1,
      harmonic_coefficient_lhs,
      {{"stated", [](long n) { return harmonic_coefficient_rhs(n, false); }},
       {"corrected", [](long n) { return harmonic_coefficient_rhs(n, true); }}},
  });

  return ids;
}

const Identity& find_identity(const std::string& id) {
  for (const Identity& ident : registry()) {
    if (ident.id == id) return ident;
  }
  throw std::invalid_argument("unknown identity '" + id + "'");
}

Report make_report(const Identity& ident, const Reading& reading, long n) {
  Report r;
  r.identity = ident.id;
  r.reading = reading.id;
  r.n = n;
  if (n < ident.min_n) {
    r.status = Status::not_applicable;
    return r;
  }
  r.lhs = ident.lhs(n);
  r.rhs = reading.rhs(n);
  r.residual = r.lhs - r.rhs;
  r.status = r.residual.is_zero() ? Status::exact : Status::mismatch;
  return r;
}

}  // namespace

const std::vector<Identity>& registry() {
  static const std::vector<Identity> ids = build_registry();
  return ids;
}

Poly product_sum(long n) {
  if (n < 0) throw std::domain_error("product_sum: negative index");
  Poly acc;
  for (long l = 0; l <= n; ++l) acc += genocchi_poly(l) * xpow(n - l);
  return acc;
}

Poly weighted_product_sum(long n) {
  if (n < 0) throw std::domain_error("weighted_product_sum: negative index");
  Poly acc;
  for (long l = 0; l <= n; ++l) {
    acc += genocchi_poly(l) * xpow(n - l) * (Rat(1) / (rfact(l) * rfact(n - l)));
  }
  return acc;
}

Poly harmonic_product_sum(long n) {
  if (n < 2) throw std::domain_error("harmonic_product_sum: n must be >= 2");
  Poly acc;
  for (long k = 1; k <= n - 1; ++k) {
    acc += genocchi_poly(k) * xpow(n - k) * make_rat(1, k * (n - k));
  }
  return acc;
}

Rat harmonic_weight_coefficient(long n, long k) {
  if (k < 0 || k > n - 1) {
    throw std::domain_error("harmonic_weight_coefficient: k out of range");
  }
  if (k == 0) return 0;
  Int sum = 0;
  for (long j = 1; j <= k; ++j) {
    Int prod = 1;
    for (long i = 1; i <= k; ++i) {
      if (i != j) prod *= Int(n - i);
    }
    sum += prod;
  }
  return make_rat(sum, Int(n - k));
}

Poly rhs_for(const std::string& identity, const std::string& reading, long n) {
  const Identity& ident = find_identity(identity);
  for (const Reading& r : ident.readings) {
    if (r.id == reading) return r.rhs(n);
  }
  throw std::invalid_argument("unknown reading '" + reading + "' for identity '" + identity +
                              "'");
}

std::vector<Report> verify(const std::string& identity, const std::vector<long>& ns) {
  const Identity& ident = find_identity(identity);
  std::vector<long> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Report> out;
  for (long n : sorted) {
    for (const Reading& r : ident.readings) out.push_back(make_report(ident, r, n));
  }
  return out;
}

std::vector<Report> verify_suite(std::optional<Suite> suite, long max_n, bool stated_only) {
  std::vector<Report> out;
  for (const Identity& ident : registry()) {
    if (suite && ident.suite != *suite) continue;
    for (long n = ident.min_n; n <= max_n; ++n) {
      for (const Reading& r : ident.readings) {
        if (stated_only && r.id.rfind("stated", 0) != 0) continue;
        out.push_back(make_report(ident, r, n));
      }
    }
  }
  return out;
}

std::vector<Report> verify_foundation(long max_n) {
  return verify_suite(Suite::foundation, max_n);
}

bool all_identities_have_exact_reading(const std::vector<Report>& reports) {
  // reading -> (saw exact, saw mismatch), grouped per identity
  struct Tally {
    bool exact = false;
    bool mismatch = false;
  };
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, Tally>>>> grouped;
  for (const Report& r : reports) {
    auto git = std::find_if(grouped.begin(), grouped.end(),
                            [&](const auto& g) { return g.first == r.identity; });
    if (git == grouped.end()) {
      grouped.push_back({r.identity, {}});
      git = std::prev(grouped.end());
    }
    auto rit = std::find_if(git->second.begin(), git->second.end(),
                            [&](const auto& t) { return t.first == r.reading; });
    if (rit == git->second.end()) {
      git->second.push_back({r.reading, {}});
      rit = std::prev(git->second.end());
    }
    if (r.status == Status::exact) rit->second.exact = true;
    if (r.status == Status::mismatch) rit->second.mismatch = true;
  }
  for (const auto& [identity, readings] : grouped) {
    bool ok = false;
    for (const auto& [reading, tally] : readings) {
      if (tally.exact && !tally.mismatch) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::exact: return "exact";
    case Status::mismatch: return "mismatch";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

}  // namespace genocchi
