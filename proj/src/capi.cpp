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

#include "genocchi.h"

#include <cstring>
#include <string>

#include "genocchi/basis.hpp"
#include "genocchi/identities.hpp"
#include "genocchi/integrals.hpp"
#include "genocchi/render.hpp"

using namespace genocchi;

struct gp_poly {
  Poly value;
};

struct gp_expansion {
  Expansion value;
};

struct gp_matrix {
  TriMatrix value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into status codes + gp_last_error.
template <typename Fn>
gp_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return GP_OK;
  } catch (const parse_error& e) {
    g_last_error = e.what();
    return GP_ERROR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return GP_ERROR_INVALID;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return GP_ERROR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GP_ERROR_INTERNAL;
  }
}

gp_status require(bool cond, const char* msg) {
  if (cond) return GP_OK;
  g_last_error = msg;
  return GP_ERROR_INVALID;
}

}  // namespace

extern "C" {

const char* gp_version(void) { return "0.1.0"; }

const char* gp_last_error(void) { return g_last_error.c_str(); }

void gp_string_free(char* s) { delete[] s; }

gp_status gp_number(const char* family, long n, char** out) {
  if (gp_status s = require(family && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = dup_string(to_frac(family_number(parse_family(family), n))); });
}

gp_status gp_number_series(const char* family, long n, char** out) {
  if (gp_status s = require(family && out, "null argument"); s != GP_OK) return s;
  return guarded([&] {
    auto values = series_numbers(parse_family(family), n);
    *out = dup_string(to_frac(values.at(static_cast<size_t>(n))));
  });
}

gp_status gp_polynomial(const char* family, long n, char** out_csv) {
  if (gp_status s = require(family && out_csv, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out_csv = dup_string(family_poly(parse_family(family), n).to_csv()); });
}

gp_status gp_poly_parse(const char* csv, gp_poly** out) {
  if (gp_status s = require(csv && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_poly{Poly::parse_csv(csv)}; });
}

void gp_poly_free(gp_poly* p) { delete p; }

gp_status gp_poly_to_csv(const gp_poly* p, char** out) {
  if (gp_status s = require(p && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = dup_string(p->value.to_csv()); });
}

long gp_poly_degree(const gp_poly* p) { return p ? p->value.degree() : -1; }

gp_status gp_poly_eval(const gp_poly* p, const char* x, char** out) {
  if (gp_status s = require(p && x && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = dup_string(to_plain(p->value.eval(parse_rat(x)))); });
}

gp_status gp_poly_add(const gp_poly* a, const gp_poly* b, gp_poly** out) {
  if (gp_status s = require(a && b && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_poly{a->value + b->value}; });
}

gp_status gp_poly_sub(const gp_poly* a, const gp_poly* b, gp_poly** out) {
  if (gp_status s = require(a && b && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_poly{a->value - b->value}; });
}

gp_status gp_poly_mul(const gp_poly* a, const gp_poly* b, gp_poly** out) {
  if (gp_status s = require(a && b && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_poly{a->value * b->value}; });
}

gp_status gp_poly_scale(const gp_poly* p, const char* c, gp_poly** out) {
  if (gp_status s = require(p && c && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_poly{p->value * parse_rat(c)}; });
}

gp_status gp_poly_derivative(const gp_poly* p, long k, gp_poly** out) {
  if (gp_status s = require(p && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_poly{p->value.derivative(k)}; });
}

gp_status gp_poly_shift(const gp_poly* p, const char* c, gp_poly** out) {
  if (gp_status s = require(p && c && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_poly{p->value.shift(parse_rat(c))}; });
}

gp_status gp_poly_dilate(const gp_poly* p, const char* c, gp_poly** out) {
  if (gp_status s = require(p && c && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_poly{p->value.dilate(parse_rat(c))}; });
}

gp_status gp_poly_integrate(const gp_poly* p, const char* a, const char* b, char** out) {
  if (gp_status s = require(p && a && b && out, "null argument"); s != GP_OK) return s;
  return guarded(
      [&] { *out = dup_string(to_plain(p->value.integrate(parse_rat(a), parse_rat(b)))); });
}

gp_status gp_expand(const gp_poly* p, const char* basis, gp_expansion** out) {
  if (gp_status s = require(p && basis && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_expansion{to_basis(p->value, parse_basis(basis))}; });
}

void gp_expansion_free(gp_expansion* e) { delete e; }

long gp_expansion_size(const gp_expansion* e) {
  return e ? static_cast<long>(e->value.coeffs.size()) : 0;
}

long gp_expansion_start(const gp_expansion* e) { return e ? e->value.start_index : 0; }

gp_status gp_expansion_coeff(const gp_expansion* e, long k, char** out) {
  if (gp_status s = require(e && out, "null argument"); s != GP_OK) return s;
  long i = k - e->value.start_index;
  if (i < 0 || i >= static_cast<long>(e->value.coeffs.size())) {
    g_last_error = "expansion index out of range";
    return GP_ERROR_INVALID;
  }
  return guarded([&] { *out = dup_string(to_frac(e->value.coeffs[static_cast<size_t>(i)])); });
}

gp_status gp_expansion_to_poly(const gp_expansion* e, gp_poly** out) {
  if (gp_status s = require(e && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_poly{from_basis(e->value)}; });
}

gp_status gp_matrix_create(long n, gp_matrix** out) {
  if (gp_status s = require(out != nullptr, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = new gp_matrix{genocchi_change_matrix(n)}; });
}

void gp_matrix_free(gp_matrix* m) { delete m; }

long gp_matrix_dim(const gp_matrix* m) { return m ? m->value.n + 1 : 0; }

gp_status gp_matrix_entry(const gp_matrix* m, long row, long col, char** out) {
  if (gp_status s = require(m && out, "null argument"); s != GP_OK) return s;
  long dim = m->value.n + 1;
  if (row < 0 || col < 0 || row >= dim || col >= dim) {
    g_last_error = "matrix index out of range";
    return GP_ERROR_INVALID;
  }
  return guarded([&] {
    *out = dup_string(
        to_frac(m->value.entries[static_cast<size_t>(row)][static_cast<size_t>(col)]));
  });
}

gp_status gp_matrix_solve(const gp_matrix* m, const gp_poly* p, gp_expansion** out) {
  if (gp_status s = require(m && p && out, "null argument"); s != GP_OK) return s;
  return guarded([&] {
    Expansion e;
    e.kind = BasisKind::genocchi;
    e.start_index = 1;
    e.coeffs = solve_upper_triangular(m->value, p->value);
    *out = new gp_expansion{std::move(e)};
  });
}

gp_status gp_moment(char kind, long m, long n, char** out) {
  if (gp_status s = require(out != nullptr, "null argument"); s != GP_OK) return s;
  return guarded([&] {
    Rat v;
    switch (kind) {
      case 'T': v = t_oracle(m, n); break;
      case 'I': v = i_moment(m, n); break;
      case 'J': v = j_moment(m, n); break;
      default: throw std::invalid_argument(std::string("unknown moment kind '") + kind + "'");
    }
    *out = dup_string(to_frac(v));
  });
}

gp_status gp_moment_t_recurrence(long m, long n, char** out) {
  if (gp_status s = require(out != nullptr, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = dup_string(to_frac(t_recurrence(m, n))); });
}

gp_status gp_moment_t_closed(long m, long n, char** out) {
  if (gp_status s = require(out != nullptr, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = dup_string(to_frac(t_closed(m, n))); });
}

gp_status gp_render_numbers(const char* family, long max_n, const char* format, char** out) {
  if (gp_status s = require(family && format && out, "null argument"); s != GP_OK) return s;
  return guarded([&] {
    *out = dup_string(render_numbers(parse_family(family), max_n, parse_format(format)));
  });
}

gp_status gp_render_polynomials(const char* family, long max_n, const char* format,
                                char** out) {
  if (gp_status s = require(family && format && out, "null argument"); s != GP_OK) return s;
  return guarded([&] {
    *out = dup_string(render_polynomials(parse_family(family), max_n, parse_format(format)));
  });
}

gp_status gp_render_expansion(const char* poly_csv, const char* basis, const char* format,
                              char** out) {
  if (gp_status s = require(poly_csv && basis && format && out, "null argument"); s != GP_OK) {
    return s;
  }
  return guarded([&] {
    Poly p = Poly::parse_csv(poly_csv);
    *out = dup_string(render_expansion(p, parse_basis(basis), parse_format(format)));
  });
}

gp_status gp_render_matrix(long n, const char* format, char** out) {
  if (gp_status s = require(format && out, "null argument"); s != GP_OK) return s;
  return guarded([&] { *out = dup_string(render_matrix(n, parse_format(format))); });
}

gp_status gp_render_moments(const char* kind, long m_max, long n_max, const char* format,
                            char** out) {
  if (gp_status s = require(kind && format && out, "null argument"); s != GP_OK) return s;
  return guarded([&] {
    if (std::strlen(kind) != 1) {
      throw std::invalid_argument(std::string("unknown moment kind '") + kind + "'");
    }
    *out = dup_string(render_moments(kind[0], m_max, n_max, parse_format(format)));
  });
}

gp_status gp_verify(const char* suite, long max_n, const char* readings, char** report_json,
                    char** summary_text, int* all_exact) {
  if (gp_status s = require(suite && readings && report_json && all_exact, "null argument");
      s != GP_OK) {
    return s;
  }
  return guarded([&] {
    if (max_n < 0) throw std::invalid_argument("verify: max_n must be >= 0");
    std::optional<Suite> which;
    std::string name(suite);
    if (name == "foundation") {
      which = Suite::foundation;
    } else if (name == "theorems") {
      which = Suite::theorems;
    } else if (name != "all") {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
    std::string r(readings);
    if (r != "all" && r != "stated") {
      throw std::invalid_argument("unknown readings filter '" + r + "'");
    }
    auto reports = verify_suite(which, max_n, r == "stated");
    *report_json = dup_string(render_report_json(reports, name, max_n));
    if (summary_text) *summary_text = dup_string(render_report_summary(reports));
    *all_exact = all_identities_have_exact_reading(reports) ? 1 : 0;
  });
}

}  // extern "C"
