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

/*
 * C interface of libgenocchi: exact Genocchi/Bernoulli/Euler numbers and
 * polynomials, basis expansions, moment integrals and identity verification.
 *
 * Conventions:
 *  - every function returns a gp_status; on GP_ERROR* codes gp_last_error()
 *    holds a message (thread-local);
 *  - rationals cross the boundary as strings: "p/q" or "p", arbitrary
 *    precision; polynomials as comma-separated ascending coefficients;
 *  - char** outputs receive newly allocated strings, release them with
 *    gp_string_free; handles are opaque and released with their *_free.
 */

#ifndef GENOCCHI_H
#define GENOCCHI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  GP_OK = 0,
  GP_ERROR_INVALID = 1, /* unknown name, index out of domain, bad range */
  GP_ERROR_PARSE = 2,   /* malformed rational or polynomial text */
  GP_ERROR_INTERNAL = 3
} gp_status;

typedef struct gp_poly gp_poly;           /* polynomial over the rationals */
typedef struct gp_expansion gp_expansion; /* coefficients in a named basis */
typedef struct gp_matrix gp_matrix;       /* Genocchi change-of-basis matrix */

const char* gp_version(void);

/* Message of the last failure on this thread; empty string if none. */
const char* gp_last_error(void);

void gp_string_free(char* s);

/* ---- numbers ----------------------------------------------------------- */

/* family is "bernoulli", "euler" or "genocchi"; *out receives "p/q". */
gp_status gp_number(const char* family, long n, char** out);

/* Same value through the generating-function series oracle. */
gp_status gp_number_series(const char* family, long n, char** out);

/* Coefficient list of B_n/E_n/G_n(x), human form ("p" or "p/q"). */
gp_status gp_polynomial(const char* family, long n, char** out_csv);

/* ---- polynomials -------------------------------------------------------- */

gp_status gp_poly_parse(const char* csv, gp_poly** out);
void gp_poly_free(gp_poly* p);
gp_status gp_poly_to_csv(const gp_poly* p, char** out);
long gp_poly_degree(const gp_poly* p); /* -1 for the zero polynomial */
gp_status gp_poly_eval(const gp_poly* p, const char* x, char** out);
gp_status gp_poly_add(const gp_poly* a, const gp_poly* b, gp_poly** out);
gp_status gp_poly_sub(const gp_poly* a, const gp_poly* b, gp_poly** out);
gp_status gp_poly_mul(const gp_poly* a, const gp_poly* b, gp_poly** out);
gp_status gp_poly_scale(const gp_poly* p, const char* c, gp_poly** out);
gp_status gp_poly_derivative(const gp_poly* p, long k, gp_poly** out);
gp_status gp_poly_shift(const gp_poly* p, const char* c, gp_poly** out);
gp_status gp_poly_dilate(const gp_poly* p, const char* c, gp_poly** out);
gp_status gp_poly_integrate(const gp_poly* p, const char* a, const char* b, char** out);

/* ---- basis expansions ---------------------------------------------------- */

/* basis is "power", "bernoulli", "euler" or "genocchi". */
gp_status gp_expand(const gp_poly* p, const char* basis, gp_expansion** out);
void gp_expansion_free(gp_expansion* e);
long gp_expansion_size(const gp_expansion* e);
long gp_expansion_start(const gp_expansion* e); /* 1 for genocchi, else 0 */
/* k is the absolute basis index, start <= k < start + size. */
gp_status gp_expansion_coeff(const gp_expansion* e, long k, char** out);
gp_status gp_expansion_to_poly(const gp_expansion* e, gp_poly** out);

/* ---- change-of-basis matrix ---------------------------------------------- */

gp_status gp_matrix_create(long n, gp_matrix** out); /* (n+1) x (n+1) */
void gp_matrix_free(gp_matrix* m);
long gp_matrix_dim(const gp_matrix* m);
gp_status gp_matrix_entry(const gp_matrix* m, long row, long col, char** out); /* 0-based */
/* Back-substitution; result is the Genocchi-basis expansion of p. */
gp_status gp_matrix_solve(const gp_matrix* m, const gp_poly* p, gp_expansion** out);

/* ---- moment integrals ----------------------------------------------------- */

/* kind 'T' (m >= 1), 'I' or 'J': int_0^1 {G,B,E}_m(x) x^n dx. */
gp_status gp_moment(char kind, long m, long n, char** out);
/* The two extra routes to T(m,n); they agree with gp_moment('T',...). */
gp_status gp_moment_t_recurrence(long m, long n, char** out);
gp_status gp_moment_t_closed(long m, long n, char** out); /* m, n >= 1 */

/* ---- rendering (the CLI surface) ------------------------------------------ */

/* format is "plain", "json", "csv" or "latex". */
gp_status gp_render_numbers(const char* family, long max_n, const char* format, char** out);
gp_status gp_render_polynomials(const char* family, long max_n, const char* format, char** out);
gp_status gp_render_expansion(const char* poly_csv, const char* basis, const char* format,
                              char** out);
gp_status gp_render_matrix(long n, const char* format, char** out);
gp_status gp_render_moments(const char* kind, long m_max, long n_max, const char* format,
                            char** out);

/* ---- identity verification ------------------------------------------------ */

/*
 * suite is "foundation", "theorems" or "all"; readings is "all" or "stated"
 * (only the formulas exactly as usually printed). *report_json receives the
 * full JSON report; *summary_text (optional, may be NULL) a one-line-per-
 * identity digest; *all_exact is 1 when every verified identity has at
 * least one reading that is exact across its whole domain, else 0.
 */
gp_status gp_verify(const char* suite, long max_n, const char* readings, char** report_json,
                    char** summary_text, int* all_exact);

#ifdef __cplusplus
}
#endif

#endif /* GENOCCHI_H */
