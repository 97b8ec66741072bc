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

#ifndef GENOCCHI_IDENTITIES_HPP
#define GENOCCHI_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genocchi/polynomial.hpp"

namespace genocchi {

// A registry of identities around the Genocchi/Bernoulli/Euler families.
// Several of them circulate in print with typos or ambiguous grouping, so an
// identity carries one or more "readings": candidate right-hand sides that
// are each verified exactly. "stated" is the formula as usually printed;
// "corrected" is the re-derived form; other ids name specific disambiguations.
// The verifier reports which readings are exactly true and never guesses
// which one was intended.

enum class Suite { foundation, theorems };

enum class Status { exact, mismatch, not_applicable };

struct Reading {
  std::string id;
  std::function<Poly(long)> rhs;
};

struct Identity {
  std::string id;
  Suite suite = Suite::foundation;
  std::string description;
  long min_n = 0;  // below this the identity reports not_applicable
  std::function<Poly(long)> lhs;
  std::vector<Reading> readings;  // kept sorted by reading id
};

struct Report {
  std::string identity;
  std::string reading;
  long n = 0;
  Poly lhs;
  Poly rhs;
  Poly residual;  // lhs - rhs, exactly
  Status status = Status::not_applicable;
};

/// All registered identities, foundation suite first; order is fixed.
const std::vector<Identity>& registry();

/// sum_{l=0}^{n} G_l(x) x^{n-l}.
Poly product_sum(long n);

/// sum_{l=0}^{n} G_l(x) x^{n-l} / (l! (n-l)!)  — equals G_n(2x)/n!.
Poly weighted_product_sum(long n);

/// sum_{k=1}^{n-1} G_k(x) x^{n-k} / (k (n-k)); n >= 2 (empty otherwise,
/// throws std::domain_error).
Poly harmonic_product_sum(long n);

/// The harmonic-theorem derivative coefficient: sum over j = 1..k of the
/// product (n-1)(n-2)...(n-k) with the factor (n-j) removed, divided by
/// (n-k). Defined for 0 <= k <= n-1, with value 0 at k = 0.
Rat harmonic_weight_coefficient(long n, long k);

/// RHS of one reading at index n. Throws std::invalid_argument for an
/// unknown identity or reading id.
Poly rhs_for(const std::string& identity, const std::string& reading, long n);

/// Reports for one identity over explicit indices, ordered by (n, reading).
/// Indices below the identity's domain report not_applicable.
std::vector<Report> verify(const std::string& identity, const std::vector<long>& ns);

/// Reports for a suite (or both, when suite is empty), each identity from its
/// own domain minimum up to max_n. stated_only keeps only the "stated*"
/// readings — the audit of the formulas exactly as usually printed.
std::vector<Report> verify_suite(std::optional<Suite> suite, long max_n,
                                 bool stated_only = false);

/// Foundation identities only; these are the independently derivable facts
/// and every report must come back exact.
std::vector<Report> verify_foundation(long max_n);

/// True when every identity touched by the reports has at least one reading
/// with no mismatches.
bool all_identities_have_exact_reading(const std::vector<Report>& reports);

std::string to_string(Status s);

}  // namespace genocchi

#endif
