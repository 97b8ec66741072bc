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

#ifndef GENOCCHI_RENDER_HPP
#define GENOCCHI_RENDER_HPP

#include <string>

#include "genocchi/basis.hpp"
#include "genocchi/identities.hpp"

namespace genocchi {

// Text emission for the CLI. All formats are deterministic: identical inputs
// produce byte-identical output. Machine formats (json, csv) always render
// rationals as "p/q"; plain drops the "/1" on integers.

enum class Format { plain, json, csv, latex };

Format parse_format(const std::string& name);  // throws std::invalid_argument

std::string render_numbers(Family f, long max_n, Format fmt);
std::string render_polynomials(Family f, long max_n, Format fmt);
std::string render_expansion(const Poly& p, BasisKind kind, Format fmt);
std::string render_matrix(long n, Format fmt);

/// kind is 'T', 'I' or 'J'; the T grid starts at m = 1.
std::string render_moments(char kind, long m_max, long n_max, Format fmt);

/// The verification report: metadata block, one record per (identity,
/// reading, n) and a per-identity summary with the exact readings and the
/// minimal failing n per failed reading.
std::string render_report_json(const std::vector<Report>& reports, const std::string& suite,
                               long max_n);

/// One line per identity: its exact readings and failing readings.
std::string render_report_summary(const std::vector<Report>& reports);

}  // namespace genocchi

#endif
