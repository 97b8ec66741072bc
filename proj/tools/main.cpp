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

// Command-line front end over the libgenocchi C interface.
//
// Exit codes: 0 success (and: every identity verified has an exact reading),
// 1 verification found an identity with no exact reading, 2 usage/IO error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "genocchi.h"

namespace {

struct FreeString {
  void operator()(char* s) const { gp_string_free(s); }
};
using StringPtr = std::unique_ptr<char, FreeString>;

// Returns false (exit 2) on failure, printing the library message.
bool check(gp_status status) {
  if (status == GP_OK) return true;
  std::cerr << "genocchi: " << gp_last_error() << "\n";
  return false;
}

bool emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "genocchi: cannot open '" << out_path << "' for writing\n";
    return false;
  }
  out << text;
  out.close();
  if (!out) {
    std::cerr << "genocchi: failed writing '" << out_path << "'\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Genocchi/Bernoulli/Euler numbers, polynomials and identity checks"};
  app.require_subcommand(1);

  std::string family = "genocchi";
  std::string basis = "genocchi";
  std::string format = "plain";
  std::string poly_text;
  std::string out_path;
  std::string report_path;
  std::string suite = "all";
  std::string readings = "all";
  std::string kind = "T";
  long max_n = 20;
  long verify_max_n = 12;
  long matrix_n = 0;
  long m_max = 8;
  long n_max = 8;

  auto* numbers = app.add_subcommand("numbers", "table of B_n / E_n / G_n");
  numbers->add_option("--family", family, "bernoulli|euler|genocchi")->capture_default_str();
  numbers->add_option("--max", max_n, "largest index")->capture_default_str();
  numbers->add_option("--format", format, "plain|json|csv|latex")->capture_default_str();
  numbers->add_option("--out", out_path, "output file (default: stdout)");

  auto* poly = app.add_subcommand("poly", "table of B_n(x) / E_n(x) / G_n(x)");
  poly->add_option("--family", family, "bernoulli|euler|genocchi")->capture_default_str();
  poly->add_option("--max", max_n, "largest index")->capture_default_str();
  poly->add_option("--format", format, "plain|json|csv|latex")->capture_default_str();
  poly->add_option("--out", out_path, "output file (default: stdout)");

  auto* expand = app.add_subcommand("expand", "expand a polynomial in a basis");
  expand->add_option("--poly", poly_text, "ascending coefficients, e.g. \"-1,2\" for 2x-1")
      ->required();
  expand->add_option("--basis", basis, "power|bernoulli|euler|genocchi")->required();
  expand->add_option("--format", format, "plain|json|csv|latex")->capture_default_str();
  expand->add_option("--out", out_path, "output file (default: stdout)");

  auto* matrix = app.add_subcommand("matrix", "Genocchi change-of-basis matrix");
  matrix->add_option("--n", matrix_n, "degree bound; matrix is (n+1)x(n+1)")->required();
  matrix->add_option("--format", format, "plain|json|csv|latex")->capture_default_str();
  matrix->add_option("--out", out_path, "output file (default: stdout)");

  auto* integrals = app.add_subcommand("integrals", "grid of moment integrals");
  integrals->add_option("--kind", kind, "T|I|J")->capture_default_str();
  integrals->add_option("--m-max", m_max, "largest m")->capture_default_str();
  integrals->add_option("--n-max", n_max, "largest n")->capture_default_str();
  integrals->add_option("--format", format, "plain|json|csv|latex")->capture_default_str();
  integrals->add_option("--out", out_path, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "run the identity verifier");
  verify->add_option("--suite", suite, "foundation|theorems|all")->capture_default_str();
  verify->add_option("--max-n", verify_max_n, "largest index per identity")
      ->capture_default_str();
  verify->add_option("--readings", readings, "all|stated")->capture_default_str();
  verify->add_option("--report", report_path, "write the JSON report here (summary on stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  StringPtr text;
  char* raw = nullptr;

  if (numbers->parsed()) {
    if (!check(gp_render_numbers(family.c_str(), max_n, format.c_str(), &raw))) return 2;
    text.reset(raw);
    return emit(text.get(), out_path) ? 0 : 2;
  }

  if (poly->parsed()) {
    if (!check(gp_render_polynomials(family.c_str(), max_n, format.c_str(), &raw))) return 2;
    text.reset(raw);
    return emit(text.get(), out_path) ? 0 : 2;
  }

  if (expand->parsed()) {
    if (!check(gp_render_expansion(poly_text.c_str(), basis.c_str(), format.c_str(), &raw))) {
      return 2;
    }
    text.reset(raw);
    return emit(text.get(), out_path) ? 0 : 2;
  }

  if (matrix->parsed()) {
    if (!check(gp_render_matrix(matrix_n, format.c_str(), &raw))) return 2;
    text.reset(raw);
    return emit(text.get(), out_path) ? 0 : 2;
  }

  if (integrals->parsed()) {
    if (!check(gp_render_moments(kind.c_str(), m_max, n_max, format.c_str(), &raw))) return 2;
    text.reset(raw);
    return emit(text.get(), out_path) ? 0 : 2;
  }

  if (verify->parsed()) {
    char* summary = nullptr;
    int all_exact = 0;
    if (!check(gp_verify(suite.c_str(), verify_max_n, readings.c_str(), &raw, &summary,
                         &all_exact))) {
      return 2;
    }
    text.reset(raw);
    StringPtr summary_ptr(summary);
    if (report_path.empty()) {
      if (!emit(text.get(), "")) return 2;
    } else {
      if (!emit(text.get(), report_path)) return 2;
      std::cout << summary_ptr.get();
    }
    return all_exact ? 0 : 1;
  }

  return 2;
}
