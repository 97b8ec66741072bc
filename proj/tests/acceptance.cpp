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

// End-to-end acceptance checks. Everything is exact arithmetic, so every
// comparison is literal equality; one PASS/FAIL line per criterion.
//
// A11 asserts the harmonic-coefficient relation in its commonly stated form.
// That form is exactly false (DISCREPANCIES.md has the two-line proof), so
// A11 reports FAIL with the minimal counterexample. It is kept as stated
// rather than patched; the corrected relation is covered by A10 through the
// identity registry.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "genocchi/basis.hpp"
#include "genocchi/identities.hpp"
#include "genocchi/integrals.hpp"
#include "genocchi/render.hpp"
#include "testutil.hpp"

using namespace genocchi;

namespace {

int failures = 0;

void criterion(const std::string& id, const std::string& what,
               const std::function<bool(std::string&)>& fn) {
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << id << (ok ? " PASS " : " FAIL ") << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::string run_cli(const std::string& args, int& exit_code) {
  std::string cmd = std::string(GENOCCHI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  exit_code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

const std::vector<Rat> kOffsets = {make_rat(3, 7), make_rat(-2, 5), make_rat(1, 3),
                                   make_rat(-7, 4), make_rat(5, 2)};

}  // namespace

int main() {
  criterion("A01", "Genocchi numbers: G_1..G_8 = (1,-1,0,1,0,-3,0,17), odd ones vanish",
            [](std::string& detail) {
              const long expected[] = {1, -1, 0, 1, 0, -3, 0, 17};
              for (long n = 1; n <= 8; ++n) {
                if (genocchi_number(n) != expected[n - 1]) {
                  detail = "G_" + std::to_string(n);
                  return false;
                }
              }
              for (long n = 1; n <= 20; ++n) {
                if (genocchi_number(2 * n + 1) != 0) {
                  detail = "G_" + std::to_string(2 * n + 1);
                  return false;
                }
              }
              return true;
            });

  criterion("A02", "recurrences agree with the series oracle, all families, n <= 40",
            [](std::string& detail) {
              for (Family f : {Family::bernoulli, Family::euler, Family::genocchi}) {
                auto oracle = series_numbers(f, 40);
                for (long n = 0; n <= 40; ++n) {
                  if (oracle[static_cast<size_t>(n)] != family_number(f, n)) {
                    detail = to_string(f) + " n=" + std::to_string(n);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion("A03", "G_{n+1}/(n+1) = E_n for n <= 40", [](std::string& detail) {
    for (long n = 0; n <= 40; ++n) {
      if (genocchi_number(n + 1) / Rat(n + 1) != euler_number(n)) {
        detail = "n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion("A04", "(G_{n+1}(x+1) + G_{n+1}(x))/(n+1) = 2 x^n for n <= 30",
            [](std::string& detail) {
              for (long n = 0; n <= 30; ++n) {
                Poly g = genocchi_poly(n + 1);
                if ((g.shift(Rat(1)) + g) * make_rat(1, n + 1) != Poly::monomial(n, Rat(2))) {
                  detail = "n=" + std::to_string(n);
                  return false;
                }
              }
              return true;
            });

  criterion("A05", "int_0^1 G_n = -2 G_{n+1}/(n+1) for n <= 20", [](std::string& detail) {
    for (long n = 1; n <= 20; ++n) {
      if (genocchi_poly(n).integrate(Rat(0), Rat(1)) !=
          Rat(-2) * genocchi_number(n + 1) / Rat(n + 1)) {
        detail = "n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion("A06", "T(m,n): oracle = recurrence on 1..15 x 0..15, = closed form on 1..15^2",
            [](std::string& detail) {
              for (long m = 1; m <= 15; ++m) {
                for (long n = 0; n <= 15; ++n) {
                  if (t_recurrence(m, n) != t_oracle(m, n)) {
                    detail = "recurrence (" + std::to_string(m) + "," + std::to_string(n) + ")";
                    return false;
                  }
                  if (n >= 1 && t_closed(m, n) != t_oracle(m, n)) {
                    detail = "closed (" + std::to_string(m) + "," + std::to_string(n) + ")";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion("A07", "addition at 5 offsets and the doubling identity, n <= 20",
            [](std::string& detail) {
              for (long n = 0; n <= 20; ++n) {
                for (const Rat& y : kOffsets) {
                  Poly rhs;
                  for (long k = 0; k <= n; ++k) {
                    rhs += genocchi_poly(k) * (Rat(binomial(n, k)) * rat_pow(y, n - k));
                  }
                  if (genocchi_poly(n).shift(y) != rhs) {
                    detail = "addition n=" + std::to_string(n) + " y=" + to_plain(y);
                    return false;
                  }
                }
                if (genocchi_poly(n).dilate(Rat(2)) * (Rat(1) / Rat(factorial(n))) !=
                    weighted_product_sum(n)) {
                  detail = "doubling n=" + std::to_string(n);
                  return false;
                }
              }
              return true;
            });

  criterion("A08", "basis round trips on 200 random polynomials and unit self-expansions",
            [](std::string& detail) {
              test::Rng rng(0x5eedacc8);
              for (int i = 0; i < 200; ++i) {
                Poly p = rng.poly(12);
                for (BasisKind kind :
                     {BasisKind::bernoulli, BasisKind::euler, BasisKind::genocchi}) {
                  if (from_basis(to_basis(p, kind)) != p) {
                    detail = "round trip " + to_string(kind);
                    return false;
                  }
                }
              }
              for (long k = 0; k <= 12; ++k) {
                Expansion b = to_basis(bernoulli_poly(k), BasisKind::bernoulli);
                Expansion e = to_basis(euler_poly(k), BasisKind::euler);
                Expansion g = to_basis(genocchi_poly(k + 1), BasisKind::genocchi);
                for (long i = 0; i <= k; ++i) {
                  if (b.coeffs[static_cast<size_t>(i)] != (i == k ? 1 : 0) ||
                      e.coeffs[static_cast<size_t>(i)] != (i == k ? 1 : 0) ||
                      g.coeffs[static_cast<size_t>(i)] != (i == k ? 1 : 0)) {
                    detail = "unit expansion k=" + std::to_string(k);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion("A09", "change-of-basis matrices; quartic column corrected at entry (1,4)",
            [](std::string& detail) {
              const long quadratic[3][3] = {{1, -1, 0}, {0, 2, -3}, {0, 0, 3}};
              TriMatrix m2 = genocchi_change_matrix(2);
              for (long i = 0; i < 3; ++i) {
                for (long j = 0; j < 3; ++j) {
                  if (m2.entries[i][j] != quadratic[i][j]) {
                    detail = "quadratic (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")";
                    return false;
                  }
                }
              }
              // the cubic table as often printed, with -1 in the corner
              const long printed[4][4] = {
                  {1, -1, 0, -1}, {0, 2, -3, 0}, {0, 0, 3, -6}, {0, 0, 0, 4}};
              TriMatrix m3 = genocchi_change_matrix(3);
              for (long i = 0; i < 4; ++i) {
                for (long j = 0; j < 4; ++j) {
                  if (i == 0 && j == 3) continue;
                  if (m3.entries[i][j] != printed[i][j]) {
                    detail =
                        "cubic (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                    return false;
                  }
                }
              }
              if (m3.entries[0][3] != 1) {
                detail = "corner entry is not +1";
                return false;
              }
              std::string json = render_matrix(3, Format::json);
              if (json.find("notes") == std::string::npos) {
                detail = "matrix report carries no discrepancy note";
                return false;
              }
              return true;
            });

  criterion("A10", "theorem audit: residuals check out pointwise and match the golden report",
            [](std::string& detail) {
              auto reports = verify_suite(Suite::theorems, 12);
              test::Rng rng(0x5eedacca);
              for (const Report& r : reports) {
                if (r.status == Status::not_applicable) continue;
                for (int i = 0; i < 10; ++i) {
                  Rat x = rng.rat();
                  if (r.lhs.eval(x) - r.rhs.eval(x) != r.residual.eval(x)) {
                    detail = r.identity + "/" + r.reading + " n=" + std::to_string(r.n);
                    return false;
                  }
                }
              }
              std::string fresh = render_report_json(reports, "theorems", 12);
              std::ifstream in(std::string(GENOCCHI_GOLDEN_DIR) + "/theorem_audit.json",
                               std::ios::binary);
              if (!in.good()) {
                detail = "golden report missing";
                return false;
              }
              std::stringstream buf;
              buf << in.rdbuf();
              if (fresh != buf.str()) {
                detail = "regenerated report differs from the committed one";
                return false;
              }
              return true;
            });

  criterion("A11", "harmonic coefficients: C_{k-1}/k! = C(n,k)(H_{n-1}-H_{n-k})/(n-k+1), k<=n<=15",
            [](std::string& detail) {
              for (long n = 1; n <= 15; ++n) {
                for (long k = 1; k <= n; ++k) {
                  Rat lhs = harmonic_weight_coefficient(n, k - 1) / Rat(factorial(k));
                  Rat rhs =
                      Rat(binomial(n, k)) * (harmonic(n - 1) - harmonic(n - k)) / Rat(n - k + 1);
                  if (lhs != rhs) {
                    detail = "first counterexample n=" + std::to_string(n) +
                             " k=" + std::to_string(k) + ": " + to_plain(lhs) + " vs " +
                             to_plain(rhs) + "; see DISCREPANCIES.md";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion("A12", "CLI verify is byte-deterministic with the documented exit code",
            [](std::string& detail) {
              int c1 = 0, c2 = 0;
              std::string a = run_cli("verify --suite all --max-n 12", c1);
              std::string b = run_cli("verify --suite all --max-n 12", c2);
              if (c1 != 0 || c2 != 0) {
                detail = "exit codes " + std::to_string(c1) + "," + std::to_string(c2);
                return false;
              }
              if (a != b) {
                detail = "outputs differ between runs";
                return false;
              }
              if (a.find("\"status\": \"mismatch\"") == std::string::npos) {
                detail = "audit report carries no mismatch records";
                return false;
              }
              return true;
            });

  std::cout << (failures == 0 ? "all criteria passed\n"
                              : std::to_string(failures) + " criterion(s) failed\n");
  return failures == 0 ? 0 : 1;
}
