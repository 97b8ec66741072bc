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

#include "genocchi/render.hpp"

#include <json.hpp>

#include <sstream>

#include "genocchi/integrals.hpp"

namespace genocchi {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "latex") return Format::latex;
  throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::string latex_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  std::string num = r.get_num().get_str();
  bool neg = !num.empty() && num[0] == '-';
  if (neg) num = num.substr(1);
  return std::string(neg ? "-" : "") + "\\frac{" + num + "}{" + r.get_den().get_str() + "}";
}

std::string latex_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    bool first = out.empty();
    if (!first) out += c > 0 ? " + " : " - ";
    Rat a = (!first && c < 0) ? Rat(-c) : c;
    bool unit = a == 1 && i > 0;
    if (!unit) out += latex_rat(a);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^{" + std::to_string(i) + "}";
  }
  return out;
}

std::string family_symbol(Family f) {
  switch (f) {
    case Family::bernoulli: return "B";
    case Family::euler: return "E";
    case Family::genocchi: return "G";
  }
  return "?";
}

}  // namespace

std::string render_numbers(Family f, long max_n, Format fmt) {
  if (max_n < 0) throw std::invalid_argument("render_numbers: negative range");
  switch (fmt) {
    case Format::json: {
      json j;
      j["family"] = to_string(f);
      j["values"] = json::array();
      for (long n = 0; n <= max_n; ++n) {
        j["values"].push_back({{"n", n}, {"value", to_frac(family_number(f, n))}});
      }
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream out;
      out << "n,value\n";
      for (long n = 0; n <= max_n; ++n) out << n << ',' << to_frac(family_number(f, n)) << '\n';
      return out.str();
    }
    case Format::latex: {
      std::ostringstream out;
      out << "\\begin{tabular}{rl}\n";
      out << "$n$ & $" << family_symbol(f) << "_n$ \\\\\n";
      for (long n = 0; n <= max_n; ++n) {
        out << n << " & $" << latex_rat(family_number(f, n)) << "$ \\\\\n";
      }
      out << "\\end{tabular}\n";
      return out.str();
    }
    case Format::plain: {
      std::ostringstream out;
      out << "n value\n";
      for (long n = 0; n <= max_n; ++n) out << n << ' ' << to_plain(family_number(f, n)) << '\n';
      return out.str();
    }
  }
  throw std::invalid_argument("render_numbers: bad format");
}

std::string render_polynomials(Family f, long max_n, Format fmt) {
  if (max_n < 0) throw std::invalid_argument("render_polynomials: negative range");
  switch (fmt) {
    case Format::json: {
      json j;
      j["family"] = to_string(f);
      j["values"] = json::array();
      for (long n = 0; n <= max_n; ++n) {
        Poly p = family_poly(f, n);
        json coeffs = json::array();
        for (const Rat& c : p.coeffs()) coeffs.push_back(to_frac(c));
        j["values"].push_back({{"n", n}, {"coeffs", coeffs}});
      }
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream out;
      out << "n,coeffs\n";
      for (long n = 0; n <= max_n; ++n) {
        out << n << ",\"" << family_poly(f, n).to_csv(true) << "\"\n";
      }
      return out.str();
    }
    case Format::latex: {
      std::ostringstream out;
      out << "\\begin{align*}\n";
      for (long n = 0; n <= max_n; ++n) {
        out << family_symbol(f) << "_{" << n << "}(x) &= " << latex_poly(family_poly(f, n))
            << " \\\\\n";
      }
      out << "\\end{align*}\n";
      return out.str();
    }
    case Format::plain: {
      std::ostringstream out;
      out << "n coeffs\n";
      for (long n = 0; n <= max_n; ++n) out << n << ' ' << family_poly(f, n).to_csv() << '\n';
      return out.str();
    }
  }
  throw std::invalid_argument("render_polynomials: bad format");
}

std::string render_expansion(const Poly& p, BasisKind kind, Format fmt) {
  Expansion e = to_basis(p, kind);
  switch (fmt) {
    case Format::json: {
      json j;
      j["basis"] = to_string(kind);
      j["start_index"] = e.start_index;
      j["coefficients"] = json::array();
      for (const Rat& c : e.coeffs) j["coefficients"].push_back(to_frac(c));
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream out;
      out << "k,coefficient\n";
      for (size_t i = 0; i < e.coeffs.size(); ++i) {
        out << e.start_index + static_cast<long>(i) << ',' << to_frac(e.coeffs[i]) << '\n';
      }
      return out.str();
    }
    case Format::latex: {
      std::string sym = kind == BasisKind::power ? "x^" : family_symbol(
          kind == BasisKind::bernoulli ? Family::bernoulli
          : kind == BasisKind::euler   ? Family::euler
                                       : Family::genocchi);
      std::ostringstream out;
      out << "p(x) = ";
      bool first = true;
      for (size_t i = 0; i < e.coeffs.size(); ++i) {
        if (e.coeffs[i] == 0) continue;
        long k = e.start_index + static_cast<long>(i);
        if (!first) out << " + ";
        first = false;
        out << latex_rat(e.coeffs[i]) << " \\, ";
        if (kind == BasisKind::power) {
          out << "x^{" << k << "}";
        } else {
          out << sym << "_{" << k << "}(x)";
        }
      }
      if (first) out << "0";
      out << "\n";
      return out.str();
    }
    case Format::plain: {
      std::ostringstream out;
      out << "basis " << to_string(kind) << " (k from " << e.start_index << ")\n";
      for (size_t i = 0; i < e.coeffs.size(); ++i) {
        out << "a_" << e.start_index + static_cast<long>(i) << " = " << to_plain(e.coeffs[i])
            << '\n';
      }
      return out.str();
    }
  }
  throw std::invalid_argument("render_expansion: bad format");
}

std::string render_matrix(long n, Format fmt) {
  TriMatrix m = genocchi_change_matrix(n);
  switch (fmt) {
    case Format::json: {
      json j;
      j["n"] = n;
      j["entries"] = json::array();
      for (const auto& row : m.entries) {
        json r = json::array();
        for (const Rat& v : row) r.push_back(to_frac(v));
        j["entries"].push_back(r);
      }
      if (n >= 3) {
        j["notes"] = json::array({
            "entry (1,4) is +1, the constant term of the quartic polynomial from its "
            "binomial expansion; tables sometimes print -1 there, which breaks the "
            "difference equation (G_4(x+1) + G_4(x) = 8x^3 requires +1)"});
      }
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream out;
      for (const auto& row : m.entries) {
        for (size_t j = 0; j < row.size(); ++j) {
          if (j) out << ',';
          out << to_frac(row[j]);
        }
        out << '\n';
      }
      return out.str();
    }
    case Format::latex: {
      std::ostringstream out;
      out << "\\begin{pmatrix}\n";
      for (const auto& row : m.entries) {
        for (size_t j = 0; j < row.size(); ++j) {
          if (j) out << " & ";
          out << latex_rat(row[j]);
        }
        out << " \\\\\n";
      }
      out << "\\end{pmatrix}\n";
      return out.str();
    }
    case Format::plain: {
      std::ostringstream out;
      for (const auto& row : m.entries) {
        for (size_t j = 0; j < row.size(); ++j) {
          if (j) out << ' ';
          out << to_plain(row[j]);
        }
        out << '\n';
      }
      return out.str();
    }
  }
  throw std::invalid_argument("render_matrix: bad format");
}

std::string render_moments(char kind, long m_max, long n_max, Format fmt) {
  if (kind != 'T' && kind != 'I' && kind != 'J') {
    throw std::invalid_argument(std::string("unknown moment kind '") + kind + "'");
  }
  const long m_lo = kind == 'T' ? 1 : 0;
  if (m_max < m_lo || n_max < 0) throw std::invalid_argument("render_moments: bad range");
  auto value = [&](long m, long n) {
    switch (kind) {
      case 'T': return t_recurrence(m, n);
      case 'I': return i_moment(m, n);
      default: return j_moment(m, n);
    }
  };
  switch (fmt) {
    case Format::json: {
      json j;
      j["kind"] = std::string(1, kind);
      j["m_max"] = m_max;
      j["n_max"] = n_max;
      j["rows"] = json::array();
      for (long m = m_lo; m <= m_max; ++m) {
        json row = json::array();
        for (long n = 0; n <= n_max; ++n) row.push_back(to_frac(value(m, n)));
        j["rows"].push_back({{"m", m}, {"values", row}});
      }
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream out;
      out << "m";
      for (long n = 0; n <= n_max; ++n) out << ",n=" << n;
      out << '\n';
      for (long m = m_lo; m <= m_max; ++m) {
        out << m;
        for (long n = 0; n <= n_max; ++n) out << ',' << to_frac(value(m, n));
        out << '\n';
      }
      return out.str();
    }
    case Format::latex: {
      std::ostringstream out;
      out << "\\begin{tabular}{r";
      for (long n = 0; n <= n_max; ++n) out << "l";
      out << "}\n$m$";
      for (long n = 0; n <= n_max; ++n) out << " & $n=" << n << "$";
      out << " \\\\\n";
      for (long m = m_lo; m <= m_max; ++m) {
        out << m;
        for (long n = 0; n <= n_max; ++n) out << " & $" << latex_rat(value(m, n)) << "$";
        out << " \\\\\n";
      }
      out << "\\end{tabular}\n";
      return out.str();
    }
    case Format::plain: {
      std::ostringstream out;
      out << "m";
      for (long n = 0; n <= n_max; ++n) out << " n=" << n;
      out << '\n';
      for (long m = m_lo; m <= m_max; ++m) {
        out << m;
        for (long n = 0; n <= n_max; ++n) out << ' ' << to_plain(value(m, n));
        out << '\n';
      }
      return out.str();
    }
  }
  throw std::invalid_argument("render_moments: bad format");
}

namespace {

struct ReadingSummary {
  std::string reading;
  bool any_mismatch = false;
  long min_failing_n = 0;
  bool any_exact = false;
};

struct IdentitySummary {
  std::string identity;
  std::vector<ReadingSummary> readings;  // in first-seen (registry) order
};

std::vector<IdentitySummary> summarize(const std::vector<Report>& reports) {
  std::vector<IdentitySummary> out;
  for (const Report& r : reports) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const IdentitySummary& s) { return s.identity == r.identity; });
    if (it == out.end()) {
      out.push_back({r.identity, {}});
      it = std::prev(out.end());
    }
    auto rt = std::find_if(it->readings.begin(), it->readings.end(),
                           [&](const ReadingSummary& s) { return s.reading == r.reading; });
    if (rt == it->readings.end()) {
      it->readings.push_back({r.reading, false, 0, false});
      rt = std::prev(it->readings.end());
    }
    if (r.status == Status::exact) rt->any_exact = true;
    if (r.status == Status::mismatch && !rt->any_mismatch) {
      rt->any_mismatch = true;
      rt->min_failing_n = r.n;  // reports arrive in ascending n per reading
    }
  }
  return out;
}

}  // namespace

std::string render_report_json(const std::vector<Report>& reports, const std::string& suite,
                               long max_n) {
  json j;
  j["meta"] = {{"tool", "genocchi"}, {"version", "0.1.0"}, {"suite", suite}, {"max_n", max_n}};
  j["reports"] = json::array();
  for (const Report& r : reports) {
    json residual = json::array();
    for (const Rat& c : r.residual.coeffs()) residual.push_back(to_frac(c));
    j["reports"].push_back({{"identity", r.identity},
                            {"reading", r.reading},
                            {"n", r.n},
                            {"status", to_string(r.status)},
                            {"residual", residual}});
  }
  j["summary"] = json::array();
  for (const IdentitySummary& s : summarize(reports)) {
    json exact = json::array();
    json failed = json::array();
    for (const ReadingSummary& rs : s.readings) {
      if (!rs.any_mismatch && rs.any_exact) exact.push_back(rs.reading);
    }
    for (const ReadingSummary& rs : s.readings) {
      if (rs.any_mismatch) {
        failed.push_back({{"reading", rs.reading}, {"min_failing_n", rs.min_failing_n}});
      }
    }
    j["summary"].push_back(
        {{"identity", s.identity}, {"exact_readings", exact}, {"failed_readings", failed}});
  }
  return j.dump(2) + "\n";
}

std::string render_report_summary(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const IdentitySummary& s : summarize(reports)) {
    out << s.identity << ':';
    for (const ReadingSummary& rs : s.readings) {
      out << ' ' << rs.reading << '=';
      if (!rs.any_mismatch && rs.any_exact) {
        out << "exact";
      } else if (rs.any_mismatch) {
        out << "mismatch(n=" << rs.min_failing_n << ')';
      } else {
        out << "n/a";
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace genocchi
