#pragma once

// Result rows and their CSV/JSON serialization. All numbers are
// rendered from exact integers and rationals; the decimal column is a
// correctly rounded approximation computed in integer arithmetic, so
// every byte of output is reproducible across platforms.

#include "kdyck/closed_form.hpp"
#include "kdyck/numeric.hpp"
#include "kdyck/paths.hpp"

#include "json.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdyck {

inline const char* kind_name(TurnKind kind) {
  switch (kind) {
    case TurnKind::Min: return "min";
    case TurnKind::Max: return "max";
    case TurnKind::Osc: return "osc";
  }
  throw std::invalid_argument("kind_name: unknown turn kind");
}

inline TurnKind kind_from_name(const std::string& name) {
  if (name == "min") return TurnKind::Min;
  if (name == "max") return TurnKind::Max;
  if (name == "osc") return TurnKind::Osc;
  throw std::invalid_argument("unknown turn kind '" + name + "' (expected min, max or osc)");
}

struct ReportRow {
  int k = 1;
  int N = 0;
  int s = 1;
  TurnKind kind = TurnKind::Min;
  Int sum;
  Int count;
  Rat average;  // sum / count in lowest terms
};

inline ReportRow make_row(int k, int N, int s, TurnKind kind, const Int& sum, const Int& count) {
  if (count <= 0) throw internal_error("make_row: path count must be positive");
  return ReportRow{k, N, s, kind, sum, count, Rat(sum, count)};
}

// "p" when the denominator is 1, otherwise "p/q", in lowest terms.
inline std::string rational_string(const Rat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) out += "/" + denominator(value).str();
  return out;
}

// Decimal approximation with the given number of significant digits,
// rounded half up. "0" for zero; no exponent notation (the magnitudes
// here are tame).
inline std::string decimal_string(const Rat& value, int digits = 12) {
  if (digits < 1) throw std::invalid_argument("decimal_string: digits must be >= 1");
  if (value == 0) return "0";
  Int p = numerator(value);
  const Int q = denominator(value);
  std::string sign;
  if (p < 0) {
    sign = "-";
    p = -p;
  }
  const auto pow10 = [](long long e) {
    Int v = 1;
    for (long long i = 0; i < e; ++i) v *= 10;
    return v;
  };
  // 10^exp10 <= p/q < 10^(exp10+1)
  const auto at_least = [&](long long e) {
    return e >= 0 ? q * pow10(e) <= p : q <= p * pow10(-e);
  };
  long long exp10 = static_cast<long long>(p.str().size()) -
                    static_cast<long long>(q.str().size());
  while (!at_least(exp10)) --exp10;
  while (at_least(exp10 + 1)) ++exp10;
  const long long scale = digits - 1 - exp10;
  const Int num = scale >= 0 ? p * pow10(scale) : p;
  const Int den = scale >= 0 ? q : q * pow10(-scale);
  Int mantissa = (2 * num + den) / (2 * den);
  if (mantissa >= pow10(digits)) {  // rounding carried into the next decade
    mantissa = pow10(digits - 1);
    ++exp10;
  }
  const std::string digs = mantissa.str();
  if (exp10 >= digits - 1)
    return sign + digs + std::string(static_cast<std::size_t>(exp10 - (digits - 1)), '0');
  if (exp10 >= 0)
    return sign + digs.substr(0, static_cast<std::size_t>(exp10) + 1) + "." +
           digs.substr(static_cast<std::size_t>(exp10) + 1);
  return sign + "0." + std::string(static_cast<std::size_t>(-exp10) - 1, '0') + digs;
}

inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "k,N,s,kind,sum,count,average_exact,average_decimal\n";
  for (const ReportRow& row : rows) {
    os << row.k << ',' << row.N << ',' << row.s << ',' << kind_name(row.kind) << ','
       << csv_field(row.sum.str()) << ',' << csv_field(row.count.str()) << ','
       << csv_field(rational_string(row.average)) << ','
       << csv_field(decimal_string(row.average)) << '\n';
  }
}

inline void write_json(std::ostream& os, const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReportRow& row : rows) {
    nlohmann::ordered_json obj;
    obj["k"] = row.k;
    obj["N"] = row.N;
    obj["s"] = row.s;
    obj["kind"] = kind_name(row.kind);
    obj["sum"] = row.sum.str();
    obj["count"] = row.count.str();
    obj["average_exact"] = rational_string(row.average);
    obj["average_decimal"] = decimal_string(row.average);
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

}  // namespace kdyck
