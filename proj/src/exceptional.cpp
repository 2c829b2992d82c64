#include "crg/exceptional.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>

#include "crg/errors.hpp"
#include "exceptional_table_data.hpp"

namespace crg {

namespace {

std::vector<long> parse_int_list(std::string_view s, int line_no) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string_view::npos) next = s.size();
    out.push_back(std::stol(std::string(s.substr(pos, next - pos))));
    pos = next + 1;
  }
  if (out.empty())
    throw Error("exceptional table line " + std::to_string(line_no) + ": empty integer list");
  return out;
}

PrimitiveClass parse_class(std::string_view s, int line_no) {
  if (s == "tetrahedral") return PrimitiveClass::Tetrahedral;
  if (s == "octahedral") return PrimitiveClass::Octahedral;
  if (s == "icosahedral") return PrimitiveClass::Icosahedral;
  if (s == "none") return PrimitiveClass::None;
  throw Error("exceptional table line " + std::to_string(line_no) + ": unknown class '" +
              std::string(s) + "'");
}

std::vector<ExceptionalRecord> parse_table(std::string_view text) {
  std::vector<ExceptionalRecord> records;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (std::size_t h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);

    ExceptionalRecord rec;
    bool have_any = false;
    std::istringstream is{std::string(line)};
    std::string field;
    while (is >> field) {
      std::size_t eq = field.find('=');
      if (eq == std::string::npos)
        throw Error("exceptional table line " + std::to_string(line_no) +
                    ": expected key=value, got '" + field + "'");
      std::string key = field.substr(0, eq);
      std::string value = field.substr(eq + 1);
      have_any = true;
      if (key == "id") rec.id = std::stoi(value);
      else if (key == "rank") rec.rank = std::stoi(value);
      else if (key == "degrees") rec.degrees = parse_int_list(value, line_no);
      else if (key == "codegrees") rec.codegrees = parse_int_list(value, line_no);
      else if (key == "order") rec.order = std::stoull(value);
      else if (key == "class") rec.cls = parse_class(value, line_no);
      else
        throw Error("exceptional table line " + std::to_string(line_no) + ": unknown key '" +
                    key + "'");
    }
    if (!have_any) continue;
    if (rec.id < 4 || rec.id > 37 || rec.rank < 2 ||
        rec.degrees.size() != static_cast<std::size_t>(rec.rank) ||
        rec.codegrees.size() != static_cast<std::size_t>(rec.rank) ||
        rec.codegrees.back() != 0)
      throw Error("exceptional table line " + std::to_string(line_no) + ": malformed record");
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace

const std::vector<ExceptionalRecord>& exceptional_table() {
  static const std::vector<ExceptionalRecord> table = parse_table(detail::kExceptionalTableText);
  return table;
}

const ExceptionalRecord& exceptional_record(int id) {
  for (const auto& rec : exceptional_table()) {
    if (rec.id == id) return rec;
  }
  throw ConstraintError("no exceptional group G" + std::to_string(id));
}

int exceptional_rank(int id) { return exceptional_record(id).rank; }

const char* primitive_class_name(PrimitiveClass cls) {
  switch (cls) {
    case PrimitiveClass::Tetrahedral: return "tetrahedral";
    case PrimitiveClass::Octahedral: return "octahedral";
    case PrimitiveClass::Icosahedral: return "icosahedral";
    default: return "none";
  }
}

namespace {

// Quaternion a0 + a1*i + a2*j + a3*k as a 2x2 unitary; the binary polyhedral
// groups live inside SU(2) in this form.
Mat2 quat(double a0, double a1, double a2, double a3) {
  using C = std::complex<double>;
  return {C{a0, a1}, C{a2, a3}, C{-a2, a3}, C{a0, -a1}};
}

Mat2 scale(std::complex<double> z, Mat2 m) {
  for (auto& e : m) e *= z;
  return m;
}

std::complex<double> zeta(long num, long den) {
  constexpr double tau = 6.283185307179586476925286766559;
  return std::polar(1.0, tau * static_cast<double>(num) / static_cast<double>(den));
}

}  // namespace

std::optional<std::vector<Mat2>> exceptional_generators(int id) {
  const double h = 0.5;
  const double r = 1.0 / std::sqrt(2.0);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double f = phi / 2.0;
  const double g = 1.0 / (2.0 * phi);

  // Reflection generators written as (root of unity) x (unit quaternion).
  // The tetrahedral groups sit inside mu_12 * 2T, the octahedral ones inside
  // mu_24 * 2O and G16 inside mu_60 * 2I.
  switch (id) {
    case 4:
      return std::vector<Mat2>{scale(zeta(2, 12), quat(h, h, h, h)),
                               scale(zeta(2, 12), quat(h, -h, h, -h))};
    case 5:
      return std::vector<Mat2>{scale(zeta(2, 12), quat(h, h, h, h)),
                               scale(zeta(2, 12), quat(h, -h, h, h))};
    case 6:
      return std::vector<Mat2>{scale(zeta(3, 12), quat(0, 1, 0, 0)),
                               scale(zeta(2, 12), quat(h, h, h, h))};
    case 7:
      return std::vector<Mat2>{scale(zeta(3, 12), quat(0, 1, 0, 0)),
                               scale(zeta(2, 12), quat(h, h, h, h)),
                               scale(zeta(2, 12), quat(h, -h, -h, -h))};
    case 8:
      return std::vector<Mat2>{scale(zeta(3, 24), quat(r, r, 0, 0)),
                               scale(zeta(3, 24), quat(r, 0, 0, -r))};
    case 12:
      return std::vector<Mat2>{scale(zeta(6, 24), quat(0, r, r, 0)),
                               scale(zeta(6, 24), quat(0, r, 0, r)),
                               scale(zeta(6, 24), quat(0, -r, r, 0))};
    case 16:
      return std::vector<Mat2>{scale(zeta(6, 60), quat(f, -h, 0, -g)),
                               scale(zeta(6, 60), quat(f, -h, 0, g))};
    default:
      return std::nullopt;
  }
}

}  // namespace crg
