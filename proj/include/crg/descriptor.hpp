#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include "crg/errors.hpp"

namespace crg {

// Symbolic identity of an irreducible complex reflection group.
//
// Three variants cover the classification:
//   Imprimitive  G(m,p,n), the monomial groups (p | m, n >= 2, irreducible)
//   Exceptional  G4 .. G37
//   Symmetric    Sym(n), the symmetric group on n+1 letters in its rank-n
//                reflection action (kept symbolic; no matrix model)

struct Imprimitive {
  long m = 1;
  long p = 1;
  long n = 2;
  auto operator<=>(const Imprimitive&) const = default;
};

struct Exceptional {
  int id = 4;
  auto operator<=>(const Exceptional&) const = default;
};

struct Symmetric {
  long n = 1;
  auto operator<=>(const Symmetric&) const = default;
};

class GroupDescriptor {
public:
  using Variant = std::variant<Imprimitive, Exceptional, Symmetric>;

  // Factories validate and throw ConstraintError on rejected parameters.
  static GroupDescriptor imprimitive(long m, long p, long n);
  static GroupDescriptor exceptional(int id);
  static GroupDescriptor symmetric(long n);

  const Variant& variant() const { return v_; }

  bool is_imprimitive() const { return std::holds_alternative<Imprimitive>(v_); }
  bool is_exceptional() const { return std::holds_alternative<Exceptional>(v_); }
  bool is_symmetric() const { return std::holds_alternative<Symmetric>(v_); }

  const Imprimitive& as_imprimitive() const { return std::get<Imprimitive>(v_); }
  const Exceptional& as_exceptional() const { return std::get<Exceptional>(v_); }
  const Symmetric& as_symmetric() const { return std::get<Symmetric>(v_); }

  int rank() const;

  // Canonical rendering: "G(m,p,n)", "G25", "Sym(n)". Round-trips through
  // parse_descriptor.
  std::string str() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
  friend bool operator<(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.v_ < b.v_;
  }

private:
  explicit GroupDescriptor(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// Grammar:  G(<m>,<p>,<n>)  |  G<id>  |  Sym(<n>)
// Case-insensitive keywords, whitespace-insensitive. Throws ParseError for
// malformed text and ConstraintError for well-formed but rejected groups.
GroupDescriptor parse_descriptor(std::string_view text);

}  // namespace crg
