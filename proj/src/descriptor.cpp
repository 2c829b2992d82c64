#include "crg/descriptor.hpp"

#include <cctype>
#include <sstream>

#include "crg/exceptional.hpp"

namespace crg {

GroupDescriptor GroupDescriptor::imprimitive(long m, long p, long n) {
  if (m < 1 || p < 1 || n < 1)
    throw ConstraintError("G(m,p,n) parameters must be positive");
  if (m % p != 0)
    throw ConstraintError("invalid G(" + std::to_string(m) + "," + std::to_string(p) +
                          "," + std::to_string(n) + "): p must divide m");
  if (n == 1)
    throw ConstraintError("invalid G(" + std::to_string(m) + "," + std::to_string(p) +
                          ",1): rank-1 groups are not supported");
  if (m == 1 && p == 1)
    throw ConstraintError("invalid G(1,1," + std::to_string(n) +
                          "): reducible group (permutation action fixes the diagonal line)");
  if (m == 2 && p == 2 && n == 2)
    throw ConstraintError("invalid G(2,2,2): reducible group (splits into two rank-1 pieces)");
  return GroupDescriptor(Imprimitive{m, p, n});
}

GroupDescriptor GroupDescriptor::exceptional(int id) {
  if (id < 4 || id > 37)
    throw ConstraintError("exceptional id must lie in 4..37, got " + std::to_string(id));
  return GroupDescriptor(Exceptional{id});
}

GroupDescriptor GroupDescriptor::symmetric(long n) {
  if (n < 1)
    throw ConstraintError("Sym(n) requires rank n >= 1");
  return GroupDescriptor(Symmetric{n});
}

int GroupDescriptor::rank() const {
  if (is_imprimitive()) return static_cast<int>(as_imprimitive().n);
  if (is_symmetric()) return static_cast<int>(as_symmetric().n);
  return exceptional_rank(as_exceptional().id);
}

std::string GroupDescriptor::str() const {
  std::ostringstream os;
  if (is_imprimitive()) {
    const auto& g = as_imprimitive();
    os << "G(" << g.m << "," << g.p << "," << g.n << ")";
  } else if (is_exceptional()) {
    os << "G" << as_exceptional().id;
  } else {
    os << "Sym(" << as_symmetric().n << ")";
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected ") + what, pos);
  }
  long integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected an unsigned integer", pos);
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 100000000L) throw ParseError("integer literal too large", pos);
      ++pos;
    }
    return v;
  }
};

bool eat_keyword(Cursor& c, std::string_view kw) {
  c.skip_ws();
  if (c.text.size() - c.pos < kw.size()) return false;
  for (std::size_t i = 0; i < kw.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(c.text[c.pos + i])) != kw[i]) return false;
  }
  c.pos += kw.size();
  return true;
}

}  // namespace

GroupDescriptor parse_descriptor(std::string_view text) {
  Cursor c{text};
  if (c.done()) throw ParseError("empty descriptor", 0);

  if (eat_keyword(c, "sym")) {
    c.expect('(', "'(' after Sym");
    long n = c.integer();
    c.expect(')', "')'");
    if (!c.done()) throw ParseError("trailing characters after descriptor", c.pos);
    return GroupDescriptor::symmetric(n);
  }

  if (eat_keyword(c, "g")) {
    if (c.peek() == '(') {
      c.eat('(');
      long m = c.integer();
      c.expect(',', "','");
      long p = c.integer();
      c.expect(',', "','");
      long n = c.integer();
      c.expect(')', "')'");
      if (!c.done()) throw ParseError("trailing characters after descriptor", c.pos);
      return GroupDescriptor::imprimitive(m, p, n);
    }
    long id = c.integer();
    if (!c.done()) throw ParseError("trailing characters after descriptor", c.pos);
    return GroupDescriptor::exceptional(static_cast<int>(id));
  }

  throw ParseError("expected 'G(...)', 'G<id>' or 'Sym(...)'", c.pos);
}

}  // namespace crg
