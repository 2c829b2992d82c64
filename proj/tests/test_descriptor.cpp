#include <doctest.h>

#include "crg/descriptor.hpp"
#include "crg/monomial.hpp"

using namespace crg;

TEST_CASE("grammar accepts the three descriptor families") {
  CHECK(parse_descriptor("G(4,2,3)") == GroupDescriptor::imprimitive(4, 2, 3));
  CHECK(parse_descriptor("G25") == GroupDescriptor::exceptional(25));
  CHECK(parse_descriptor("Sym(4)") == GroupDescriptor::symmetric(4));
}

TEST_CASE("grammar is whitespace- and case-insensitive") {
  CHECK(parse_descriptor("  g ( 4 , 2 , 3 ) ") == GroupDescriptor::imprimitive(4, 2, 3));
  CHECK(parse_descriptor("g25") == GroupDescriptor::exceptional(25));
  CHECK(parse_descriptor("SYM(2)") == GroupDescriptor::symmetric(2));
  CHECK(parse_descriptor("sYm( 10 )") == GroupDescriptor::symmetric(10));
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_descriptor(""), ParseError);
  CHECK_THROWS_AS(parse_descriptor("banana"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("G(4,2"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("G(4;2;3)"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("G25x"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("Sym4"), ParseError);
  try {
    parse_descriptor("G(4,2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("constraint violations name the violated invariant") {
  CHECK_THROWS_WITH_AS(parse_descriptor("G(4,3,2)"),
                       doctest::Contains("p must divide m"), ConstraintError);
  CHECK_THROWS_WITH_AS(parse_descriptor("G(5,5,1)"), doctest::Contains("rank-1"),
                       ConstraintError);
  CHECK_THROWS_WITH_AS(parse_descriptor("G(1,1,3)"), doctest::Contains("reducible"),
                       ConstraintError);
  CHECK_THROWS_WITH_AS(parse_descriptor("G(2,2,2)"), doctest::Contains("reducible"),
                       ConstraintError);
  CHECK_THROWS_AS(parse_descriptor("G3"), ConstraintError);
  CHECK_THROWS_AS(parse_descriptor("G38"), ConstraintError);
  CHECK_THROWS_AS(parse_descriptor("Sym(0)"), ConstraintError);
}

TEST_CASE("printed descriptors re-parse to themselves") {
  const GroupDescriptor descriptors[] = {
      GroupDescriptor::imprimitive(4, 2, 3), GroupDescriptor::imprimitive(6, 6, 2),
      GroupDescriptor::exceptional(4),       GroupDescriptor::exceptional(37),
      GroupDescriptor::symmetric(1),         GroupDescriptor::symmetric(9),
  };
  for (const auto& d : descriptors) CHECK(parse_descriptor(d.str()) == d);
}

// Why G(2,2,2) is rejected: its four monomial matrices all preserve the line
// through (1,1), so the rank-2 action is reducible.
TEST_CASE("G(2,2,2) fixes a line, hence is reducible") {
  const long L = ambient_order(2, 2);
  const MonoMatrix elements[] = {
      MonoMatrix::identity(2, L),
      MonoMatrix({0, 1}, {L / 2, L / 2}, L),  // diag(-1,-1)
      MonoMatrix({1, 0}, {0, 0}, L),          // swap
      MonoMatrix({1, 0}, {L / 2, L / 2}, L),  // swap with both signs
  };
  MonoVector diag;
  diag.coords = {RootScalar::one(L), RootScalar::one(L)};
  for (const auto& w : elements) {
    const MonoVector image = w.apply(diag);
    auto lambda = proportionality_scalar(diag, image);
    REQUIRE(lambda.has_value());  // image is a scalar multiple: the line is invariant
  }
}
