#include <random>

#include "doctest.h"
#include "stanley/io.hpp"
#include "testsupport.hpp"

using namespace stanley;
using namespace stanley::testing;

TEST_CASE("parsing a plain ideal file") {
  IdealFile f = parse_ideal_file("n=2\nI= x1^2, x2^2\n");
  CHECK(f.pair.numerator() == MonomialIdeal(2, {{2, 0}, {0, 2}}));
  CHECK(f.pair.denominator().is_zero());
  CHECK_FALSE(f.g.has_value());
  CHECK_FALSE(f.quotient_form);
}

TEST_CASE("parsing the figure4 instance file with its g") {
  IdealFile f = parse_ideal_file(
      "# the two-variable quotient example\n"
      "n = 2\n"
      "I = x1^2*x2^4, x1^3*x2^3, x1^5*x2\n"
      "J = x1^4*x2^5, x1^6*x2^2\n"
      "g = 7 6\n");
  CHECK(f.pair.numerator() == MonomialIdeal(2, {{2, 4}, {3, 3}, {5, 1}}));
  CHECK(f.pair.denominator() == MonomialIdeal(2, {{4, 5}, {6, 2}}));
  REQUIRE(f.g.has_value());
  CHECK(*f.g == Exponent{7, 6});
}

TEST_CASE("parsing the quotient module form") {
  IdealFile f = parse_ideal_file("n=3\nmodule= S/I\nI= x1*x2\n");
  CHECK(f.pair.numerator().is_unit());
  CHECK(f.pair.denominator() == MonomialIdeal(3, {{1, 1, 0}}));
  CHECK(f.quotient_form);
  CHECK_THROWS_AS(parse_ideal_file("n=2\nmodule=S/I\nI=x1\nJ=x2\n"), ParseError);
}

TEST_CASE("raw exponent tuples and the unit monomial") {
  IdealFile f = parse_ideal_file("n=2\nI = (2,0), x2^2\n");
  CHECK(f.pair.numerator() == MonomialIdeal(2, {{2, 0}, {0, 2}}));
  IdealFile unit = parse_ideal_file("n=2\nI = 1\n");
  CHECK(unit.pair.numerator().is_unit());
  IdealFile zero_j = parse_ideal_file("n=2\nI = x1\nJ = 0\n");
  CHECK(zero_j.pair.denominator().is_zero());
}

TEST_CASE("parse errors carry a position") {
  auto line_of = [](const char* text) {
    try {
      parse_ideal_file(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("n=2\nI= x1^2, y2\n") == 2);
  CHECK(line_of("n=2\nI= x3\n") == 2);          // variable out of range
  CHECK(line_of("I= x1\n") == 1);               // n must come first
  CHECK(line_of("n=2\nI= x1\ng = 1 2 3\n") == 3);
  CHECK(line_of("n=2\nI= x1\nwhat = 3\n") == 3);
  CHECK(line_of("n=2\nI= x1\nn=3\n") == 3);     // duplicate key
  CHECK(line_of("n=2\nI = 12\n") == 2);         // bare numbers other than 1
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_ideal_file("n=2\nI=x1^2\nJ=x1\n"), ParseError);  // J not in I
  CHECK_THROWS_AS(parse_ideal_file("n=2\nI=x1^2\ng=1 1\n"), ParseError);  // bad g
  CHECK_THROWS_AS(parse_ideal_file("n=2\nI=x1, x2\nJ=x1, x2\n"), EmptyModuleError);
  CHECK_THROWS_AS(parse_ideal_file("n=2\nJ=x1\n"), ParseError);  // missing I
}

TEST_CASE("ideal files round-trip") {
  std::mt19937 rng(7501);
  for (int trial = 0; trial < 40; ++trial) {
    QuotientPair pair = random_pair(rng, 4, 4, 4, true);
    IdealFile f = parse_ideal_file(format_ideal_file(pair));
    CHECK(f.pair == pair);
  }
  // Quotient pairs print in S/I form and come back identical.
  QuotientPair quotient(MonomialIdeal::unit(3), MonomialIdeal(3, {{1, 1, 0}}));
  std::string text = format_ideal_file(quotient);
  CHECK(text.find("module = S/I") != std::string::npos);
  CHECK(parse_ideal_file(text).pair == quotient);
  // g is preserved.
  QuotientPair squares(MonomialIdeal(2, {{2, 0}, {0, 2}}), MonomialIdeal::zero(2));
  IdealFile f = parse_ideal_file(format_ideal_file(squares, Exponent{3, 3}));
  REQUIRE(f.g.has_value());
  CHECK(*f.g == Exponent{3, 3});
}

TEST_CASE("monomial formatting") {
  CHECK(format_monomial({0, 0}) == "1");
  CHECK(format_monomial({1, 0, 2}) == "x1*x3^2");
  CHECK(format_monomial({0, 1, 0}) == "x2");
}

TEST_CASE("decomposition files round-trip") {
  QuotientPair pair(MonomialIdeal(2, {{1, 3}, {3, 1}}), MonomialIdeal::zero(2));
  StanleyDecomposition d{pair,
                         {
                             space({1, 3}, {1, 2}),
                             space({3, 2}, {1}),
                             space({0, 2}, {}),
                         }};
  std::string text = format_decomposition(d);
  CHECK(text.find("K[]") != std::string::npos);
  StanleyDecomposition back = parse_decomposition(text, pair);
  CHECK(back.spaces == d.spaces);

  CHECK_THROWS_AS(parse_decomposition("x^(1,2) K[ 3 ]", pair), ParseError);
  CHECK_THROWS_AS(parse_decomposition("x^(1) K[]", pair), ParseError);
  CHECK_THROWS_AS(parse_decomposition("nonsense", pair), ParseError);
}

TEST_CASE("partition and poset formats") {
  QuotientPair pair(MonomialIdeal(2, {{2, 0}, {0, 2}}), MonomialIdeal::zero(2));
  CharacteristicPoset poset(pair);
  Partition part = {{poset.index_of({2, 0}), poset.index_of({2, 2})}};
  CHECK(format_partition(poset, part) == "[(2,0) , (2,2)]\n");

  std::string dump = format_poset(poset);
  CHECK(dump == "0 2 1\n2 0 1\n1 2 1\n2 1 1\n2 2 2\n");
}
