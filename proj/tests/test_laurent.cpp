#include "doctest.h"
#include "parb/error.hpp"
#include "parb/laurent.hpp"

using namespace parb;

TEST_CASE("laurent printing") {
  CHECK(to_string(LaurentA()) == "0");
  CHECK(to_string(-A_pow(2) - A_pow(-2)) == "-A^2 - A^-2");
  CHECK(to_string(LaurentA(3) + A_pow(1) * 2) == "2A + 3");
  CHECK(to_string(-A_pow(3)) == "-A^3");
}

TEST_CASE("laurent parse round trip") {
  for (const char* s : {"0", "-A^2 - A^-2", "2A + 3", "-A^3", "A^-1", "5", "-7A^4 + A - 1"}) {
    CHECK(to_string(parse_laurent(s)) == s);
  }
  CHECK_THROWS_AS(parse_laurent("A +"), ParseError);
  CHECK_THROWS_AS(parse_laurent("x"), ParseError);
}

TEST_CASE("laurent ring arithmetic") {
  LaurentA a = A_pow(1) + 2;
  LaurentA b = A_pow(-1) - 1;
  CHECK(to_string(a * b) == "-A - 1 + 2A^-1");
  CHECK((a - a).is_zero());
  CHECK(A_pow(3).pow(-2) == A_pow(-6));
  CHECK((a * a) == a.pow(2));
  CHECK_THROWS_AS(a.unit_inverse(), std::domain_error);
}

TEST_CASE("laurent overflow is detected") {
  LaurentA big(INT64_MAX);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * LaurentA(2), std::overflow_error);
}
