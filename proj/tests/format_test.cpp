#include "lupi/format.hpp"

#include <doctest.h>

using namespace lupi;

TEST_CASE("three significant figures, halves away from zero") {
  CHECK(format_significant(0.28125, 3) == "0.281");
  CHECK(format_significant(0.03125, 3) == "0.0313");
  CHECK(format_significant(0.015625, 3) == "0.0156");
  CHECK(format_significant(0.0078125, 3) == "0.00781");
  CHECK(format_significant(0.25, 3) == "0.25");
  CHECK(format_significant(0.125, 3) == "0.125");
  CHECK(format_significant(0.0999999, 3) == "0.1");
  CHECK(format_significant(123456.0, 3) == "123000");
  CHECK(format_significant(0.0, 3) == "0");
}

TEST_CASE("exact formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 2.0 / 3.0, 1e-300, 0.2871870788979633}) {
    CHECK(std::stod(format_exact(v)) == v);
  }
  CHECK(format_exact(0.5) == "0.5");
  CHECK(format_fixed(0.5, 3) == "0.500");
}
