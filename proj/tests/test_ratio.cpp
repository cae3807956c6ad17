// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "consets/ratio.hpp"

using consets::BigInt;
using consets::Ratio;

TEST_CASE("ratios are kept in lowest terms") {
  CHECK(Ratio(8, 18).str() == "4/9");
  CHECK(Ratio(20, 8).str() == "5/2");
  CHECK(Ratio(3, -6).str() == "-1/2");
  CHECK(Ratio(0, -5).str() == "0/1");
  CHECK(Ratio(2).str() == "2/1");
  CHECK_THROWS_AS(Ratio(1, 0), std::domain_error);
}

TEST_CASE("ratio arithmetic and exact comparison") {
  CHECK(Ratio(1, 3) + Ratio(1, 6) == Ratio(1, 2));
  CHECK(Ratio(7, 13) - Ratio(2, 5) == Ratio(9, 65));
  CHECK(Ratio(2, 3) * Ratio(3, 4) == Ratio(1, 2));
  CHECK(Ratio(2, 3) / Ratio(5, 3) == Ratio(2, 5));
  CHECK_THROWS_AS(Ratio(1) / Ratio(0), std::domain_error);
  CHECK(Ratio(28, 13) > Ratio(32, 15));
  CHECK(Ratio(2) < Ratio(32, 15));
  CHECK(Ratio(-1, 2) < Ratio(1, 3));
  BigInt big = 1;
  big <<= 200;
  // Differ only at the 2^-200 scale.
  CHECK(Ratio(big, big * 2 + 1) < Ratio(1, 2));
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Ratio(5, 3).decimal() == "1.666667");
  CHECK(Ratio(4, 7).decimal() == "0.571429");
  CHECK(Ratio(1, 8).decimal() == "0.125000");
  CHECK(Ratio(1, 2000000).decimal() == "0.000001");
  CHECK(Ratio(1, 2000001).decimal() == "0.000000");
  CHECK(Ratio(-1, 3).decimal() == "-0.333333");
  CHECK(Ratio(-1, 3000000).decimal() == "0.000000");
  CHECK(Ratio(7, 2).decimal(0) == "4");
  CHECK(Ratio(2).decimal() == "2.000000");
  CHECK(Ratio(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("ratio parsing") {
  CHECK(Ratio::parse("12/7") == Ratio(12, 7));
  CHECK(Ratio::parse("-6/4") == Ratio(-3, 2));
  CHECK(Ratio::parse("5") == Ratio(5));
  CHECK_THROWS(Ratio::parse("x/2"));
  CHECK_THROWS(Ratio::parse("1/0"));
}
