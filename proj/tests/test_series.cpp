#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace powstr;
using namespace testing_support;

TEST_CASE("series_from_coeffs") {
  auto s = series_from_coeffs(Z(), {integer(1), integer(1), integer(1)});
  CHECK(s.order() == 2);
  auto l = ser(ZL(), {"1", "1 + L"});
  CHECK(l.order() == 1);
  CHECK(format_element(l[1]) == "1 + L");
  CHECK(ser(Z(), {"1"}).order() == 0);

  CHECK_THROWS_AS(series_from_coeffs(Z(), {}), std::invalid_argument);
  CHECK_THROWS_AS(series_from_coeffs(ZL(), {el(ZL(), "1"), el(Zuv(), "u")}),
                  ModelMismatch);
  CHECK_THROWS_AS((void)l[2], PrecisionError);
}

TEST_CASE("series_mul") {
  CHECK(series_equal(series_mul(ser(Z(), {"1", "1", "0"}), ser(Z(), {"1", "-1", "0"})),
                     ser(Z(), {"1", "0", "-1"}), 2));
  auto a = ser(Z(), {"1", "1", "1"});
  CHECK(series_equal(a * TruncatedSeries::one(Z(), 2), a, 2));
  // (sum t^n)^2 = sum (n+1) t^n
  auto geo = ser(Z(), {"1", "1", "1", "1"});
  CHECK(ints(geo * geo) == std::vector<Integer>{1, 2, 3, 4});
  // Truncates at the smaller order.
  CHECK((geo * a).order() == 2);
  CHECK_THROWS_AS(series_mul(geo, ser(ZL(), {"1"})), ModelMismatch);
}

TEST_CASE("series_invert") {
  CHECK(ints(series_invert(ser(Z(), {"1", "-1", "0", "0"}))) ==
        std::vector<Integer>{1, 1, 1, 1});
  CHECK(ints(series_invert(ser(Z(), {"1", "1", "0", "0"}))) ==
        std::vector<Integer>{1, -1, 1, -1});
  CHECK(series_equal(series_invert(ser(ZL(), {"1", "-L", "0"})),
                     ser(ZL(), {"1", "L", "L^2"}), 2));
  CHECK_THROWS_AS(series_invert(ser(Z(), {"2", "1"})), std::domain_error);
  CHECK_THROWS_AS(series_invert(ser(ZL(), {"L", "1"})), std::domain_error);
}

TEST_CASE("series_substitute_power") {
  auto s = series_substitute_power(ser(Z(), {"1", "1"}), 2);
  CHECK(s.order() == 3);
  CHECK(ints(s) == std::vector<Integer>{1, 0, 1, 0});
  auto s3 = series_substitute_power(ser(Z(), {"1", "1", "1"}), 3);
  CHECK(ints(s3.truncated(6)) == std::vector<Integer>{1, 0, 0, 1, 0, 0, 1});
  auto c = series_substitute_power(ser(Z(), {"1"}), 5);
  CHECK(ints(c) == std::vector<Integer>{1, 0, 0, 0, 0});
  CHECK_THROWS_AS(series_substitute_power(ser(Z(), {"1"}), 0),
                  std::invalid_argument);
}

TEST_CASE("series_equal") {
  auto a = ser(Z(), {"1", "1"});
  auto b = ser(Z(), {"1", "1", "1"});
  CHECK(series_equal(a, b, 1));
  CHECK_THROWS_AS(series_equal(a, b, 2), PrecisionError);
  auto p = ser(Z(), {"1", "1", "0"}) * ser(Z(), {"1", "-1", "0"});
  CHECK(series_equal(ser(Z(), {"1", "0", "-1"}), p, 2));
  CHECK(first_mismatch(b, ser(Z(), {"1", "1", "2"}), 2) == std::size_t{2});
  CHECK_THROWS_AS(series_equal(a, ser(ZL(), {"1", "1"}), 1), ModelMismatch);
}

TEST_CASE("truncation never extends precision") {
  auto a = ser(Z(), {"1", "2"});
  CHECK_THROWS_AS(a.truncated(2), PrecisionError);
  CHECK(a.truncated(0).order() == 0);
}

TEST_CASE("series ring laws at every order") {
  std::mt19937_64 rng(3);
  for (const RingModel *m : {&Z(), &ZL(), &Zuv()}) {
    for (std::size_t order = 0; order <= 8; ++order) {
      for (int i = 0; i < 10; ++i) {
        auto a = random_series(*m, order, rng);
        auto b = random_series(*m, order, rng);
        auto c = random_series(*m, order, rng);
        REQUIRE(series_equal(a * b, b * a, order));
        REQUIRE(series_equal((a * b) * c, a * (b * c), order));
        REQUIRE(series_equal(a * (b + c), a * b + a * c, order));
        REQUIRE(series_equal((a + b) + c, a + (b + c), order));
        // two-sided inverse
        auto inv = series_invert(a);
        REQUIRE(series_equal(a * inv, TruncatedSeries::one(*m, order), order));
        REQUIRE(series_equal(inv * a, TruncatedSeries::one(*m, order), order));
      }
    }
  }
}

TEST_CASE("substitute_power is multiplicative") {
  std::mt19937_64 rng(5);
  for (const RingModel *m : {&Z(), &ZL(), &Zuv()}) {
    for (int i = 0; i < 30; ++i) {
      auto a = random_series(*m, 6, rng);
      auto b = random_series(*m, 6, rng);
      for (std::size_t k = 1; k <= 3; ++k) {
        auto lhs = series_substitute_power(a * b, k);
        auto rhs = series_substitute_power(a, k) * series_substitute_power(b, k);
        REQUIRE(lhs.order() == rhs.order());
        REQUIRE(series_equal(lhs, rhs, lhs.order()));
      }
    }
  }
}
