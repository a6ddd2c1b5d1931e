#include "doctest.h"

#include <random>

#include "valext/kummer.hpp"

using namespace valext;

TEST_CASE("kummer tabled cases") {
  CHECK(kummer_abelian_test(Rational(-4), 4));
  CHECK_FALSE(kummer_abelian_test(Rational(2), 4));
  CHECK(kummer_abelian_test(Rational(9), 2));
  CHECK(splitting_field_is_abelian(Rational(-4), 4) == std::optional<bool>(true));
  CHECK(splitting_field_is_abelian(Rational(2), 4) == std::optional<bool>(false));
  CHECK(integer_root(Integer(-27), 3) == std::optional<Integer>(Integer(-3)));
  CHECK_FALSE(integer_root(Integer(-4), 2));
  CHECK(is_nth_power(make_rational(8, 27), 3));
}

TEST_CASE("kummer against brute force") {
  std::mt19937_64 rng(3);
  const long pool[] = {-32, -27, -16, -9, -8, -4, -3, -2, -1, 1, 2, 3, 4, 5, 8, 9, 16, 25, 27, 32, 64, 81};
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 50; ++trial) {
    unsigned long n = 1 + rng() % 6;
    Rational a(pool[rng() % std::size(pool)]);
    if (rng() % 4 == 0) a = make_rational(a.get_num().get_si(), 1 + static_cast<long>(rng() % 3));
    auto brute = splitting_field_is_abelian(a, n);
    if (!brute) continue;
    CHECK(*brute == kummer_abelian_test(a, n));
    ++checked;
  }
  CHECK(checked == 50);
}
