#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "dd/digit_system.hpp"
#include "dd/errors.hpp"

using namespace dd;

namespace {
std::vector<int> range_digits(int lo, int hi) {
  std::vector<int> d;
  for (int i = lo; i <= hi; ++i) d.push_back(i);
  return d;
}
}  // namespace

TEST_CASE("construction and derived constants") {
  const DigitSystem full(10, range_digits(0, 9));
  CHECK(full.n_total() == 10);
  CHECK(full.n_nonzero() == 9);
  CHECK(full.s0() == 1.0);  // exact by integer comparison, not via log
  CHECK(full.is_full());
  CHECK(full.has_zero());

  const DigitSystem one(2, {1});
  CHECK(one.n_total() == 1);
  CHECK(one.n_nonzero() == 1);
  CHECK(one.s0() == 0.0);
  CHECK(one.lambda() == 1.0);
  CHECK(one.is_singleton());

  const DigitSystem no9(10, range_digits(0, 8));
  CHECK(no9.s0() == doctest::Approx(std::log(9.0) / std::log(10.0)).epsilon(1e-15));
  CHECK(no9.f_max() == 8);
  CHECK(no9.lambda() == doctest::Approx(8.0 / 9.0));

  // Set semantics: duplicates collapse, order is normalized.
  const DigitSystem dup(10, {5, 1, 5, 1, 3});
  CHECK(dup.digits() == std::vector<int>({1, 3, 5}));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(DigitSystem(10, {}), Error);
  CHECK_THROWS_AS(DigitSystem(10, {0}), Error);
  CHECK_THROWS_AS(DigitSystem(10, {0, 10}), Error);
  CHECK_THROWS_AS(DigitSystem(10, {-1, 2}), Error);
  CHECK_THROWS_AS(DigitSystem(1, {0}), Error);
  try {
    DigitSystem(10, {0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OnlyZeroDigit);
  }
  try {
    DigitSystem(16, {3, 16});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DigitOutOfRange);
  }
}

TEST_CASE("power sums") {
  const DigitSystem full(10, range_digits(0, 9));
  auto g = full.power_sums(1);
  CHECK(g[0] == 10);
  CHECK(g[1] == 45);
  CHECK(DigitSystem(2, {1}).power_sums(5)[5] == 1);

  const DigitSystem nine(10, {9});
  auto gp = nine.power_sums_prime(3);
  CHECK(gp[0] == 1);  // 0^0 = 1
  CHECK(gp[1] == 0);
  CHECK(gp[2] == 0);
  CHECK(full.power_sums_prime(1)[1] == 45);

  // Scaled sums agree with the exact ones.
  const DigitSystem no9(10, range_digits(0, 8));
  const auto exact = no9.power_sums(12);
  const auto scaled = no9.scaled_power_sums(12);
  for (int j = 0; j <= 12; ++j) {
    CHECK(scaled[j] ==
          doctest::Approx(exact[j].get_d() / std::pow(10.0, j)).epsilon(1e-14));
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_admissible(DigitSystem(10, {1}), 3) ==
        std::vector<std::uint64_t>{111});
  CHECK(enumerate_admissible(DigitSystem(2, {0, 1}), 2) ==
        std::vector<std::uint64_t>{2, 3});
  CHECK(enumerate_admissible(DigitSystem(10, {1, 2}), 2) ==
        std::vector<std::uint64_t>{11, 12, 21, 22});

  const DigitSystem no9(10, range_digits(0, 8));
  for (int l = 1; l <= 4; ++l) {
    const auto v = enumerate_admissible(no9, l);
    CHECK(v.size() == admissible_count(no9, l));
    CHECK(std::is_sorted(v.begin(), v.end()));
  }
  CHECK(admissible_count(no9, 3) == 8 * 9 * 9);

  CHECK_THROWS_AS(enumerate_admissible(no9, 5, std::uint64_t{100}), Error);
  try {
    enumerate_admissible(no9, 5, std::uint64_t{100});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EnumerationTooLarge);
  }
  // Exceeds exact 64-bit range even though the count is tiny.
  CHECK_THROWS_AS(enumerate_admissible(DigitSystem(10, {1}), 25), Error);
}

TEST_CASE("streaming range matches materialized enumeration") {
  const DigitSystem ds(10, {0, 2, 7});
  const auto list = enumerate_admissible(ds, 4);
  AdmissibleRange range(ds, 4);
  double n = 0.0;
  std::size_t i = 0;
  while (range.next(n)) {
    REQUIRE(i < list.size());
    CHECK(n == static_cast<double>(list[i]));
    ++i;
  }
  CHECK(i == list.size());
  range.reset();
  CHECK(range.next(n));
  CHECK(n == static_cast<double>(list[0]));
}

TEST_CASE("block sums") {
  const DigitSystem rep(10, {1});
  CHECK(block_sum(rep, 2, {1.0, 0.0}).real() == doctest::Approx(1.0 / 11.0));
  CHECK(block_sum(DigitSystem(2, {1}), 3, {2.0, 0.0}).real() ==
        doctest::Approx(1.0 / 49.0));

  const DigitSystem full(10, range_digits(0, 9));
  double harmonic = 0.0;
  for (int a = 1; a <= 9; ++a) harmonic += 1.0 / a;
  CHECK(block_sum(full, 1, {1.0, 0.0}).real() == doctest::Approx(harmonic));

  // Complex path against a hand loop.
  const DigitSystem ds(10, {1, 4});
  const Cplx s{1.2, -0.8};
  Cplx want = 0.0;
  for (std::uint64_t n : enumerate_admissible(ds, 3)) {
    want += std::exp(-s * std::log(static_cast<double>(n)));
  }
  CHECK(std::abs(block_sum(ds, 3, s) - want) < 1e-14);
}

TEST_CASE("lattice geometry") {
  const DigitSystem no9(10, range_digits(0, 8));
  const double v = 2.0 * 3.14159265358979323846 / std::log(10.0);
  auto p = nearest_lattice(no9, {no9.s0(), 0.0});
  CHECK(p.point.m == 0);
  CHECK(p.point.k == 0);
  CHECK(p.distance < 1e-15);

  p = nearest_lattice(no9, {no9.s0() - 3.0, v * 2 + 0.01});
  CHECK(p.point.m == 3);
  CHECK(p.point.k == 2);
  CHECK(p.distance == doctest::Approx(0.01).epsilon(1e-6));

  // Right of the abscissa the nearest column clamps at m = 0.
  p = nearest_lattice(no9, {7.5, 0.0});
  CHECK(p.point.m == 0);
  CHECK(p.distance == doctest::Approx(7.5 - no9.s0()));

  CHECK(std::abs(lattice_location(no9, {2, -1}) -
                 Cplx{no9.s0() - 2.0, -v}) < 1e-14);
}

TEST_CASE("digit set text syntax") {
  CHECK(parse_digit_set("0-8", 10) == range_digits(0, 8));
  CHECK(parse_digit_set("1,3,5,7,9", 10) == std::vector<int>({1, 3, 5, 7, 9}));
  CHECK(parse_digit_set("0-3,7", 10) == std::vector<int>({0, 1, 2, 3, 7}));
  CHECK_THROWS_AS(parse_digit_set("", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_digit_set("3-1", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_digit_set("1;2", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_digit_set("a-b", 10), std::invalid_argument);
  // Range validity against the base is the constructor's job.
  CHECK_THROWS_AS(DigitSystem(5, parse_digit_set("0-8", 5)), Error);
}

TEST_CASE("enumeration cap environment override") {
  unsetenv("DD_ENUM_CAP");
  CHECK(default_enum_cap() == 100'000'000ULL);
  setenv("DD_ENUM_CAP", "123456", 1);
  CHECK(default_enum_cap() == 123456ULL);
  setenv("DD_ENUM_CAP", "not-a-number", 1);
  CHECK(default_enum_cap() == 100'000'000ULL);
  unsetenv("DD_ENUM_CAP");
}
