#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dd/errors.hpp"
#include "dd/genfunc.hpp"

using namespace dd;

namespace {
const DigitSystem& no9() {
  static DigitSystem ds(10, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  return ds;
}
const DigitSystem& pos10() {
  static DigitSystem ds(10, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  return ds;
}
}  // namespace

TEST_CASE("mgf point evaluation") {
  const DigitSystem full(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  const Cplx t{1.0, 0.0};
  CHECK(std::abs(mgf_E(full, t, 1e-13) - (std::exp(1.0) - 1.0)) < 1e-12);
  CHECK(mgf_E(no9(), {0.0, 0.0}, 1e-13) == Cplx{1.0, 0.0});
  const DigitSystem one(10, {3});
  CHECK(std::abs(mgf_E(one, {2.0, -1.0}, 1e-13) - std::exp(Cplx{2.0, -1.0} / 3.0)) <
        1e-12);
}

TEST_CASE("reciprocal near a zero of E") {
  const DigitSystem full(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  // E(t) = (e^t - 1)/t vanishes at t = 2 pi i.
  const Cplx zero{0.0, 2.0 * std::numbers::pi};
  CHECK_THROWS_AS(bgf_B(full, zero, 1e-13), Error);
  try {
    bgf_B(full, zero, 1e-13);
    FAIL("expected NearZeroOfE");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NearZeroOfE);
  }
  CHECK(std::abs(bgf_B(full, {1.0, 0.0}, 1e-13) * mgf_E(full, {1.0, 0.0}, 1e-13) -
                 1.0) < 1e-13);
}

TEST_CASE("exact Taylor data") {
  CHECK(E_taylor(no9(), 1).coeffs[1] == BigRational(4, 9));
  CHECK(E_taylor(no9(), 5).order == 5);
  const TaylorCoeffs bt = B_taylor(no9(), 10);
  const RationalSeq mu = mu_rational(no9(), 10);
  for (int m = 0; m <= 10; ++m) CHECK(bt.coeffs[m] == mu[m]);
}

TEST_CASE("values at non-positive integers") {
  try {
    neg_values(DigitSystem(10, {7}), 4);
    FAIL("expected UnsupportedCase");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedCase);
  }
  CHECK_THROWS_AS(neg_values(DigitSystem(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), 4),
                  Error);
  // 0 admissible: all negative-integer values vanish exactly.
  const RationalSeq z = neg_values(no9(), 8);
  CHECK(z[0] == BigRational(-1));
  for (int m = 1; m <= 8; ++m) CHECK(z[m] == 0);
  // 0 not admissible: nonzero rationals.
  const RationalSeq k = neg_values(pos10(), 2);
  CHECK(k[0] == BigRational(-9, 8));
  CHECK(k[1] == BigRational(45, 712));
  CHECK(k[1] != 0);
}

TEST_CASE("C series evaluation") {
  CHECK(C_eval(pos10(), {0.0, 0.0}, 1e-13).real() == doctest::Approx(-1.125));
  const DigitSystem two3(3, {1, 2});
  CHECK(C_eval(two3, {0.0, 0.0}, 1e-13).real() == doctest::Approx(-2.0));
  try {
    C_eval(no9(), {0.5, 0.0}, 1e-13);
    FAIL("expected UnsupportedCase");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedCase);
  }
  // First denominator factor vanishes at t = b * 2 pi i / 9 for digits 1..9.
  const Cplx pole{0.0, 10.0 * 2.0 * std::numbers::pi / 9.0};
  CHECK_THROWS_AS(C_eval(pos10(), pole, 1e-13), Error);
  try {
    C_eval(pos10(), pole, 1e-13);
    FAIL("expected NearPoleOfC");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NearPoleOfC);
  }
}

TEST_CASE("sampler determinism and support") {
  CHECK(cantor_sample(no9(), 40, 42) == cantor_sample(no9(), 40, 42));
  CHECK(cantor_sample(no9(), 40, 42) != cantor_sample(no9(), 40, 43));
  CHECK_THROWS_AS(cantor_sample(no9(), 0, 1), Error);
  const DigitSystem one(10, {3});
  CHECK(cantor_sample(one, 20, 5) ==
        doctest::Approx((1.0 / 3.0) * (1.0 - 1e-20)).epsilon(1e-15));
  // Loose sanity on the mean (the strict 4-sigma check lives in the
  // acceptance suite).
  double mean = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) mean += cantor_sample(no9(), 40, 1000 + i);
  mean /= n;
  CHECK(mean == doctest::Approx(4.0 / 9.0).epsilon(0.02));
}
