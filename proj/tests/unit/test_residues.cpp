#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dd/errors.hpp"
#include "dd/residues.hpp"

using namespace dd;

namespace {
const DigitSystem& no9() {
  static DigitSystem ds(10, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  return ds;
}
std::vector<BigRational> classical_bernoulli(int M) {
  std::vector<BigRational> b(static_cast<std::size_t>(M) + 1);
  b[0] = 1;
  for (int m = 1; m <= M; ++m) {
    const auto row = binomial_row(m + 1);
    BigRational sum = 0;
    for (int j = 0; j < m; ++j) sum += BigRational(row[j]) * b[j];
    b[m] = -sum / BigRational(m + 1);
  }
  return b;
}
}  // namespace

TEST_CASE("mu sequence against classical Bernoulli numbers") {
  const DigitSystem full(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  const RationalSeq mu = mu_rational(full, 12);
  const auto oracle = classical_bernoulli(12);
  CHECK(mu[1] == BigRational(-1, 2));
  for (int m = 0; m <= 12; ++m) CHECK(mu[m] == oracle[m]);
  // Odd entries beyond 1 vanish.
  CHECK(mu[3] == 0);
  CHECK(mu[5] == 0);
  CHECK(mu[11] == 0);
}

TEST_CASE("mu sequence for singleton systems") {
  // f = b-1: alternating signs.
  const RationalSeq nine = mu_rational(DigitSystem(10, {9}), 8);
  int sign = 1;
  for (int m = 0; m <= 8; ++m) {
    CHECK(nine[m] == BigRational(sign));
    sign = -sign;
  }
  // General f: (-f/(b-1))^m, here (-1/9)^m.
  const RationalSeq one = mu_rational(DigitSystem(10, {1}), 6);
  BigRational expect = 1;
  for (int m = 0; m <= 6; ++m) {
    CHECK(one[m] == expect);
    expect *= BigRational(-1, 9);
  }
}

TEST_CASE("entire-function residues") {
  const DigitSystem full(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(std::abs(residue_entire(full, {0, 0}) - 1.0) < 1e-9);
  CHECK(std::abs(residue_entire(full, {0, 1})) < 1e-8);
  // General-f singleton: the scaling identity gives (-lambda)^m / log b.
  const DigitSystem d3(10, {3});
  for (int m = 0; m <= 4; ++m) {
    const double want = std::pow(-1.0 / 3.0, m) / std::log(10.0);
    CHECK(std::abs(residue_entire(d3, {m, 0}) - want) < 1e-11);
  }
}

TEST_CASE("limit formula diagnostics") {
  const ResidueLimitResult r = residue_limit(no9(), 0, 6);
  CHECK(r.trace.size() == 6);
  CHECK(r.value == r.trace.back());
  // The trace drifts toward the entire-route value without any promised rate.
  const Cplx target = residue_entire(no9(), {0, 0});
  CHECK(std::abs(r.trace[5] - target) < std::abs(r.trace[0] - target));
  CHECK_THROWS_AS(residue_limit(no9(), 0, 12), Error);  // default cap
  try {
    residue_limit(no9(), 0, 12);
    FAIL("expected EnumerationTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EnumerationTooLarge);
  }
  // Singleton at k = 0 is exactly 1/log b at every length.
  const ResidueLimitResult s = residue_limit(DigitSystem(2, {1}), 0, 10);
  for (const Cplx& v : s.trace) {
    CHECK(v.real() == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-14));
    CHECK(v.imag() == 0.0);
  }
}

TEST_CASE("residue rows") {
  const Cplx seed = residue_entire(no9(), {0, 0});
  const ResidueRow row = lambda_row(no9(), 0, 5, seed);
  CHECK(row.k == 0);
  CHECK(row.values.size() == 6);
  CHECK(row.mu_values.size() == 6);  // 1 < N < b: conversion defined
  for (int m = 1; m <= 5; ++m) {
    CHECK(std::abs(row.values[m] - residue_entire(no9(), {m, 0})) < 1e-8);
  }
  // Zero seed annihilates the row.
  for (const Cplx& v : lambda_row(no9(), 3, 8, {0.0, 0.0}).values) {
    CHECK(std::abs(v) == 0.0);
  }
  // Degenerate conversions stay empty instead of dividing by zero.
  CHECK(lambda_row(DigitSystem(2, {1}), 0, 4, seed).mu_values.empty());
  CHECK(lambda_row(DigitSystem(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), 0, 4, seed)
            .mu_values.empty());
}

TEST_CASE("exactness is reproducible") {
  const RationalSeq a = mu_rational(no9(), 20);
  const RationalSeq b = mu_rational(no9(), 28);
  for (int m = 0; m <= 20; ++m) CHECK(a[m] == b[m]);
  CHECK(to_string(a[2]) == "116/891");
}
