#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dd/coeffs.hpp"
#include "dd/errors.hpp"

using namespace dd;

namespace {
const DigitSystem& no9() {
  static DigitSystem ds(10, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  return ds;
}
}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer({2.5, -1.0}, 0) == Cplx{1.0, 0.0});
  CHECK(pochhammer({1.0, 0.0}, 6).real() == doctest::Approx(720.0));
  CHECK(std::abs(pochhammer({-2.0, 0.0}, 4)) == 0.0);
  const Cplx s{0.3, 1.7};
  CHECK(std::abs(pochhammer(s, 4) - s * (s + 1.0) * (s + 2.0) * (s + 3.0)) < 1e-13);
}

TEST_CASE("u coefficients: seed and near-pole guard") {
  CHECK(u_coeffs(no9(), {2.0, 0.0}, 0).values[0].real() ==
        doctest::Approx(100.0 / 91.0).epsilon(1e-14));
  // b^{s+m} = N on the candidate lattice; the recurrence refuses there.
  CHECK_THROWS_AS(u_coeffs(no9(), {no9().s0(), 0.0}, 3), Error);
  try {
    u_coeffs(no9(), {no9().s0() - 2.0, 0.0}, 5);
    FAIL("expected NearCandidatePole");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NearCandidatePole);
    CHECK(std::string(e.what()).find("u_2") != std::string::npos);
  }
  CHECK_THROWS_AS(u_coeffs(no9(), {1.0, 0.0}, 400), Error);  // double-range guard
}

TEST_CASE("u_direct preconditions and tail") {
  CHECK_THROWS_AS(u_direct(no9(), {no9().s0() + 0.05, 0.0}, 1, 3), Error);
  CHECK_THROWS_AS(u_direct(no9(), {3.0, 0.0}, 1, 12, std::uint64_t{1000}), Error);
  const TailedValue t = u_direct(no9(), {2.0, 0.0}, 3, 5);
  const double r = 9.0 / 100.0;
  CHECK(t.tail_bound == doctest::Approx(std::pow(r, 6) / (1.0 - r)).epsilon(1e-12));
  // Longer truncations agree within the shorter one's bound.
  const TailedValue t2 = u_direct(no9(), {2.0, 0.0}, 3, 7);
  CHECK(std::abs(t.value - t2.value) <= t.tail_bound);
}

TEST_CASE("v regularization bookkeeping") {
  // Off-lattice: plain recurrence, no regularized index.
  CHECK_FALSE(v_coeffs(no9(), {1.4, 0.2}, 30).regularized_index.has_value());
  // Near (but not exactly on) the m0 = 2 column within the pole threshold.
  const Cplx s = lattice_location(no9(), {2, 0});
  const CoeffSequence v = v_coeffs(no9(), s, 10);
  REQUIRE(v.regularized_index.has_value());
  CHECK(*v.regularized_index == 2);
  for (const Cplx& x : v.values) CHECK(std::isfinite(std::abs(x)));
  // k != 0 lattice points regularize at the same index.
  const CoeffSequence vk = v_coeffs(no9(), lattice_location(no9(), {1, 2}), 6);
  REQUIRE(vk.regularized_index.has_value());
  CHECK(*vk.regularized_index == 1);
}

TEST_CASE("VSeq extends on demand consistently") {
  const Cplx s{0.8, -1.1};
  VSeq seq(no9(), s);
  const CoeffSequence v = v_coeffs(no9(), s, 40);
  CHECK(std::abs(seq.at(40) - v.values[40]) == 0.0);
  CHECK(std::abs(seq.at(7) - v.values[7]) == 0.0);
}

TEST_CASE("alpha product basics") {
  // N = 1 base 2: alpha(s) = prod (1 - 2^{-s-n}).
  const DigitSystem b2(2, {1});
  const Cplx s{1.2, 0.6};
  Cplx want = 1.0;
  for (int n = 0; n < 80; ++n) {
    want *= 1.0 - std::exp(-(s + static_cast<double>(n)) * std::log(2.0));
  }
  CHECK(std::abs(alpha(b2, s) - want) < 1e-14 * std::abs(want));
  // Determinism for fixed s.
  CHECK(alpha(no9(), {0.37, 2.2}) == alpha(no9(), {0.37, 2.2}));
}

TEST_CASE("w_closed seed and pole guard") {
  const Cplx s{0.9, 0.4};
  const Cplx b_s = std::exp(s * std::log(10.0));
  CHECK(std::abs(w_closed(10, s, 0) - b_s / (b_s - 1.0)) < 1e-14);
  // b^{s+j} = 1 at s = 0 already for j = 0.
  CHECK_THROWS_AS(w_closed(10, {0.0, 0.0}, 2), Error);
  try {
    w_closed(10, {-3.0, 0.0}, 5);
    FAIL("expected NearCandidatePole");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NearCandidatePole);
  }
}
