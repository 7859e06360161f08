#include "dd/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "dd/coeffs.hpp"
#include "dd/continuation.hpp"
#include "dd/digit_system.hpp"
#include "dd/genfunc.hpp"
#include "dd/residues.hpp"

namespace dd::verify {

namespace {

using Clock = std::chrono::steady_clock;

// Accumulates named sub-assertions; a check passes when every one does.
class Scorecard {
 public:
  void require(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (!first_failure_.empty()) first_failure_ += "; ";
      first_failure_ += what;
    }
  }
  void require_close(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os << what << ": |" << got << " - " << want << "| > " << tol;
    require(std::abs(got - want) <= tol, os.str());
  }
  bool pass() const { return failed_ == 0; }
  std::string summary() const {
    if (failed_ == 0) return std::to_string(total_) + " assertions";
    return std::to_string(failed_) + "/" + std::to_string(total_) +
           " assertions failed: " + first_failure_;
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

CheckResult finish(const std::string& name, const Scorecard& sc,
                   Clock::time_point t0, double budget_s = 0.0) {
  CheckResult r;
  r.name = name;
  r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  const bool in_budget = budget_s <= 0.0 || r.wall_ms <= budget_s * 1000.0;
  r.pass = sc.pass() && in_budget;
  r.detail = sc.summary();
  if (!in_budget) {
    r.detail += " [over the " + std::to_string(budget_s) + " s budget]";
  }
  return r;
}

std::vector<int> range_digits(int lo, int hi) {
  std::vector<int> d;
  for (int i = lo; i <= hi; ++i) d.push_back(i);
  return d;
}

DigitSystem full10() { return DigitSystem(10, range_digits(0, 9)); }
DigitSystem no9() { return DigitSystem(10, range_digits(0, 8)); }
DigitSystem pos10() { return DigitSystem(10, range_digits(1, 9)); }
DigitSystem even3() { return DigitSystem(3, {0, 2}); }
DigitSystem full2() { return DigitSystem(2, {0, 1}); }
DigitSystem one10() { return DigitSystem(10, {1}); }

// Fixed cross-check oracle: the classical recurrence
// sum_{j=0..m} C(m+1,j) B_j = 0, independent of the digit-system pipeline.
std::vector<BigRational> classical_bernoulli(int M) {
  std::vector<BigRational> b(static_cast<std::size_t>(M) + 1);
  b[0] = 1;
  for (int m = 1; m <= M; ++m) {
    const std::vector<BigInt> row = binomial_row(m + 1);
    BigRational sum = 0;
    for (int j = 0; j < m; ++j) {
      sum += BigRational(row[static_cast<std::size_t>(j)]) *
             b[static_cast<std::size_t>(j)];
    }
    b[static_cast<std::size_t>(m)] = -sum / BigRational(m + 1);
  }
  return b;
}

// --------------------------------------------------------------------------
// Acceptance criteria
// --------------------------------------------------------------------------

CheckResult c01_zeta_special_values() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = full10();
  const double pi = std::numbers::pi;
  const EvalResult z2 = eval_auto(ds, {2.0, 0.0}, 1e-12);
  sc.require_close(z2.value.real(), pi * pi / 6.0, 1e-10, "value at s=2");
  const EvalResult z0 = eval_auto(ds, {0.0, 0.0}, 1e-12);
  sc.require_close(z0.value.real(), -0.5, 1e-10, "value at s=0");
  const RationalSeq mu = mu_rational(ds, 2);
  const BigRational zeta_m1 = -mu[2] / BigRational(2);
  const double want_m1 = zeta_m1.get_d();
  const EvalResult zm1 = eval_auto(ds, {-1.0, 0.0}, 1e-12);
  sc.require_close(zm1.value.real(), want_m1, 1e-9, "value at s=-1");
  return finish("zeta-special-values", sc, t0, 1.0);
}

CheckResult c02_kempner_oracle() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = no9();
  const EvalResult k = kempner(ds, 1e-13);
  const std::vector<Cplx> blocks = baillie_blocks(ds, {1.0, 0.0}, 120, 450);
  Cplx partial = 0.0;
  for (const Cplx& b : blocks) partial += b;
  // The block ratio settles at N/b geometrically fast; close the tail with it.
  const Cplx rho = blocks[119] / blocks[118];
  const Cplx oracle = partial + blocks[119] * rho / (1.0 - rho);
  const double rel = std::abs(k.value - oracle) / std::abs(oracle);
  sc.require(rel <= 5e-10, "engines differ by rel " + std::to_string(rel));
  sc.require_close(k.value.real(), 22.920676619, 1e-9, "leading digits");
  return finish("kempner-block-recursion-oracle", sc, t0, 5.0);
}

CheckResult c03_cross_engine_grid() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem systems[2] = {no9(), even3()};
  for (const DigitSystem& ds : systems) {
    for (double base : {-2.5, -1.5, -0.5, 0.2, 0.7, 1.5, 2.5}) {
      for (double t : {0.0, 1.0, -1.0, 3.0, -3.0}) {
        const Cplx s{base + 0.013, t};
        const EvalResult g = eval_geo(ds, s, 1e-10);
        const EvalResult f = eval_feq(ds, s, 1e-10);
        const double diff = std::abs(g.value - f.value);
        const double allowed = 10.0 * (g.tail_estimate + f.tail_estimate);
        std::ostringstream os;
        os << "b=" << ds.base() << " s=" << s.real() << "+" << s.imag()
           << "i: diff " << diff << " > " << allowed;
        sc.require(diff <= allowed, os.str());
      }
    }
  }
  return finish("cross-engine-grid", sc, t0, 30.0);
}

CheckResult c04_bernoulli_egf_inverse() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem systems[5] = {full2(), no9(), pos10(), even3(), one10()};
  for (const DigitSystem& ds : systems) {
    const TaylorCoeffs bt = B_taylor(ds, 25);
    const RationalSeq mu = mu_rational(ds, 25);
    for (int m = 0; m <= 25; ++m) {
      sc.require(
          bt.coeffs[static_cast<std::size_t>(m)] == mu[static_cast<std::size_t>(m)],
          "b=" + std::to_string(ds.base()) + " N=" + std::to_string(ds.n_total()) +
              " order " + std::to_string(m));
    }
  }
  return finish("bernoulli-egf-inverse-exact", sc, t0, 5.0);
}

CheckResult c05_bernoulli_cross_base() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const std::vector<BigRational> oracle = classical_bernoulli(30);
  for (int b : {2, 3, 10}) {
    const DigitSystem ds(b, range_digits(0, b - 1));
    const RationalSeq mu = mu_rational(ds, 30);
    for (int m = 0; m <= 30; ++m) {
      sc.require(mu[static_cast<std::size_t>(m)] == oracle[static_cast<std::size_t>(m)],
                 "base " + std::to_string(b) + " order " + std::to_string(m));
    }
  }
  return finish("bernoulli-classical-cross-base", sc, t0);
}

CheckResult c06_residue_routes() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = no9();
  const Cplx entire0 = residue_entire(ds, {0, 0});
  const ResidueLimitResult lim = residue_limit(ds, 0, 9, std::uint64_t{500'000'000});
  sc.require(std::abs(entire0 - lim.value) <= 1e-4,
             "limit route differs by " + std::to_string(std::abs(entire0 - lim.value)));
  const ResidueRow row = lambda_row(ds, 0, 4, entire0);
  for (int m = 1; m <= 4; ++m) {
    const Cplx e = residue_entire(ds, {m, 0});
    sc.require(std::abs(e - row.values[static_cast<std::size_t>(m)]) <= 1e-7,
               "row m=" + std::to_string(m));
  }
  for (int b : {2, 10}) {
    const DigitSystem single(b, {b - 1});
    const double log_b = std::log(static_cast<double>(b));
    for (int m = 0; m <= 4; ++m) {
      const Cplx e = residue_entire(single, {m, 0});
      const double want = (m % 2 == 0 ? 1.0 : -1.0) / log_b;
      sc.require(std::abs(e - want) <= 1e-9,
                 "single-digit base " + std::to_string(b) + " m=" + std::to_string(m));
    }
  }
  return finish("residue-route-consistency", sc, t0);
}

CheckResult c07_log_two_series() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = full10();
  const double log2 = std::log(2.0);
  double odd = 2.0 / 3.0;
  for (int p = 1; p <= 20; ++p) {
    const EvalResult z = eval_direct(ds, {static_cast<double>(2 * p + 1), 0.0}, 1e-13);
    odd += 0.5 * (z.value.real() - 1.0) / std::pow(4.0, p);
  }
  sc.require_close(odd, log2, 1e-12, "odd-zeta form");
  double alternating = 5.0 / 6.0;
  double plain = 0.5;
  for (int m = 1; m <= 40; ++m) {
    const double z =
        (m == 1) ? eval_geo(ds, {2.0, 0.0}, 1e-13).value.real()
                 : eval_direct(ds, {static_cast<double>(m + 1), 0.0}, 1e-13).value.real();
    const double zm1 = z - 1.0;
    alternating -= (m % 2 == 1 ? 1.0 : -1.0) * zm1 / std::pow(2.0, m + 1);
    plain += zm1 / std::pow(2.0, m + 1);
  }
  sc.require_close(alternating, log2, 1e-10, "alternating parent form");
  sc.require_close(plain, log2, 1e-10, "plain parent form");
  return finish("log-two-zeta-series", sc, t0);
}

CheckResult c08_negative_values() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem with_zero[3] = {no9(), even3(), DigitSystem(4, {0, 1, 2})};
  for (const DigitSystem& ds : with_zero) {
    const RationalSeq k = neg_values(ds, 10);
    sc.require(k[0] == BigRational(-1),
               "K(0) = -1 with 0 admissible, b=" + std::to_string(ds.base()));
    for (int m = 1; m <= 10; ++m) {
      sc.require(k[static_cast<std::size_t>(m)] == 0,
                 "K(-" + std::to_string(m) + ") = 0, b=" + std::to_string(ds.base()));
    }
  }
  const DigitSystem ds = pos10();
  const RationalSeq k = neg_values(ds, 6);
  sc.require(k[0] == BigRational(-9, 8), "K(0) = -9/8");
  for (int m = 1; m <= 6; ++m) {
    const EvalResult f = eval_feq(ds, {-static_cast<double>(m), 0.0}, 1e-12);
    sc.require_close(f.value.real(), k[static_cast<std::size_t>(m)].get_d(), 1e-9,
                     "K(-" + std::to_string(m) + ") vs functional equation");
  }
  return finish("negative-values-exact", sc, t0);
}

CheckResult c09_vertical_line_residues() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = full10();
  for (long k : {1L, -1L, 2L, -2L}) {
    const Cplx r = residue_entire(ds, {0, k});
    sc.require(std::abs(r) < 1e-8, "k=" + std::to_string(k) + ": |residue| = " +
                                       std::to_string(std::abs(r)));
  }
  return finish("zeta-vertical-line-residues", sc, t0);
}

CheckResult c10_cantor_monte_carlo(std::uint64_t seed) {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = no9();
  const TaylorCoeffs et = E_taylor(ds, 2);
  const double m1 = et.coeffs[1].get_d();
  const double m2 = et.coeffs[2].get_d();
  const double e1 = mgf_E(ds, {1.0, 0.0}, 1e-14).real();
  const double e2 = mgf_E(ds, {2.0, 0.0}, 1e-14).real();
  const int n = 1'000'000;
  double mean = 0.0;
  double exp_mean = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = cantor_sample(ds, 40, seed + static_cast<std::uint64_t>(i));
    mean += x;
    exp_mean += std::exp(x);
  }
  mean /= n;
  exp_mean /= n;
  const double sd_mean = std::sqrt((m2 - m1 * m1) / n);
  const double sd_exp = std::sqrt((e2 - e1 * e1) / n);
  sc.require_close(mean, m1, 4.0 * sd_mean, "sample mean vs first moment");
  sc.require_close(exp_mean, e1, 4.0 * sd_exp, "exp average vs mgf");
  return finish("cantor-monte-carlo", sc, t0, 10.0);
}

// --------------------------------------------------------------------------
// Invariant checks
// --------------------------------------------------------------------------

CheckResult iv_counting_and_blocks() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = no9();
  for (int l = 1; l <= 5; ++l) {
    const auto list = enumerate_admissible(ds, l);
    sc.require(list.size() == admissible_count(ds, l), "count at l=" + std::to_string(l));
    sc.require(std::is_sorted(list.begin(), list.end()),
               "ascending at l=" + std::to_string(l));
  }
  // N1 N^{l-1} b^{-l sigma} < K_l(sigma) <= N1 N^{l-1} b^{-(l-1) sigma}
  for (double sigma : {0.7, 1.5, 2.5}) {
    for (int l = 1; l <= 6; ++l) {
      const double kl = block_sum(ds, l, {sigma, 0.0}).real();
      const double count = static_cast<double>(admissible_count(ds, l));
      const double lo = count * std::pow(10.0, -l * sigma);
      const double hi = count * std::pow(10.0, -(l - 1) * sigma);
      sc.require(lo < kl && kl <= hi * (1.0 + 1e-12),
                 "sandwich l=" + std::to_string(l) + " sigma=" + std::to_string(sigma));
    }
  }
  const DigitSystem rep(10, {1});
  const auto repunits = enumerate_admissible(rep, 3);
  sc.require(repunits.size() == 1 && repunits[0] == 111, "repunit enumeration");
  sc.require(enumerate_admissible(DigitSystem(2, {0, 1}), 2) ==
                 std::vector<std::uint64_t>({2, 3}),
             "binary length-2");
  sc.require(enumerate_admissible(DigitSystem(10, {1, 2}), 2) ==
                 std::vector<std::uint64_t>({11, 12, 21, 22}),
             "product enumeration");
  sc.require_close(block_sum(rep, 2, {1.0, 0.0}).real(), 1.0 / 11.0, 1e-15, "K_2(1) repunit");
  sc.require_close(block_sum(DigitSystem(2, {1}), 3, {2.0, 0.0}).real(), 1.0 / 49.0,
                   1e-15, "K_3(2) base 2");
  return finish("counting-and-block-sums", sc, t0);
}

CheckResult iv_power_sums() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem f10 = full10();
  const auto g = f10.power_sums(5);
  sc.require(g[0] == 10, "gamma_0 = N");
  sc.require(g[1] == 45, "gamma_1 = 45");
  sc.require(f10.power_sums_prime(5)[1] == 45, "reflection-symmetric full set");
  const DigitSystem s9(10, {9});
  const auto s9p = s9.power_sums_prime(4);
  sc.require(s9p[0] == 1, "0^0 convention");
  for (int j = 1; j <= 4; ++j) {
    sc.require(s9p[static_cast<std::size_t>(j)] == 0, "(b-1-9)^j vanishes");
  }
  sc.require(DigitSystem(2, {1}).power_sums(5)[5] == 1, "singleton power");
  // gamma and gamma' swap under the digit reflection a -> b-1-a.
  const DigitSystem ds(10, {1, 3, 4, 8});
  std::vector<int> reflected;
  for (int a : ds.digits()) reflected.push_back(9 - a);
  const DigitSystem refl(10, reflected);
  const auto a1 = ds.power_sums(8);
  const auto a2 = refl.power_sums_prime(8);
  for (int j = 0; j <= 8; ++j) {
    sc.require(a1[static_cast<std::size_t>(j)] == a2[static_cast<std::size_t>(j)],
               "reflection j=" + std::to_string(j));
  }
  // For j >= 1 the zero digit contributes nothing.
  const auto w0 = no9().power_sums(6);
  const auto wo0 = DigitSystem(10, range_digits(1, 8)).power_sums(6);
  for (int j = 1; j <= 6; ++j) {
    sc.require(w0[static_cast<std::size_t>(j)] == wo0[static_cast<std::size_t>(j)],
               "nonzero restriction j=" + std::to_string(j));
  }
  return finish("digit-power-sums", sc, t0);
}

CheckResult iv_pochhammer_alpha(std::uint64_t seed) {
  const auto t0 = Clock::now();
  Scorecard sc;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-4.0, 4.0);
  for (int i = 0; i < 20; ++i) {
    const Cplx s{unif(rng), unif(rng)};
    const int m = static_cast<int>(rng() % 12);
    const Cplx lhs = pochhammer(s, m + 1);
    const Cplx rhs = pochhammer(s, m) * (s + static_cast<double>(m));
    sc.require(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)), "pochhammer step");
  }
  sc.require(pochhammer({3.7, 1.0}, 0) == Cplx{1.0, 0.0}, "empty product");
  sc.require_close(pochhammer({1.0, 0.0}, 5).real(), 120.0, 1e-12, "(1)_5 = 5!");
  sc.require(std::abs(pochhammer({-2.0, 0.0}, 4)) == 0.0, "(-2)_4 = 0");

  const DigitSystem ds = no9();
  for (int i = 0; i < 10; ++i) {
    const Cplx s{unif(rng), unif(rng)};
    const Cplx lhs = alpha(ds, s + 1.0) * (1.0 - 9.0 * std::exp(-s * std::log(10.0)));
    const Cplx rhs = alpha(ds, s);
    sc.require(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)), "alpha index shift");
  }
  sc.require(std::abs(alpha(ds, {50.0, 0.0}) - 1.0) < 1e-10, "alpha at Re s = 50");
  // The vanishing factor at n = m is ~1e-16 in doubles; the other factors
  // (product = alpha'/log b) amplify it, so the zero test is relative.
  const double log10d = std::log(10.0);
  for (int m = 0; m <= 5; ++m) {
    const double amp =
        std::max(1.0, std::abs(alpha_prime_at(ds, {m, 0})) / log10d);
    sc.require(std::abs(alpha(ds, lattice_location(ds, {m, 0}))) < 1e-12 * amp,
               "alpha zero at m=" + std::to_string(m));
    sc.require(std::abs(alpha(ds, lattice_location(ds, {m, 1}))) < 1e-12 * amp,
               "alpha zero at m=" + std::to_string(m) + ", k=1");
  }
  sc.require(std::abs(alpha(full10(), {0.0, 0.0})) <
                 1e-12 * std::abs(alpha_prime_at(full10(), {1, 0})),
             "alpha(0) full set");
  sc.require(std::abs(alpha(ds, lattice_location(ds, {1, 0}))) < 1e-12,
             "alpha zero absolute at m=1");
  for (int m = 0; m <= 4; ++m) {
    for (long k : {0L, 2L}) {
      const Cplx p = lattice_location(ds, {m, k});
      const Cplx want = alpha_prime_at(ds, {m, k});
      const double h = 1e-5;
      const Cplx fd = (alpha(ds, p + h) - alpha(ds, p - h)) / (2.0 * h);
      sc.require(std::abs(fd - want) <= 1e-6 * std::abs(want),
                 "alpha' finite differences m=" + std::to_string(m));
    }
  }
  for (int m = 0; m <= 10; ++m) {
    for (long k = -3; k <= 3; ++k) {
      sc.require(std::abs(alpha_prime_at(ds, {m, k})) > 0.0, "alpha' nonzero");
    }
  }
  const DigitSystem b2(2, {1});
  double prod = 1.0;
  for (int n = 1; n <= 60; ++n) prod *= 1.0 - std::pow(2.0, -n);
  sc.require_close(alpha_prime_at(b2, {0, 0}).real(), std::log(2.0) * prod, 1e-12,
                   "alpha'(0) base 2 product");
  return finish("pochhammer-and-alpha", sc, t0);
}

CheckResult iv_u_coeffs() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = no9();
  sc.require_close(u_coeffs(ds, {2.0, 0.0}, 0).values[0].real(), 100.0 / 91.0, 1e-14,
                   "u_0 at s=2");
  const Cplx s{2.0, 0.0};
  const CoeffSequence u = u_coeffs(ds, s, 8);
  for (int m = 0; m <= 8; ++m) {
    const TailedValue direct = u_direct(ds, s, m, 7);
    sc.require(std::abs(u.values[static_cast<std::size_t>(m)] - direct.value) <=
                   direct.tail_bound * 1.5 + 1e-14,
               "u_" + std::to_string(m) + " vs word sum");
  }
  // m = 0 truncations are geometric partial sums.
  for (int L : {0, 3, 6}) {
    const TailedValue d0 = u_direct(ds, s, 0, L);
    double partial = 0.0;
    for (int l = 0; l <= L; ++l) partial += std::pow(9.0 / 100.0, l);
    sc.require_close(d0.value.real(), partial, 1e-13,
                     "geometric partial L=" + std::to_string(L));
  }
  sc.require(std::abs(u_direct(ds, {3.0, 0.5}, 4, 0).value) == 0.0, "0^m at L=0");
  // Singleton systems reduce to the closed Lambert-type coefficients scaled
  // by lambda^m.
  const Cplx z{1.3, 0.4};
  for (int digit : {9, 3}) {
    const DigitSystem single(10, {digit});
    const CoeffSequence us = u_coeffs(single, z, 6);
    const double lam = single.lambda();
    for (int m = 0; m <= 6; ++m) {
      const Cplx want = std::pow(lam, m) * w_closed(10, z, m);
      sc.require(std::abs(us.values[static_cast<std::size_t>(m)] - want) <=
                     1e-12 * (1.0 + std::abs(want)),
                 "digit " + std::to_string(digit) + " m=" + std::to_string(m));
    }
  }
  // (b^{s+m} - 1) w_m = sum_j C(m,j) (b-1)^j w_{m-j}
  for (int m = 1; m <= 8; ++m) {
    const Cplx lhs =
        (std::exp((z + static_cast<double>(m)) * std::log(10.0)) - 1.0) * w_closed(10, z, m);
    Cplx rhs = 0.0;
    const std::vector<BigInt> row = binomial_row(m);
    double p9 = 1.0;
    for (int j = 1; j <= m; ++j) {
      p9 *= 9.0;
      rhs += row[static_cast<std::size_t>(j)].get_d() * p9 * w_closed(10, z, m - j);
    }
    sc.require(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)),
               "w recurrence m=" + std::to_string(m));
  }
  // Far right only the length-0 word survives: w_m -> 0^m.
  sc.require(std::abs(w_closed(10, {40.0, 0.0}, 0) - 1.0) < 1e-12, "w_0 -> 1 far right");
  for (int m = 1; m <= 5; ++m) {
    sc.require(std::abs(w_closed(10, {40.0, 0.0}, m)) < 1e-9,
               "w_" + std::to_string(m) + " -> 0 far right");
  }
  return finish("u-coefficients", sc, t0);
}

CheckResult iv_v_coeffs() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = no9();
  for (const Cplx s : {Cplx{2.0, 1.0}, Cplx{-1.3, 0.7}, Cplx{0.4, -2.0}}) {
    const CoeffSequence v = v_coeffs(ds, s, 60);
    const CoeffSequence u = u_coeffs(ds, s, 60);
    const Cplx a = alpha(ds, s);
    sc.require(!v.regularized_index.has_value(), "off-lattice has no regularization");
    for (int m = 0; m <= 60; ++m) {
      const Cplx want = a * u.values[static_cast<std::size_t>(m)];
      sc.require(std::abs(v.values[static_cast<std::size_t>(m)] - want) <=
                     1e-12 * std::abs(want) + 1e-280,
                 "v = alpha u at m=" + std::to_string(m));
    }
  }
  // At s0 exactly: index 0 regularizes and the seed is the shifted product.
  const CoeffSequence v0 = v_coeffs(ds, {ds.s0(), 0.0}, 5);
  sc.require(v0.regularized_index.has_value() && *v0.regularized_index == 0,
             "regularized index at s0");
  Cplx prod = 1.0;
  for (int n = 1; n <= 40; ++n) prod *= 1.0 - 9.0 * std::pow(10.0, -ds.s0() - n);
  sc.require(std::abs(v0.values[0] - prod) <= 1e-13 * std::abs(prod), "seed product at s0");
  // Geometric decay of the product (s)_m/m! v_m: the running maximum of
  // |.| m / lambda^m stabilizes.
  const Cplx s{-2.5, 0.0};
  const CoeffSequence v = v_coeffs(ds, s, 200);
  Cplx p = 1.0;
  double early = 0.0, late = 0.0;
  for (int m = 0; m <= 200; ++m) {
    const double q =
        std::abs(p * v.values[static_cast<std::size_t>(m)]) * m / std::pow(ds.lambda(), m);
    if (m >= 20 && m <= 120) early = std::max(early, q);
    if (m > 120) late = std::max(late, q);
    p *= (s + static_cast<double>(m)) / static_cast<double>(m + 1);
  }
  sc.require(late <= early * 1.05, "running max stabilizes");
  return finish("v-coefficients", sc, t0);
}

CheckResult iv_engine_agreement() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem systems[2] = {no9(), even3()};
  for (const DigitSystem& ds : systems) {
    for (double off : {0.2, 0.65, 1.1, 1.55, 2.0}) {
      for (double t : {0.0, 2.5, -5.0}) {
        const Cplx s{ds.s0() + off, t};
        // Direct tolerance feasible under a 2e6-integer budget.
        const double r =
            ds.n_total() * std::pow(static_cast<double>(ds.base()), -s.real());
        const double l_max = std::floor(
            std::log(2e6 * (ds.n_total() - 1.0) /
                     (ds.n_nonzero() * static_cast<double>(ds.n_total()))) /
                std::log(static_cast<double>(ds.n_total())) +
            1.0);
        const double feasible = ds.n_nonzero() * std::pow(r, l_max) / (1.0 - r);
        const double tol_direct = std::max(1e-11, 2.0 * feasible);
        const EvalResult d = eval_direct(ds, s, tol_direct);
        const EvalResult g = eval_geo(ds, s, 1e-12);
        const EvalResult f = eval_feq(ds, s, 1e-12);
        std::ostringstream os;
        os << "b=" << ds.base() << " s=" << s.real() << "+" << s.imag() << "i";
        sc.require(std::abs(d.value - g.value) <= d.tail_estimate + g.tail_estimate,
                   "direct/geo " + os.str());
        sc.require(std::abs(g.value - f.value) <= g.tail_estimate + f.tail_estimate,
                   "geo/feq " + os.str());
        sc.require(std::abs(d.value - f.value) <= d.tail_estimate + f.tail_estimate,
                   "direct/feq " + os.str());
      }
    }
  }
  return finish("three-way-engine-agreement", sc, t0);
}

CheckResult iv_feq_residual(std::uint64_t seed) {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = no9();
  std::mt19937_64 rng(seed ^ 0xfeb1);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(-4.0, 4.0);
  const std::vector<double> scaled = ds.scaled_power_sums(500);
  int tested = 0;
  while (tested < 10) {
    const Cplx s{re(rng), im(rng)};
    if (nearest_lattice(ds, s).distance < 0.05) continue;
    ++tested;
    const Cplx bz = std::exp(-s * std::log(10.0));
    const Cplx lhs = (1.0 - 9.0 * bz) * eval_geo(ds, s, 1e-12).value;
    Cplx rhs = 0.0;
    for (int a : ds.nonzero_digits()) {
      rhs += std::exp(-s * std::log(static_cast<double>(a)));
    }
    Cplx p = 1.0;
    for (int m = 1; m <= 500; ++m) {
      p *= (s + static_cast<double>(m - 1)) / static_cast<double>(m);
      const double sgn = (m % 2 == 1) ? -1.0 : 1.0;
      const Cplx term = sgn * p * scaled[static_cast<std::size_t>(m)] * bz *
                        eval_geo(ds, s + static_cast<double>(m), 1e-13).value;
      rhs += term;
      if (std::abs(term) <= 1e-15 * std::abs(rhs) && m > 8) break;
    }
    sc.require(std::abs(lhs - rhs) <= 1e-8 * (std::abs(lhs) + 1e-6),
               "residual at s=" + std::to_string(s.real()) + "+" +
                   std::to_string(s.imag()) + "i");
  }
  return finish("functional-equation-residual", sc, t0);
}

CheckResult iv_engine_term_decay() {
  const auto t0 = Clock::now();
  Scorecard sc;
  for (const DigitSystem& ds : {no9(), full2()}) {
    const Cplx s{-1.7, 2.3};
    const CoeffSequence v = v_coeffs(ds, s, 120);
    std::vector<Cplx> pow2;
    std::vector<double> inv2;
    const double b = ds.base();
    for (int a1 : ds.nonzero_digits()) {
      for (int a2 : ds.digits()) {
        const double n2 = a1 * b + a2;
        inv2.push_back(1.0 / n2);
        pow2.push_back(std::exp(-s * std::log(n2)));
      }
    }
    Cplx c = 1.0;
    double prev = -1.0;
    double worst = 0.0;
    for (int m = 0; m <= 120; ++m) {
      Cplx sum = 0.0;
      for (const Cplx& x : pow2) sum += x;
      const double cur = std::abs(c * v.values[static_cast<std::size_t>(m)] * sum);
      if (m >= 60 && prev > 0.0 && cur > 0.0) worst = std::max(worst, cur / prev);
      prev = cur;
      c *= -(s + static_cast<double>(m)) / static_cast<double>(m + 1);
      for (std::size_t i = 0; i < pow2.size(); ++i) pow2[i] *= inv2[i];
    }
    sc.require(worst <= ds.lambda() / ds.base() * 1.05,
               "late term ratio " + std::to_string(worst) + " for b=" +
                   std::to_string(ds.base()));
  }
  return finish("geo-term-decay-rate", sc, t0);
}

CheckResult iv_h_variant() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem nine(10, {9});
  for (const Cplx s : {Cplx{0.7, 0.3}, Cplx{-1.4, 1.1}, Cplx{2.2, 0.0}}) {
    const Cplx want = 1.0 / (std::exp(s * std::log(10.0)) - 1.0);
    const EvalResult h = eval_H(nine, s, 1e-12);
    sc.require(std::abs(h.value - want) <= 1e-10 * (1.0 + std::abs(want)),
               "single-digit closed form");
  }
  // Series term positivity for real s in (0, s0) and (s0, 3).
  const DigitSystem ds = no9();
  const std::vector<double> gp = ds.scaled_power_sums_prime(30);
  for (double s0 : {0.1, 0.5, 0.9, 1.2, 2.0, 2.9}) {
    const Cplx s{s0, 0.0};
    Cplx seed = 0.0;
    for (int a : ds.nonzero_digits()) seed += std::pow(static_cast<double>(a + 1), -s0);
    sc.require(seed.real() > 0.0, "positive seeds");
    Cplx p = 1.0;
    const double bz = std::pow(10.0, -s0);
    bool all_positive = true;
    for (int m = 1; m <= 30; ++m) {
      p *= (s + static_cast<double>(m - 1)) / static_cast<double>(m);
      const double h = eval_H(ds, s + static_cast<double>(m), 1e-10).value.real();
      const double term = p.real() * gp[static_cast<std::size_t>(m)] * bz * h;
      if (term <= 0.0) all_positive = false;
    }
    sc.require(all_positive, "positive terms at s=" + std::to_string(s0));
  }
  // Direct cross-check of the shifted series in the half-plane.
  const Cplx s{2.5, 1.0};
  const EvalResult h = eval_H(ds, s, 1e-11);
  Cplx direct = 0.0;
  for (int l = 1; l <= 8; ++l) direct += detail::block_sum_shifted(ds, l, s, 1);
  const double r9 = 9.0 * std::pow(10.0, -2.5);
  const double tail = ds.n_nonzero() * std::pow(r9, 8) / (1.0 - r9);
  sc.require(std::abs(h.value - direct) <= h.tail_estimate + tail, "H vs direct blocks");
  // K and H share the pole at s0: their difference stays bounded on a small
  // circle on which both engines blow up.
  double max_k = 0.0, max_diff = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double th = 2.0 * std::numbers::pi * i / 8 + 0.1;
    const Cplx z = Cplx{ds.s0(), 0.0} + 0.003 * Cplx{std::cos(th), std::sin(th)};
    const Cplx k = eval_geo(ds, z, 1e-12).value;
    const Cplx hh = eval_H(ds, z, 1e-12).value;
    max_k = std::max(max_k, std::abs(k));
    max_diff = std::max(max_diff, std::abs(k - hh));
  }
  sc.require(max_k > 50.0, "pole visible on the circle");
  sc.require(max_diff < 5.0, "difference analytic across the pole");
  return finish("h-variant-series", sc, t0);
}

CheckResult iv_residue_rows() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = no9();
  const ResidueRow zero = lambda_row(ds, 1, 6, {0.0, 0.0});
  for (const Cplx& v : zero.values) sc.require(std::abs(v) == 0.0, "zero seed row");
  // Row proportionality mu_{m,k} mu_{0,0} = mu_{0,k} mu_{m,0}.
  const ResidueRow r0 = lambda_row(ds, 0, 6, residue_entire(ds, {0, 0}));
  const ResidueRow r1 = lambda_row(ds, 1, 6, residue_entire(ds, {0, 1}));
  for (int m = 1; m <= 6; ++m) {
    const Cplx lhs = r1.mu_values[static_cast<std::size_t>(m)] * r0.mu_values[0];
    const Cplx rhs = r1.mu_values[0] * r0.mu_values[static_cast<std::size_t>(m)];
    sc.require(std::abs(lhs - rhs) <= 1e-6 * (1.0 + std::abs(rhs)),
               "proportionality m=" + std::to_string(m));
  }
  // Positive residue at s0, negligible imaginary part.
  const Cplx lam0 = residue_entire(ds, {0, 0});
  sc.require(lam0.real() > 0.0 && std::abs(lam0.imag()) < 1e-12, "positive residue at s0");
  // The normalized row reproduces the exact rational sequence.
  const RationalSeq mu = mu_rational(ds, 6);
  for (int m = 1; m <= 6; ++m) {
    const Cplx got = r0.mu_values[static_cast<std::size_t>(m)] / r0.mu_values[0];
    sc.require(std::abs(got.real() - mu[static_cast<std::size_t>(m)].get_d()) <= 1e-7 &&
                   std::abs(got.imag()) <= 1e-7,
               "normalized row vs exact m=" + std::to_string(m));
  }
  sc.require(lambda_row(DigitSystem(10, {9}), 0, 3, {1.0, 0.0}).mu_values.empty(),
             "no mu for N=1");
  sc.require(lambda_row(full10(), 0, 3, {1.0, 0.0}).mu_values.empty(), "no mu for N=b");
  // Exactness: a longer run reproduces the prefix bit-identically.
  const RationalSeq mu_long = mu_rational(ds, 12);
  for (int m = 0; m <= 6; ++m) {
    sc.require(mu_long[static_cast<std::size_t>(m)] == mu[static_cast<std::size_t>(m)],
               "prefix stability m=" + std::to_string(m));
  }
  // Alternative recurrence form, exact over the rationals:
  // mu_m = (b^m/N) sum_{j=0..m} C(m,j) gamma_j b^{-j} mu_{m-j}.
  const std::vector<BigInt> gamma = ds.power_sums(12);
  for (int m = 1; m <= 12; ++m) {
    const std::vector<BigInt> row = binomial_row(m);
    BigRational sum = 0;
    BigInt bj = 1;
    for (int j = 0; j <= m; ++j) {
      sum += frac(row[static_cast<std::size_t>(j)] * gamma[static_cast<std::size_t>(j)], bj) *
             mu_long[static_cast<std::size_t>(m - j)];
      bj *= 10;
    }
    const BigRational rhs = frac(int_pow(10, static_cast<unsigned long>(m)), BigInt(9)) * sum;
    sc.require(mu_long[static_cast<std::size_t>(m)] == rhs,
               "alternative form m=" + std::to_string(m));
  }
  // Limit formula: exact 1/log b for singleton systems at every length, and
  // the full-set value 1.
  const ResidueLimitResult single = residue_limit(DigitSystem(10, {7}), 0, 6);
  for (const Cplx& v : single.trace) {
    sc.require_close(v.real(), 1.0 / std::log(10.0), 1e-14, "singleton trace");
  }
  sc.require(std::abs(residue_limit(full10(), 0, 7).value - 1.0) <= 1e-6,
             "Riemann-sum residue 1");
  sc.require(std::abs(residue_entire(full10(), {0, 0}) - 1.0) <= 1e-9,
             "entire-route residue 1");
  return finish("residue-rows-and-limits", sc, t0);
}

CheckResult iv_genfunc_pointwise(std::uint64_t seed) {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem f10 = full10();
  for (const Cplx t : {Cplx{1.0, 0.0}, Cplx{1.0, -2.0}, Cplx{-3.0, 0.5}}) {
    const Cplx want = (std::exp(t) - 1.0) / t;
    sc.require(std::abs(mgf_E(f10, t, 1e-14) - want) <= 1e-12 * (1.0 + std::abs(want)),
               "uniform-measure mgf");
    const Cplx want_b = t / (std::exp(t) - 1.0);
    sc.require(std::abs(bgf_B(f10, t, 1e-14) - want_b) <= 1e-12 * (1.0 + std::abs(want_b)),
               "uniform-measure reciprocal");
  }
  const DigitSystem one(10, {3});
  for (const Cplx t : {Cplx{2.0, 1.0}, Cplx{-4.0, 0.0}}) {
    const Cplx want = std::exp(t / 3.0);
    sc.require(std::abs(mgf_E(one, t, 1e-14) - want) <= 1e-12 * (1.0 + std::abs(want)),
               "point-mass mgf");
  }
  const DigitSystem ds = no9();
  sc.require(mgf_E(ds, {0.0, 0.0}, 1e-14) == Cplx{1.0, 0.0}, "E(0) = 1");
  std::mt19937_64 rng(seed ^ 0x9f);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  for (int i = 0; i < 10; ++i) {
    const Cplx t{unif(rng), unif(rng)};
    sc.require(std::abs(mgf_E(ds, t, 1e-14) * bgf_B(ds, t, 1e-14) - 1.0) <= 1e-12,
               "B E = 1");
  }
  for (double re = -5.0; re <= -0.1; re += 0.7) {
    for (double im = -4.0; im <= 4.0; im += 1.6) {
      sc.require(std::abs(bgf_B(ds, {re, im}, 1e-14)) > 1.0, "|B| > 1 left half-plane");
    }
    const double e = mgf_E(ds, {re, 0.0}, 1e-14).real();
    sc.require(e > 0.0 && e < 1.0, "E in (0,1) on the negative axis");
  }
  return finish("mgf-pointwise", sc, t0);
}

CheckResult iv_genfunc_taylor() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const TaylorCoeffs uni = E_taylor(full10(), 12);
  for (int m = 0; m <= 12; ++m) {
    sc.require(uni.coeffs[static_cast<std::size_t>(m)] == BigRational(1, m + 1),
               "uniform moment m=" + std::to_string(m));
  }
  const TaylorCoeffs point = E_taylor(DigitSystem(10, {3}), 8);
  BigRational pw = 1;
  const BigRational lam(1, 3);
  for (int m = 0; m <= 8; ++m) {
    sc.require(point.coeffs[static_cast<std::size_t>(m)] == pw,
               "point mass m=" + std::to_string(m));
    pw *= lam;
  }
  sc.require(E_taylor(no9(), 1).coeffs[1] == BigRational(4, 9), "first moment 4/9");
  const DigitSystem ds = no9();
  const TaylorCoeffs e = E_taylor(ds, 30);
  const TaylorCoeffs b = B_taylor(ds, 30);
  for (int m = 0; m <= 30; ++m) {
    const std::vector<BigInt> row = binomial_row(m);
    BigRational conv = 0;
    for (int j = 0; j <= m; ++j) {
      conv += BigRational(row[static_cast<std::size_t>(j)]) *
              e.coeffs[static_cast<std::size_t>(j)] *
              b.coeffs[static_cast<std::size_t>(m - j)];
    }
    sc.require(conv == (m == 0 ? BigRational(1) : BigRational(0)),
               "convolution m=" + std::to_string(m));
  }
  const TaylorCoeffs b1 = B_taylor(DigitSystem(10, {9}), 8);
  int sign = 1;
  for (int m = 0; m <= 8; ++m) {
    sc.require(b1.coeffs[static_cast<std::size_t>(m)] == BigRational(sign),
               "alternating m=" + std::to_string(m));
    sign = -sign;
  }
  return finish("egf-taylor-exact", sc, t0);
}

CheckResult iv_c_series(std::uint64_t seed) {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = pos10();
  sc.require_close(C_eval(ds, {0.0, 0.0}, 1e-13).real(), -9.0 / 8.0, 1e-12, "C(0)");
  std::mt19937_64 rng(seed ^ 0xc5);
  std::uniform_real_distribution<double> unif(-1.5, 1.5);
  for (int i = 0; i < 5; ++i) {
    const Cplx t{unif(rng), unif(rng)};
    Cplx a_at = 0.0;
    for (int a : ds.digits()) a_at += std::exp(static_cast<double>(a) * t / 10.0);
    const Cplx lhs = C_eval(ds, t / 10.0, 1e-13);
    const Cplx rhs = a_at * (1.0 + C_eval(ds, t, 1e-13));
    sc.require(std::abs(lhs - rhs) <= 1e-11 * (1.0 + std::abs(rhs)), "functional equation");
  }
  // Taylor data by discrete Fourier inversion on a radius-0.1 circle.
  const RationalSeq kv = neg_values(ds, 6);
  const int points = 49;
  const double r = 0.1;
  for (int m = 0; m <= 6; ++m) {
    Cplx acc = 0.0;
    for (int j = 0; j < points; ++j) {
      const double th = 2.0 * std::numbers::pi * j / points;
      const Cplx t = r * Cplx{std::cos(th), std::sin(th)};
      acc += C_eval(ds, t, 1e-13) * Cplx{std::cos(m * th), -std::sin(m * th)};
    }
    acc /= static_cast<double>(points);
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    sc.require_close((acc * fact / std::pow(r, m)).real(),
                     kv[static_cast<std::size_t>(m)].get_d(), 1e-4,
                     "Fourier coefficient m=" + std::to_string(m));
  }
  // Coefficient-level functional equation, exact over the rationals:
  // b^{-m} K(-m) = gamma_m b^{-m} + sum_j C(m,j) gamma_j b^{-j} K(-(m-j)).
  const RationalSeq kv10 = neg_values(ds, 10);
  const std::vector<BigInt> gamma = ds.power_sums(10);
  for (int m = 0; m <= 10; ++m) {
    const std::vector<BigInt> row = binomial_row(m);
    const BigInt bm = int_pow(10, static_cast<unsigned long>(m));
    BigRational rhs = frac(gamma[static_cast<std::size_t>(m)], bm);
    BigInt bj = 1;
    for (int j = 0; j <= m; ++j) {
      rhs += frac(row[static_cast<std::size_t>(j)] * gamma[static_cast<std::size_t>(j)], bj) *
             kv10[static_cast<std::size_t>(m - j)];
      bj *= 10;
    }
    sc.require(frac(BigInt(1), bm) * kv10[static_cast<std::size_t>(m)] == rhs,
               "coefficient identity m=" + std::to_string(m));
  }
  return finish("negative-value-generating-function", sc, t0);
}

CheckResult iv_cantor_sampler() {
  const auto t0 = Clock::now();
  Scorecard sc;
  const DigitSystem ds = no9();
  sc.require(cantor_sample(ds, 40, 7) == cantor_sample(ds, 40, 7), "deterministic");
  sc.require(cantor_sample(ds, 40, 7) != cantor_sample(ds, 40, 8), "seed-sensitive");
  const DigitSystem one(10, {3});
  const double lam = one.lambda();
  for (std::uint64_t seed : {1ULL, 99ULL}) {
    sc.require_close(cantor_sample(one, 12, seed), lam * (1.0 - std::pow(10.0, -12)),
                     1e-15, "degenerate distribution");
  }
  for (int i = 0; i < 200; ++i) {
    const double x = cantor_sample(ds, 30, 1000 + static_cast<std::uint64_t>(i));
    sc.require(x >= 0.0 && x <= 1.0, "in unit interval");
  }
  return finish("cantor-sampler", sc, t0);
}

CheckResult iv_rational_repr() {
  const auto t0 = Clock::now();
  Scorecard sc;
  sc.require(to_string(BigRational(-1, 2)) == "-1/2", "render -1/2");
  sc.require(to_string(BigRational(4)) == "4", "render integer");
  sc.require(rational_from_string("-7/21") == BigRational(-1, 3), "parse reduces");
  for (const char* s : {"0", "1", "-1/2", "1/6", "-3617/510", "8615841276005/14322"}) {
    sc.require(to_string(rational_from_string(s)) == s, std::string("round trip ") + s);
  }
  const std::vector<BigInt> row = binomial_row(20);
  sc.require(row[10] == 184756, "C(20,10)");
  BigInt sum = 0;
  for (const BigInt& x : row) sum += x;
  sc.require(sum == int_pow(2, 20), "row sums to 2^20");
  return finish("rational-representation", sc, t0);
}

}  // namespace

std::vector<Check> acceptance_checks(std::uint64_t seed) {
  return {
      {"zeta-special-values", true, c01_zeta_special_values},
      {"kempner-block-recursion-oracle", false, c02_kempner_oracle},
      {"cross-engine-grid", false, c03_cross_engine_grid},
      {"bernoulli-egf-inverse-exact", true, c04_bernoulli_egf_inverse},
      {"bernoulli-classical-cross-base", true, c05_bernoulli_cross_base},
      {"residue-route-consistency", false, c06_residue_routes},
      {"log-two-zeta-series", false, c07_log_two_series},
      {"negative-values-exact", true, c08_negative_values},
      {"zeta-vertical-line-residues", true, c09_vertical_line_residues},
      {"cantor-monte-carlo", false, [seed] { return c10_cantor_monte_carlo(seed); }},
  };
}

std::vector<Check> invariant_checks(std::uint64_t seed) {
  return {
      {"counting-and-block-sums", true, iv_counting_and_blocks},
      {"digit-power-sums", true, iv_power_sums},
      {"pochhammer-and-alpha", true, [seed] { return iv_pochhammer_alpha(seed); }},
      {"u-coefficients", true, iv_u_coeffs},
      {"v-coefficients", true, iv_v_coeffs},
      {"three-way-engine-agreement", true, iv_engine_agreement},
      {"functional-equation-residual", true, [seed] { return iv_feq_residual(seed); }},
      {"geo-term-decay-rate", true, iv_engine_term_decay},
      {"h-variant-series", true, iv_h_variant},
      {"residue-rows-and-limits", true, iv_residue_rows},
      {"mgf-pointwise", true, [seed] { return iv_genfunc_pointwise(seed); }},
      {"egf-taylor-exact", true, iv_genfunc_taylor},
      {"negative-value-generating-function", true, [seed] { return iv_c_series(seed); }},
      {"cantor-sampler", true, iv_cantor_sampler},
      {"rational-representation", true, iv_rational_repr},
  };
}

std::vector<Check> suite(bool full, std::uint64_t seed) {
  std::vector<Check> checks = invariant_checks(seed);
  for (Check& c : acceptance_checks(seed)) {
    if (full || c.quick) checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace dd::verify
