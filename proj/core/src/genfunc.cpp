#include "dd/genfunc.hpp"

#include <cmath>

#include "dd/errors.hpp"

namespace dd {

namespace {

// alpha_A(z) = sum_{a in A} e^{a z}
Cplx alpha_poly(const DigitSystem& ds, Cplx z) {
  Cplx s = 0.0;
  for (int a : ds.digits()) s += std::exp(static_cast<double>(a) * z);
  return s;
}

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

}  // namespace

Cplx mgf_E(const DigitSystem& ds, Cplx t, double tol) {
  const double b = ds.base();
  const double f = ds.f_max();
  const double tol_eff = std::max(tol, 1e-16);
  int j_max = 3;
  const double scale = std::abs(t) * f / tol_eff;
  if (scale > 1.0) {
    j_max = static_cast<int>(std::ceil(std::log(scale) / std::log(b))) + 2;
  }
  Cplx prod = 1.0;
  double b_pow = b;
  for (int j = 1; j <= j_max; ++j) {
    prod *= alpha_poly(ds, t / b_pow) / static_cast<double>(ds.n_total());
    b_pow *= b;
  }
  return prod;
}

Cplx bgf_B(const DigitSystem& ds, Cplx t, double tol) {
  const Cplx e = mgf_E(ds, t, tol);
  if (std::abs(e) <= 1e-12) {
    raise(Errc::NearZeroOfE, "|E(t)| = " + std::to_string(std::abs(e)));
  }
  return 1.0 / e;
}

TaylorCoeffs E_taylor(const DigitSystem& ds, int M) {
  if (M < 0) raise(Errc::PreconditionViolated, "M must be non-negative");
  const std::vector<BigInt> gamma = ds.power_sums(M);
  const BigInt b = ds.base();
  const BigInt n_tot = ds.n_total();
  TaylorCoeffs out;
  out.order = M;
  out.coeffs.resize(static_cast<std::size_t>(M) + 1);
  out.coeffs[0] = 1;
  BigInt b_pow_m = 1;
  for (int m = 1; m <= M; ++m) {
    b_pow_m *= b;
    const std::vector<BigInt> binom = binomial_row(m);
    BigRational sum = 0;
    for (int j = 1; j <= m; ++j) {
      sum += BigRational(binom[static_cast<std::size_t>(j)] *
                         gamma[static_cast<std::size_t>(j)]) *
             out.coeffs[static_cast<std::size_t>(m - j)];
    }
    // (1 - b^{-m}) M_m = N^{-1} b^{-m} sum  =>  M_m = sum / (N (b^m - 1))
    out.coeffs[static_cast<std::size_t>(m)] =
        sum / BigRational(n_tot * (b_pow_m - 1));
  }
  return out;
}

TaylorCoeffs B_taylor(const DigitSystem& ds, int M) {
  const TaylorCoeffs e = E_taylor(ds, M);
  TaylorCoeffs out;
  out.order = M;
  out.coeffs.resize(static_cast<std::size_t>(M) + 1);
  out.coeffs[0] = 1;
  for (int m = 1; m <= M; ++m) {
    const std::vector<BigInt> binom = binomial_row(m);
    BigRational sum = 0;
    for (int j = 1; j <= m; ++j) {
      sum += BigRational(binom[static_cast<std::size_t>(j)]) *
             e.coeffs[static_cast<std::size_t>(j)] *
             out.coeffs[static_cast<std::size_t>(m - j)];
    }
    out.coeffs[static_cast<std::size_t>(m)] = -sum;
    out.coeffs[static_cast<std::size_t>(m)].canonicalize();
  }
  return out;
}

RationalSeq neg_values(const DigitSystem& ds, int M) {
  if (M < 0) raise(Errc::PreconditionViolated, "M must be non-negative");
  if (ds.is_singleton() || ds.is_full()) {
    raise(Errc::UnsupportedCase,
          ds.is_singleton()
              ? "N = 1: the non-positive integers are poles"
              : "N = b: Riemann case, evaluate numerically instead");
  }
  const std::vector<BigInt> gamma = ds.power_sums(M);
  const BigInt b = ds.base();
  const BigInt n_tot = ds.n_total();
  RationalSeq k(static_cast<std::size_t>(M) + 1);
  k[0] = BigRational(-ds.n_nonzero(), ds.n_total() - 1);
  k[0].canonicalize();
  BigInt b_pow_m = 1;
  for (int m = 1; m <= M; ++m) {
    b_pow_m *= b;
    const std::vector<BigInt> binom = binomial_row(m);
    // (b^{-m} - N) K(-m) = gamma_m/b^m + sum_{j=1..m} C(m,j) gamma_j/b^j K(-m+j)
    BigRational rhs = frac(gamma[static_cast<std::size_t>(m)], b_pow_m);
    BigInt b_pow_j = 1;
    for (int j = 1; j <= m; ++j) {
      b_pow_j *= b;
      rhs += frac(binom[static_cast<std::size_t>(j)] *
                      gamma[static_cast<std::size_t>(j)],
                  b_pow_j) *
             k[static_cast<std::size_t>(m - j)];
    }
    k[static_cast<std::size_t>(m)] =
        rhs * frac(b_pow_m, BigInt(1) - n_tot * b_pow_m);
  }
  return k;
}

Cplx C_eval(const DigitSystem& ds, Cplx t, double tol) {
  if (ds.has_zero() || ds.n_total() < 2) {
    raise(Errc::UnsupportedCase, "C(t) needs 0 not admissible and N > 1");
  }
  const double b = ds.base();
  Cplx acc = -1.0;
  Cplx prod = 1.0;
  double b_pow = b;
  int quiet = 0;
  for (int k = 1; k <= 600; ++k) {
    const Cplx factor = alpha_poly(ds, t / b_pow);
    if (std::abs(factor) <= 1e-8) {
      raise(Errc::NearPoleOfC,
            "|alpha_A(b^{-" + std::to_string(k) + "} t)| = " +
                std::to_string(std::abs(factor)));
    }
    prod *= factor;
    b_pow *= b;
    const Cplx term = 1.0 / prod;
    acc -= term;
    if (std::abs(term) <= tol * std::max(std::abs(acc), 1e-300)) {
      if (++quiet >= 5) return acc;
    } else {
      quiet = 0;
    }
  }
  raise(Errc::PreconditionViolated, "C(t) series did not converge");
}

double cantor_sample(const DigitSystem& ds, int depth, std::uint64_t seed) {
  if (depth < 1) raise(Errc::PreconditionViolated, "depth must be at least 1");
  SplitMix64 rng{seed};
  const auto& a = ds.digits();
  const auto n = static_cast<std::uint64_t>(a.size());
  const double b = ds.base();
  double x = 0.0;
  double place = 1.0;
  for (int j = 1; j <= depth; ++j) {
    place /= b;
    const std::uint64_t r = rng.next();
    const auto idx = static_cast<std::size_t>(
        (static_cast<unsigned __int128>(r) * n) >> 64);
    x += a[idx] * place;
  }
  return x;
}

}  // namespace dd
