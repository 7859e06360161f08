#include "dd/residues.hpp"

#include <cmath>
#include <numbers>

#include "dd/coeffs.hpp"
#include "dd/continuation.hpp"
#include "dd/errors.hpp"

namespace dd {

RationalSeq mu_rational(const DigitSystem& ds, int M) {
  if (M < 0) raise(Errc::PreconditionViolated, "M must be non-negative");
  const std::vector<BigInt> gamma = ds.power_sums(M);
  const BigInt b = ds.base();
  const BigInt n_tot = ds.n_total();
  RationalSeq c(static_cast<std::size_t>(M) + 1);
  c[0] = 1;
  BigInt b_pow_m = 1;
  for (int m = 1; m <= M; ++m) {
    b_pow_m *= b;
    const std::vector<BigInt> binom = binomial_row(m);
    BigRational sum = 0;
    BigInt b_pow_j = 1;
    for (int j = 1; j <= m; ++j) {
      b_pow_j *= b;
      sum += frac(binom[static_cast<std::size_t>(j)] *
                      gamma[static_cast<std::size_t>(j)],
                  b_pow_j) *
             c[static_cast<std::size_t>(m - j)];
    }
    // (1 - b^{-m}) c_m = -(1/N) sum
    c[static_cast<std::size_t>(m)] =
        -sum / BigRational(n_tot) * frac(b_pow_m, b_pow_m - 1);
  }
  return c;
}

Cplx residue_entire(const DigitSystem& ds, LatticePoint p, double tol) {
  const Cplx s = lattice_location(ds, p);
  // The analytic seed term of engine A contributes nothing to the residue:
  // lambda = F(s_{m,k}) / alpha'(s_{m,k}).
  const EntireSum f = geo_entire(ds, s, tol);
  return f.value / alpha_prime_at(ds, p);
}

ResidueLimitResult residue_limit(const DigitSystem& ds, long k, int l_max,
                                 std::optional<std::uint64_t> cap) {
  if (l_max < 1) raise(Errc::PreconditionViolated, "l_max must be at least 1");
  const std::uint64_t limit = cap.value_or(default_enum_cap());
  if (admissible_count(ds, l_max) > limit) {
    raise(Errc::EnumerationTooLarge,
          "length " + std::to_string(l_max) + " exceeds the enumeration cap");
  }
  const double log_b = std::log(static_cast<double>(ds.base()));
  const Cplx s0k{ds.s0(), 2.0 * std::numbers::pi * static_cast<double>(k) / log_b};
  ResidueLimitResult out;
  out.trace.reserve(static_cast<std::size_t>(l_max));
  for (int l = 1; l <= l_max; ++l) {
    out.trace.push_back(block_sum(ds, l, s0k, limit) / log_b);
  }
  out.value = out.trace.back();
  return out;
}

ResidueRow lambda_row(const DigitSystem& ds, long k, int M, Cplx lambda0k) {
  if (M < 0) raise(Errc::PreconditionViolated, "M must be non-negative");
  const double log_b = std::log(static_cast<double>(ds.base()));
  const Cplx s0k{ds.s0(), 2.0 * std::numbers::pi * static_cast<double>(k) / log_b};
  const std::vector<double> gamma_scaled = ds.scaled_power_sums(M);
  const double n_tot = ds.n_total();
  const double b = ds.base();

  ResidueRow row;
  row.k = k;
  row.values.resize(static_cast<std::size_t>(M) + 1);
  row.values[0] = lambda0k;
  for (int m = 1; m <= M; ++m) {
    // (1 - b^{-m}) lambda_m = -(1/N) sum_j ((m - s0k)...(m - j + 1 - s0k)/j!)
    //                          * gamma_j b^{-j} * lambda_{m-j}
    Cplx sum = 0.0;
    Cplx falling = 1.0;
    for (int j = 1; j <= m; ++j) {
      falling *= (static_cast<double>(m - j + 1) - s0k) / static_cast<double>(j);
      sum += falling * gamma_scaled[static_cast<std::size_t>(j)] *
             row.values[static_cast<std::size_t>(m - j)];
    }
    row.values[static_cast<std::size_t>(m)] =
        -sum / n_tot / (1.0 - std::pow(b, -m));
  }

  if (!ds.is_singleton() && !ds.is_full()) {
    // mu_{m,k} = -m! lambda_{m,k} / (-s0k)_{m+1}
    row.mu_values.resize(static_cast<std::size_t>(M) + 1);
    double m_fact = 1.0;
    for (int m = 0; m <= M; ++m) {
      if (m > 0) m_fact *= m;
      const Cplx poch = pochhammer(-s0k, m + 1);
      row.mu_values[static_cast<std::size_t>(m)] =
          -m_fact * row.values[static_cast<std::size_t>(m)] / poch;
    }
  }
  return row;
}

}  // namespace dd
