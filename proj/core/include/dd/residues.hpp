#pragma once

#include <optional>
#include <vector>

#include "dd/digit_system.hpp"

namespace dd {

using RationalSeq = std::vector<BigRational>;

struct ResidueRow {
  long k = 0;
  std::vector<Cplx> values;      // lambda_{0,k}..lambda_{M,k}
  // mu_{m,k} from lambda via the Pochhammer normalization; filled only when
  // 1 < N < b (the conversion degenerates for N = 1 and N = b).
  std::vector<Cplx> mu_values;
};

// Exact solution of the mu-recurrence with c_0 = 1:
//   (1 - b^{-m}) c_m = -N^{-1} sum_{j=1..m} C(m,j) b^{-j} gamma_j c_{m-j}.
// For the full digit set these are the Bernoulli numbers (B_1 = -1/2); in
// general they are the normalized residue sequence on the real axis.
RationalSeq mu_rational(const DigitSystem& ds, int M);

// Residue at s_{m,k} as the entire-numerator / alpha' ratio. Returns ~0 when
// the lattice point is not an actual pole.
Cplx residue_entire(const DigitSystem& ds, LatticePoint p, double tol = 1e-12);

struct ResidueLimitResult {
  Cplx value;                 // (log b)^{-1} * block sum at length l_max
  std::vector<Cplx> trace;    // the same quantity for l = 1..l_max
};

// Block-sum limit formula for lambda_{0,k}. The trace is reported unreduced:
// no convergence rate is promised, the caller inspects it.
ResidueLimitResult residue_limit(const DigitSystem& ds, long k, int l_max,
                                 std::optional<std::uint64_t> cap = std::nullopt);

// Extends a row of residues from the seed lambda_{0,k} by the linear
// recurrence; fills mu_values when 1 < N < b.
ResidueRow lambda_row(const DigitSystem& ds, long k, int M, Cplx lambda0k);

}  // namespace dd
