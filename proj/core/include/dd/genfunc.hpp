#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dd/digit_system.hpp"
#include "dd/residues.hpp"

namespace dd {

// Truncated exponential-generating-function data: value = sum coeffs[m] t^m/m!.
struct TaylorCoeffs {
  std::vector<BigRational> coeffs;
  int order = 0;
};

// Moment generating function E(t) of the canonical self-similar measure:
// prod_{j>=1} (sum_{a in A} e^{b^{-j} a t})/N, truncated once the remaining
// factors deviate from 1 by less than tol.
Cplx mgf_E(const DigitSystem& ds, Cplx t, double tol);

// B(t) = 1/E(t); errors with NearZeroOfE within 1e-12 of a zero of E.
Cplx bgf_B(const DigitSystem& ds, Cplx t, double tol);

// Exact rational moments M_m of the measure, via the self-similar recurrence
// (1 - b^{-m}) M_m = N^{-1} b^{-m} sum_{j=1..m} C(m,j) gamma_j M_{m-j}.
TaylorCoeffs E_taylor(const DigitSystem& ds, int M);

// Exact EGF reciprocal of E_taylor (b_0 = 1, sum_j C(m,j) M_j b_{m-j} = 0).
// Equals mu_rational: the central cross-check of the artifact.
TaylorCoeffs B_taylor(const DigitSystem& ds, int M);

// Exact K(0), K(-1), ..., K(-M) for 1 < N < b:
//   K(0) = -N1/(N-1),
//   (b^{-m} - N) K(-m) = gamma_m/b^m + sum_{j=1..m} C(m,j) (gamma_j/b^j) K(-m+j).
RationalSeq neg_values(const DigitSystem& ds, int M);

// EGF of the values at non-positive integers, evaluated from the explicit
// series C(t) = -1 - sum_{k>=1} 1/prod_{j=1..k} alpha_A(b^{-j} t) with
// alpha_A(z) = sum_{a in A} e^{a z}. Needs 0 not in A and N > 1.
Cplx C_eval(const DigitSystem& ds, Cplx t, double tol);

// One draw of sum_{j=1..depth} X_j b^{-j} with X_j uniform on A.
//
// PRNG (fixed for reproducibility): SplitMix64 seeded with `seed`; one
// 64-bit output per digit; digit index by the multiply-shift bounded
// reduction floor(r * N / 2^64). Pure integer arithmetic, identical on every
// platform.
double cantor_sample(const DigitSystem& ds, int depth, std::uint64_t seed);

}  // namespace dd
