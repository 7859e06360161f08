#pragma once

#include <optional>
#include <vector>

#include "dd/digit_system.hpp"

namespace dd {

// Distance threshold on |b^{s+m} - N| separating "divide in the recurrence"
// from "regularize at the lattice point". The division loses about
// -log10(delta) digits, so 1e-8 keeps usable double accuracy.
inline constexpr double kDeltaPole = 1e-8;

// Relative deviation under which trailing factors of the infinite products
// are dropped; with at most ~60 kept factors the product error stays below
// 1e-15.
inline constexpr double kProductTailCut = 1e-17;

struct CoeffSequence {
  Cplx s;
  std::vector<Cplx> values;
  // Set when s lies within kDeltaPole of the candidate-pole lattice and the
  // v-recurrence was regularized at that index.
  std::optional<int> regularized_index;
};

// Pochhammer symbol (s)_m = s(s+1)...(s+m-1); empty product 1.
Cplx pochhammer(Cplx s, int m);

// u_0..u_M from u_0 = b^s/(b^s - N) and the binomial recurrence
// (b^{s+m} - N) u_m = sum_{j=1..m} C(m,j) gamma_j u_{m-j}.
CoeffSequence u_coeffs(const DigitSystem& ds, Cplx s, int M,
                       double delta_pole = kDeltaPole);

struct TailedValue {
  Cplx value;
  double tail_bound;
};

// Brute-force truncation of the defining word sum for u_m over word lengths
// l <= L, with the attached geometric tail bound. Oracle-grade, O(N^L).
TailedValue u_direct(const DigitSystem& ds, Cplx s, int m, int L,
                     std::optional<std::uint64_t> cap = std::nullopt);

// v_m = alpha(s) u_m(s): same recurrence, seeded with the pole-cancelled
// product, entire in s. Within delta_pole of a lattice point the one
// impossible division is replaced by the regularized value.
CoeffSequence v_coeffs(const DigitSystem& ds, Cplx s, int M,
                       double delta_pole = kDeltaPole);

// Incrementally extended v-sequence; what the series engines consume.
class VSeq {
 public:
  VSeq(const DigitSystem& ds, Cplx s, double delta_pole = kDeltaPole);

  // v_m, extending the recurrence on demand.
  Cplx at(int m);
  std::optional<int> regularized_index() const noexcept { return regularized_; }

 private:
  void extend(int m);

  const DigitSystem* ds_;
  Cplx s_;
  double delta_pole_;
  std::vector<Cplx> values_;
  std::vector<double> gamma_;      // gamma_j in doubles
  std::vector<double> pow_a_;      // running a^j per digit
  std::vector<double> binom_;      // current Pascal row in doubles
  Cplx pow_b_;                     // b^{s+m}
  std::optional<int> regularized_;
};

// alpha(s) = prod_{n>=0} (1 - N b^{-s-n}), truncated once the dropped factors
// deviate from 1 by less than kProductTailCut. Deterministic for fixed s.
Cplx alpha(const DigitSystem& ds, Cplx s);

// alpha'(s_{m,k}) = log(b) * prod_{n != m} (1 - N b^{-s_{m,k}-n}); uses
// N b^{-s_{m,k}-n} = b^{m-n} exactly, so the value is real and k-independent.
Cplx alpha_prime_at(const DigitSystem& ds, LatticePoint p);

// w_m(s) = sum_{j=0..m} (-1)^j C(m,j) b^{s+j}/(b^{s+j}-1), the explicit N=1
// coefficients (f = b-1 normalization).
Cplx w_closed(int base, Cplx s, int m, double delta_pole = kDeltaPole);

}  // namespace dd
