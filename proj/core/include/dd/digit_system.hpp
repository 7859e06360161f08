#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dd/rational.hpp"

namespace dd {

using Cplx = std::complex<double>;

// A base-b digit system: the admissible digit set A together with its derived
// constants. Immutable after construction; safe to share across threads.
class DigitSystem {
 public:
  // Validates, sorts and deduplicates the digit set.
  DigitSystem(int base, const std::vector<int>& digits);

  int base() const noexcept { return base_; }
  const std::vector<int>& digits() const noexcept { return digits_; }
  const std::vector<int>& nonzero_digits() const noexcept { return nonzero_; }

  int n_total() const noexcept { return static_cast<int>(digits_.size()); }
  int n_nonzero() const noexcept { return static_cast<int>(nonzero_.size()); }
  int f_max() const noexcept { return digits_.back(); }

  // Decay ratio f/(b-1), in (0, 1].
  double lambda() const noexcept { return lambda_; }
  // Abscissa of convergence log_b N; exact 0 when N == 1, exact 1 when N == b.
  double s0() const noexcept { return s0_; }

  bool has_zero() const noexcept { return digits_.front() == 0; }
  bool is_singleton() const noexcept { return digits_.size() == 1; }
  bool is_full() const noexcept { return static_cast<int>(digits_.size()) == base_; }

  // gamma_j = sum over A of a^j for j = 0..j_max, exact, with 0^0 = 1.
  std::vector<BigInt> power_sums(int j_max) const;
  // gamma'_j = sum over A of (b-1-a)^j for j = 0..j_max, exact, with 0^0 = 1.
  std::vector<BigInt> power_sums_prime(int j_max) const;

  // sum over A of (a/b)^j, resp. ((b-1-a)/b)^j, as doubles; the scaled form
  // the floating-point series engines consume (never overflows).
  std::vector<double> scaled_power_sums(int j_max) const;
  std::vector<double> scaled_power_sums_prime(int j_max) const;

 private:
  int base_;
  std::vector<int> digits_;
  std::vector<int> nonzero_;
  double lambda_;
  double s0_;
};

// Candidate pole s_{m,k} = s0 - m + 2*pi*i*k/log(b) of the continued series.
struct LatticePoint {
  int m = 0;
  long k = 0;
};

Cplx lattice_location(const DigitSystem& ds, LatticePoint p);

struct PoleProximity {
  LatticePoint point;
  double distance = 0.0;
};

// Nearest candidate pole. The lattice is a rectangular grid with horizontal
// spacing 1 and vertical spacing 2*pi/log(b), so per-coordinate rounding is
// exact; m clamps at 0.
PoleProximity nearest_lattice(const DigitSystem& ds, Cplx s);

// Digit-set text syntax: comma-separated union of single digits and "lo-hi"
// ranges, e.g. "0-8", "1,3,5,7,9", "0-3,7".
std::vector<int> parse_digit_set(const std::string& text, int base);

// Enumeration cap: DD_ENUM_CAP environment override, default 10^8 integers.
std::uint64_t default_enum_cap();

// N1 * N^(l-1), saturating at UINT64_MAX.
std::uint64_t admissible_count(const DigitSystem& ds, int length);

// Streaming ascending enumeration of the admissible integers with exactly
// `length` digits. Values are produced as doubles (exact below 2^53); memory
// is O(length) regardless of the count.
class AdmissibleRange {
 public:
  AdmissibleRange(const DigitSystem& ds, int length);

  // Writes the next admissible integer; returns false when exhausted.
  bool next(double& value);
  void reset();

 private:
  const DigitSystem* ds_;
  int length_;
  std::vector<int> idx_;        // idx_[0] indexes nonzero_digits, rest digits
  std::vector<double> places_;  // b^(length-1-pos)
  double value_ = 0.0;
  bool fresh_ = true;
  bool done_ = false;
};

// Materialized enumeration as exact 64-bit integers, ascending. Errors when
// the count exceeds the cap or when b^length does not fit in 64 bits.
std::vector<std::uint64_t> enumerate_admissible(
    const DigitSystem& ds, int length,
    std::optional<std::uint64_t> cap = std::nullopt);

// K_l(s): direct sum of n^{-s} over the admissible integers of length l.
Cplx block_sum(const DigitSystem& ds, int length, Cplx s,
               std::optional<std::uint64_t> cap = std::nullopt);

namespace detail {
// Same block sum with n replaced by n+shift (shift=1 serves the H variant).
Cplx block_sum_shifted(const DigitSystem& ds, int length, Cplx s, int shift,
                       std::optional<std::uint64_t> cap = std::nullopt);
}  // namespace detail

}  // namespace dd
