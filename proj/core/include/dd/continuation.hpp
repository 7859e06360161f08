#pragma once

#include <optional>
#include <vector>

#include "dd/coeffs.hpp"
#include "dd/digit_system.hpp"

namespace dd {

// Minimum distance to the candidate-pole lattice accepted by the analytic
// engines; the 1/alpha amplification then costs at most ~6 digits.
inline constexpr double kDeltaEval = 1e-6;

enum class Method { Direct, GeoSeries, FunctionalEq, ClosedFormN1 };

const char* method_name(Method m) noexcept;

struct EvalResult {
  Cplx value;
  double tail_estimate = 0.0;  // bound on the truncation error, >= 0
  long terms_used = 0;
  Method method = Method::Direct;
  std::optional<PoleProximity> nearest_pole;
};

// Direct block summation in the half-plane Re s >= s0 + margin. Fails with
// EnumerationTooLarge (before enumerating anything) when the tolerance cannot
// be reached under the cap.
EvalResult eval_direct(const DigitSystem& ds, Cplx s, double tol,
                       std::optional<std::uint64_t> cap = std::nullopt);

// Entire numerator of engine A at level 2:
//   F(s) = sum_m (-1)^m (s)_m/m! v_m(s) sum_{a1 in A1, a2 in A} (a1 b + a2)^{-s-m},
// which continues alpha(s) (K(s) - sum_{a in A1} a^{-s}) to the whole plane.
struct EntireSum {
  Cplx value;
  double tail = 0.0;
  long terms = 0;
};
EntireSum geo_entire(const DigitSystem& ds, Cplx s, double tol);

// Engine A: K(s) = F(s)/alpha(s) + sum_{a in A1} a^{-s}, anywhere off the
// lattice.
EvalResult eval_geo(const DigitSystem& ds, Cplx s, double tol);

// Engine B: unwinds the infinite functional equation downward from the
// half-plane. depth < 0 selects an automatic unwinding depth.
EvalResult eval_feq(const DigitSystem& ds, Cplx s, double tol, int depth = -1);

// Same engine for H(s) = sum' (n+1)^{-s}: (a+1)^{-s} seeds, the modified
// power sums, and no sign alternation.
EvalResult eval_H(const DigitSystem& ds, Cplx s, double tol, int depth = -1);

// N = 1 closed form ((b-1)/f)^s sum_j ((s)_j/j!)/(b^{s+j}-1).
EvalResult eval_closed_n1(const DigitSystem& ds, Cplx s, double tol);

// K(1): the Kempner sum of the digit system. Errors with IsRiemannZeta when
// N = b (pole at s = 1).
EvalResult kempner(const DigitSystem& ds, double tol);

// Block recursion K_{l+1}(s) = sum_m (-1)^m (s)_m/m! b^{-s-m} gamma_m K_l(s+m)
// on a table of offsets 0..m_max, seeded by exact length-1 blocks. Returns
// K_1(s)..K_{l_max}(s). Independent oracle engine; needs Re s > s0.
std::vector<Cplx> baillie_blocks(const DigitSystem& ds, Cplx s, int l_max,
                                 int m_max);

// Evaluation policy used by the CLI's `--method auto`: direct in the
// half-plane (falling back to engine A when the cap bites), engine A
// elsewhere, and an even finite-difference stencil at lattice points whose
// residue vanishes (removable points such as s = 0 for the full digit set).
EvalResult eval_auto(const DigitSystem& ds, Cplx s, double tol);

}  // namespace dd
