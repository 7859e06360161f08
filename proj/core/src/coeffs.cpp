#include "dd/coeffs.hpp"

#include <cmath>
#include <limits>

#include "dd/errors.hpp"

namespace dd {

namespace {

Cplx cpow(double base, Cplx e) { return std::exp(e * std::log(base)); }

// Grows a Pascal row in doubles in place: row for m becomes row for m+1.
void grow_binom_row(std::vector<double>& row) {
  row.push_back(1.0);
  for (std::size_t j = row.size() - 2; j >= 1; --j) row[j] += row[j - 1];
}

// prod_{n=0..} (1 - N b^{-s-n}) with the factor at n == skip omitted
// (skip < 0 keeps every factor; skip_from_one starts the product at n = 1).
Cplx truncated_alpha_product(const DigitSystem& ds, Cplx s, int skip, int n_start) {
  const double b = ds.base();
  const double n_tot = ds.n_total();
  Cplx acc = 1.0;
  Cplx q = n_tot * cpow(b, -s - static_cast<double>(n_start));
  for (int n = n_start; n < 4000; ++n) {
    if (std::abs(q) < kProductTailCut && n > skip) break;
    if (n != skip) acc *= (1.0 - q);
    q /= b;
  }
  return acc;
}

}  // namespace

Cplx pochhammer(Cplx s, int m) {
  Cplx p = 1.0;
  for (int i = 0; i < m; ++i) p *= s + static_cast<double>(i);
  return p;
}

CoeffSequence u_coeffs(const DigitSystem& ds, Cplx s, int M, double delta_pole) {
  if (M < 0) raise(Errc::PreconditionViolated, "M must be non-negative");
  const double b = ds.base();
  const double n_tot = ds.n_total();
  if (M * std::log10(b) > 280.0) {
    raise(Errc::PreconditionViolated,
          "coefficient order too large for double-precision intermediates");
  }
  CoeffSequence out;
  out.s = s;
  out.values.resize(static_cast<std::size_t>(M) + 1);

  Cplx pow_b = cpow(b, s);  // b^{s+m}
  {
    const Cplx den = pow_b - n_tot;
    if (std::abs(den) <= delta_pole) {
      raise(Errc::NearCandidatePole,
            "u_0 undefined: |b^s - N| = " + std::to_string(std::abs(den)));
    }
    out.values[0] = pow_b / den;
  }

  std::vector<double> gamma{static_cast<double>(ds.n_total())};
  std::vector<double> pow_a(ds.digits().size(), 1.0);
  std::vector<double> binom{1.0};
  for (int m = 1; m <= M; ++m) {
    grow_binom_row(binom);
    double g = 0.0;
    for (std::size_t i = 0; i < pow_a.size(); ++i) {
      pow_a[i] *= ds.digits()[i];
      g += pow_a[i];
    }
    gamma.push_back(g);
    pow_b *= b;
    const Cplx den = pow_b - n_tot;
    if (std::abs(den) <= delta_pole) {
      raise(Errc::NearCandidatePole,
            "u_" + std::to_string(m) + " undefined: |b^{s+m} - N| = " +
                std::to_string(std::abs(den)));
    }
    Cplx sum = 0.0;
    for (int j = 1; j <= m; ++j) {
      sum += binom[static_cast<std::size_t>(j)] * gamma[static_cast<std::size_t>(j)] *
             out.values[static_cast<std::size_t>(m - j)];
    }
    out.values[static_cast<std::size_t>(m)] = sum / den;
  }
  return out;
}

TailedValue u_direct(const DigitSystem& ds, Cplx s, int m, int L,
                     std::optional<std::uint64_t> cap) {
  const double sigma = s.real();
  if (sigma <= ds.s0() + 0.1) {
    raise(Errc::PreconditionViolated, "u_direct needs Re s > s0 + 0.1");
  }
  const std::uint64_t limit = cap.value_or(default_enum_cap());
  const double b = ds.base();
  const double n_tot = ds.n_total();
  double words = 0.0;
  for (int l = 1; l <= L; ++l) words += std::pow(n_tot, l);
  if (words > static_cast<double>(limit)) {
    raise(Errc::EnumerationTooLarge, "word count above the enumeration cap");
  }

  Cplx acc = (m == 0) ? 1.0 : 0.0;  // the 0^m term
  const auto& digits = ds.digits();
  for (int l = 1; l <= L; ++l) {
    // Odometer over words (a_1..a_l) in A^l with running x = sum a_i b^{-i}.
    std::vector<int> idx(static_cast<std::size_t>(l), 0);
    std::vector<double> scale(static_cast<std::size_t>(l));
    double p = 1.0;
    for (int i = 0; i < l; ++i) {
      p /= b;
      scale[static_cast<std::size_t>(i)] = p;
    }
    double x = 0.0;
    for (int i = 0; i < l; ++i) x += digits[0] * scale[static_cast<std::size_t>(i)];
    const Cplx block_weight = cpow(b, -s * static_cast<double>(l));
    Cplx block = 0.0;
    while (true) {
      double xp = 1.0;
      for (int i = 0; i < m; ++i) xp *= x;
      block += xp;
      int pos = l - 1;
      for (; pos >= 0; --pos) {
        auto& i = idx[static_cast<std::size_t>(pos)];
        if (i + 1 < static_cast<int>(digits.size())) {
          x += (digits[static_cast<std::size_t>(i + 1)] - digits[static_cast<std::size_t>(i)]) *
               scale[static_cast<std::size_t>(pos)];
          ++i;
          break;
        }
        x += (digits[0] - digits[static_cast<std::size_t>(i)]) *
             scale[static_cast<std::size_t>(pos)];
        i = 0;
      }
      if (pos < 0) break;
    }
    acc += block * block_weight;
  }
  const double r = n_tot * std::pow(b, -sigma);
  TailedValue out;
  out.value = acc;
  out.tail_bound = std::pow(r, L + 1) / (1.0 - r);
  return out;
}

VSeq::VSeq(const DigitSystem& ds, Cplx s, double delta_pole)
    : ds_(&ds), s_(s), delta_pole_(delta_pole) {
  values_.push_back(truncated_alpha_product(ds, s, /*skip=*/-1, /*n_start=*/1));
  gamma_.push_back(ds.n_total());
  pow_a_.assign(ds.digits().size(), 1.0);
  binom_.push_back(1.0);
  pow_b_ = cpow(ds.base(), s);
  if (std::abs(pow_b_ - static_cast<double>(ds.n_total())) <= delta_pole_) {
    regularized_ = 0;  // m0 = 0: the product seed is already the right value
  }
}

Cplx VSeq::at(int m) {
  while (static_cast<int>(values_.size()) <= m) {
    extend(static_cast<int>(values_.size()));
  }
  return values_[static_cast<std::size_t>(m)];
}

void VSeq::extend(int m) {
  const double b = ds_->base();
  const double n_tot = ds_->n_total();
  if (m * std::log10(b) > 290.0) {
    raise(Errc::PreconditionViolated,
          "v-recurrence exceeded the double-precision range");
  }
  grow_binom_row(binom_);
  double g = 0.0;
  for (std::size_t i = 0; i < pow_a_.size(); ++i) {
    pow_a_[i] *= ds_->digits()[i];
    g += pow_a_[i];
  }
  gamma_.push_back(g);
  pow_b_ *= b;
  const Cplx den = pow_b_ - n_tot;
  if (std::abs(den) > delta_pole_) {
    Cplx sum = 0.0;
    for (int j = 1; j <= m; ++j) {
      sum += binom_[static_cast<std::size_t>(j)] * gamma_[static_cast<std::size_t>(j)] *
             values_[static_cast<std::size_t>(m - j)];
    }
    values_.push_back(sum / den);
    return;
  }
  // Regularized value at the offending index m0 = m:
  //   v_m0 = prod_{n != m0} (1 - N b^{-s-n}) * b^{-s-m0}
  //          * sum_{j=1..m0} C(m0,j) gamma_j u_{m0-j}(s),
  // with u_0..u_{m0-1} finite there and given by the u-recurrence.
  regularized_ = m;
  const CoeffSequence u = u_coeffs(*ds_, s_, m - 1, delta_pole_);
  Cplx sum = 0.0;
  for (int j = 1; j <= m; ++j) {
    sum += binom_[static_cast<std::size_t>(j)] * gamma_[static_cast<std::size_t>(j)] *
           u.values[static_cast<std::size_t>(m - j)];
  }
  const Cplx prod = truncated_alpha_product(*ds_, s_, /*skip=*/m, /*n_start=*/0);
  values_.push_back(prod * cpow(b, -s_ - static_cast<double>(m)) * sum);
}

CoeffSequence v_coeffs(const DigitSystem& ds, Cplx s, int M, double delta_pole) {
  if (M < 0) raise(Errc::PreconditionViolated, "M must be non-negative");
  VSeq seq(ds, s, delta_pole);
  CoeffSequence out;
  out.s = s;
  out.values.resize(static_cast<std::size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) out.values[static_cast<std::size_t>(m)] = seq.at(m);
  out.regularized_index = seq.regularized_index();
  return out;
}

Cplx alpha(const DigitSystem& ds, Cplx s) {
  return truncated_alpha_product(ds, s, /*skip=*/-1, /*n_start=*/0);
}

Cplx alpha_prime_at(const DigitSystem& ds, LatticePoint p) {
  const double b = ds.base();
  const double log_b = std::log(b);
  // N b^{-s_{m,k}-n} = b^{m-n} exactly on the lattice.
  double prod = 1.0;
  for (int i = 1; i <= p.m; ++i) {
    prod *= 1.0 - std::pow(b, i);
  }
  double q = 1.0 / b;
  while (q >= kProductTailCut) {
    prod *= 1.0 - q;
    q /= b;
  }
  if (!std::isfinite(prod)) {
    raise(Errc::PreconditionViolated,
          "alpha' overflows double precision at this lattice depth");
  }
  return {log_b * prod, 0.0};
}

Cplx w_closed(int base, Cplx s, int m, double delta_pole) {
  if (m < 0) raise(Errc::PreconditionViolated, "m must be non-negative");
  const double b = base;
  std::vector<double> binom{1.0};
  for (int i = 1; i <= m; ++i) grow_binom_row(binom);
  Cplx acc = 0.0;
  Cplx pow_b = cpow(b, s);
  double sign = 1.0;
  for (int j = 0; j <= m; ++j) {
    const Cplx den = pow_b - 1.0;
    if (std::abs(den) <= delta_pole) {
      raise(Errc::NearCandidatePole,
            "w_m undefined: |b^{s+j} - 1| = " + std::to_string(std::abs(den)) +
                " at j = " + std::to_string(j));
    }
    acc += sign * binom[static_cast<std::size_t>(j)] * pow_b / den;
    sign = -sign;
    pow_b *= b;
  }
  return acc;
}

}  // namespace dd
