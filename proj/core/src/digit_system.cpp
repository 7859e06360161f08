#include "dd/digit_system.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "dd/errors.hpp"

namespace dd {

namespace {

constexpr std::uint64_t kDefaultCap = 100'000'000;  // 10^8 integers

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

DigitSystem::DigitSystem(int base, const std::vector<int>& digits)
    : base_(base), digits_(digits) {
  if (base < 2) {
    raise(Errc::PreconditionViolated, "base must be at least 2");
  }
  if (digits_.empty()) {
    raise(Errc::EmptyDigitSet, "digit set is empty");
  }
  std::sort(digits_.begin(), digits_.end());
  digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
  for (int d : digits_) {
    if (d < 0 || d >= base) {
      raise(Errc::DigitOutOfRange,
            "digit " + std::to_string(d) + " not in [0, " +
                std::to_string(base - 1) + "]");
    }
  }
  if (digits_.size() == 1 && digits_[0] == 0) {
    raise(Errc::OnlyZeroDigit, "digit set must contain a non-zero digit");
  }
  for (int d : digits_) {
    if (d != 0) nonzero_.push_back(d);
  }
  lambda_ = static_cast<double>(digits_.back()) / (base_ - 1);
  const int n = static_cast<int>(digits_.size());
  if (n == 1) {
    s0_ = 0.0;
  } else if (n == base_) {
    s0_ = 1.0;
  } else {
    s0_ = std::log(static_cast<double>(n)) / std::log(static_cast<double>(base_));
  }
}

std::vector<BigInt> DigitSystem::power_sums(int j_max) const {
  std::vector<BigInt> out(static_cast<std::size_t>(j_max) + 1);
  std::vector<BigInt> pow_a(digits_.size(), BigInt(1));  // a^0 = 1, also 0^0
  for (int j = 0; j <= j_max; ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i < digits_.size(); ++i) s += pow_a[i];
    out[static_cast<std::size_t>(j)] = s;
    for (std::size_t i = 0; i < digits_.size(); ++i) pow_a[i] *= digits_[i];
  }
  return out;
}

std::vector<BigInt> DigitSystem::power_sums_prime(int j_max) const {
  std::vector<BigInt> out(static_cast<std::size_t>(j_max) + 1);
  std::vector<BigInt> pow_a(digits_.size(), BigInt(1));
  for (int j = 0; j <= j_max; ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i < digits_.size(); ++i) s += pow_a[i];
    out[static_cast<std::size_t>(j)] = s;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      pow_a[i] *= base_ - 1 - digits_[i];
    }
  }
  return out;
}

std::vector<double> DigitSystem::scaled_power_sums(int j_max) const {
  std::vector<double> out(static_cast<std::size_t>(j_max) + 1);
  std::vector<double> pow_a(digits_.size(), 1.0);
  for (int j = 0; j <= j_max; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < digits_.size(); ++i) s += pow_a[i];
    out[static_cast<std::size_t>(j)] = s;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      pow_a[i] *= static_cast<double>(digits_[i]) / base_;
    }
  }
  return out;
}

std::vector<double> DigitSystem::scaled_power_sums_prime(int j_max) const {
  std::vector<double> out(static_cast<std::size_t>(j_max) + 1);
  std::vector<double> pow_a(digits_.size(), 1.0);
  for (int j = 0; j <= j_max; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < digits_.size(); ++i) s += pow_a[i];
    out[static_cast<std::size_t>(j)] = s;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      pow_a[i] *= static_cast<double>(base_ - 1 - digits_[i]) / base_;
    }
  }
  return out;
}

Cplx lattice_location(const DigitSystem& ds, LatticePoint p) {
  const double log_b = std::log(static_cast<double>(ds.base()));
  return {ds.s0() - p.m, 2.0 * std::numbers::pi * static_cast<double>(p.k) / log_b};
}

PoleProximity nearest_lattice(const DigitSystem& ds, Cplx s) {
  const double log_b = std::log(static_cast<double>(ds.base()));
  const double v_spacing = 2.0 * std::numbers::pi / log_b;
  double m_real = ds.s0() - s.real();
  long m = std::lround(std::max(0.0, m_real));
  if (m < 0) m = 0;
  const long k = std::lround(s.imag() / v_spacing);
  PoleProximity out;
  out.point = LatticePoint{static_cast<int>(m), k};
  out.distance = std::abs(s - lattice_location(ds, out.point));
  return out;
}

std::vector<int> parse_digit_set(const std::string& text, int base) {
  std::vector<int> digits;
  std::size_t pos = 0;
  auto parse_int = [&](std::size_t& i) -> int {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) {
      throw std::invalid_argument("bad digit set '" + text + "'");
    }
    return std::stoi(text.substr(start, i - start));
  };
  while (pos < text.size()) {
    int lo = parse_int(pos);
    int hi = lo;
    if (pos < text.size() && text[pos] == '-') {
      ++pos;
      hi = parse_int(pos);
    }
    if (hi < lo) {
      throw std::invalid_argument("empty range in digit set '" + text + "'");
    }
    for (int d = lo; d <= hi; ++d) digits.push_back(d);
    if (pos < text.size()) {
      if (text[pos] != ',') {
        throw std::invalid_argument("bad digit set '" + text + "'");
      }
      ++pos;
    }
  }
  if (digits.empty()) {
    throw std::invalid_argument("empty digit set");
  }
  (void)base;
  return digits;
}

std::uint64_t default_enum_cap() {
  if (const char* env = std::getenv("DD_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultCap;
}

std::uint64_t admissible_count(const DigitSystem& ds, int length) {
  std::uint64_t count = static_cast<std::uint64_t>(ds.n_nonzero());
  for (int i = 1; i < length; ++i) {
    count = saturating_mul(count, static_cast<std::uint64_t>(ds.n_total()));
  }
  return count;
}

AdmissibleRange::AdmissibleRange(const DigitSystem& ds, int length)
    : ds_(&ds), length_(length) {
  if (length < 1) {
    raise(Errc::PreconditionViolated, "length must be at least 1");
  }
  places_.resize(static_cast<std::size_t>(length));
  double p = 1.0;
  for (int pos = length - 1; pos >= 0; --pos) {
    places_[static_cast<std::size_t>(pos)] = p;
    p *= ds.base();
  }
  reset();
}

void AdmissibleRange::reset() {
  idx_.assign(static_cast<std::size_t>(length_), 0);
  const auto& a = ds_->digits();
  const auto& a1 = ds_->nonzero_digits();
  value_ = a1[0] * places_[0];
  for (int pos = 1; pos < length_; ++pos) {
    value_ += a[0] * places_[static_cast<std::size_t>(pos)];
  }
  fresh_ = true;
  done_ = false;
}

bool AdmissibleRange::next(double& value) {
  if (done_) return false;
  if (fresh_) {
    fresh_ = false;
    value = value_;
    return true;
  }
  const auto& a = ds_->digits();
  const auto& a1 = ds_->nonzero_digits();
  // Odometer increment, least significant position first.
  int pos = length_ - 1;
  for (; pos >= 1; --pos) {
    auto& i = idx_[static_cast<std::size_t>(pos)];
    if (i + 1 < static_cast<int>(a.size())) {
      value_ += (a[static_cast<std::size_t>(i + 1)] - a[static_cast<std::size_t>(i)]) *
                places_[static_cast<std::size_t>(pos)];
      ++i;
      break;
    }
    value_ += (a[0] - a[static_cast<std::size_t>(i)]) * places_[static_cast<std::size_t>(pos)];
    i = 0;
  }
  if (pos == 0) {
    auto& i = idx_[0];
    if (i + 1 < static_cast<int>(a1.size())) {
      value_ += (a1[static_cast<std::size_t>(i + 1)] - a1[static_cast<std::size_t>(i)]) *
                places_[0];
      ++i;
    } else {
      done_ = true;
      return false;
    }
  }
  value = value_;
  return true;
}

std::vector<std::uint64_t> enumerate_admissible(const DigitSystem& ds, int length,
                                                std::optional<std::uint64_t> cap) {
  const std::uint64_t limit = cap.value_or(default_enum_cap());
  const std::uint64_t count = admissible_count(ds, length);
  if (count > limit) {
    raise(Errc::EnumerationTooLarge,
          "length " + std::to_string(length) + " has " + std::to_string(count) +
              " admissible integers, above the cap " + std::to_string(limit));
  }
  if (length * std::log2(static_cast<double>(ds.base())) >= 63.0) {
    raise(Errc::PreconditionViolated,
          "admissible integers of length " + std::to_string(length) +
              " exceed the exact 64-bit range");
  }
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  AdmissibleRange range(ds, length);
  double n = 0.0;
  while (range.next(n)) {
    out.push_back(static_cast<std::uint64_t>(n));
  }
  return out;
}

namespace detail {

Cplx block_sum_shifted(const DigitSystem& ds, int length, Cplx s, int shift,
                       std::optional<std::uint64_t> cap) {
  const std::uint64_t limit = cap.value_or(default_enum_cap());
  const std::uint64_t count = admissible_count(ds, length);
  if (count > limit) {
    raise(Errc::EnumerationTooLarge,
          "block of length " + std::to_string(length) + " has " +
              std::to_string(count) + " terms, above the cap " + std::to_string(limit));
  }
  AdmissibleRange range(ds, length);
  double n = 0.0;
  if (s.imag() == 0.0) {
    const double sigma = s.real();
    double acc = 0.0, comp = 0.0;  // Kahan
    while (range.next(n)) {
      const double term = std::pow(n + shift, -sigma);
      const double y = term - comp;
      const double t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
    return {acc, 0.0};
  }
  Cplx acc = 0.0, comp = 0.0;
  while (range.next(n)) {
    const Cplx term = std::exp(-s * std::log(n + shift));
    const Cplx y = term - comp;
    const Cplx t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }
  return acc;
}

}  // namespace detail

Cplx block_sum(const DigitSystem& ds, int length, Cplx s,
               std::optional<std::uint64_t> cap) {
  return detail::block_sum_shifted(ds, length, s, 0, cap);
}

}  // namespace dd
