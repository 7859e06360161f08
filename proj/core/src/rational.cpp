#include "dd/rational.hpp"

#include <stdexcept>

namespace dd {

std::string to_string(const BigRational& q) {
  BigRational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

BigRational rational_from_string(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

BigRational frac(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<BigInt> binomial_row(int m) {
  std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    row[static_cast<std::size_t>(i)] = 1;
    for (int j = i - 1; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
    }
  }
  return row;
}

BigInt int_pow(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace dd
