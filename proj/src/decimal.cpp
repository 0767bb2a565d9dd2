#include "lorentzkit/decimal.hpp"

#include <algorithm>

namespace lorentzkit {

namespace {

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// floor(log10(|q|)) for q != 0.
long decimal_exponent(const Rational& q) {
  const Rational x = abs(q);
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  // sizeinbase may overshoot by one; settle exactly.
  auto ten_pow = [](long k) {
    return k >= 0 ? Rational(pow10(static_cast<unsigned>(k)))
                  : Rational(Integer(1), pow10(static_cast<unsigned>(-k)));
  };
  while (ten_pow(e) > x) --e;
  while (ten_pow(e + 1) <= x) ++e;
  return e;
}

Integer round_to_integer(const Rational& q, Rounding dir) {
  Integer r;
  if (dir == Rounding::Down)
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  else
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

std::string to_decimal(const Rational& q, unsigned significant, Rounding dir) {
  if (sgn(q) == 0) return "0";
  significant = std::max(significant, 1u);
  const long scale = static_cast<long>(significant) - 1 - decimal_exponent(q);
  if (scale <= 0) {
    const Integer unit = pow10(static_cast<unsigned>(-scale));
    Integer n = round_to_integer(q / Rational(unit), dir) * unit;
    return n.get_str();
  }
  const Integer n = round_to_integer(q * Rational(pow10(static_cast<unsigned>(scale))), dir);
  std::string digits = Integer(abs(n)).get_str();
  const auto frac = static_cast<std::size_t>(scale);
  if (digits.size() <= frac) digits.insert(0, frac + 1 - digits.size(), '0');
  digits.insert(digits.size() - frac, ".");
  // Trailing zeros carry no information in fixed notation.
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (sgn(n) < 0 ? "-" : "") + digits;
}

unsigned decimal_digits_for(unsigned precision_bits) {
  // 30103 / 100000 ~ log10(2), enough for any realistic precision.
  const long digits = static_cast<long>(precision_bits) * 30103 / 100000 - 8;
  return static_cast<unsigned>(std::max(digits, 6L));
}

DecimalInterval to_decimal(const Interval& iv, unsigned significant) {
  return DecimalInterval{to_decimal(iv.lo, significant, Rounding::Down),
                         to_decimal(iv.hi, significant, Rounding::Up)};
}

}  // namespace lorentzkit
