#ifndef LORENTZKIT_DECIMAL_HPP
#define LORENTZKIT_DECIMAL_HPP

#include <string>

#include "lorentzkit/numberfield.hpp"

namespace lorentzkit {

enum class Rounding { Down, Up };

/// Fixed-notation decimal string of q with `significant` significant digits,
/// rounded toward -inf (Down) or +inf (Up). No exponent is ever emitted.
std::string to_decimal(const Rational& q, unsigned significant, Rounding dir);

/// Significant digits printed for enclosures computed at precision_bits:
/// floor(bits * log10(2)) - 8, at least 6. Gives 30 for 128 bits.
unsigned decimal_digits_for(unsigned precision_bits);

/// Outward-rounded decimal rendering of an interval.
struct DecimalInterval {
  std::string lo;
  std::string hi;
};

DecimalInterval to_decimal(const Interval& iv, unsigned significant);

}  // namespace lorentzkit

#endif  // LORENTZKIT_DECIMAL_HPP
