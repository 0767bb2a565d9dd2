#ifndef LORENTZKIT_NUMBERFIELD_HPP
#define LORENTZKIT_NUMBERFIELD_HPP

// Exact arithmetic in Q and in real quadratic fields Q(sqrt(d)).
//
// Rationals are GMP mpq_class values kept in canonical form (positive
// denominator, coprime numerator). A QuadFieldElem a + b*sqrt(d) carries
// its field so that mixing elements of different fields is caught.

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "lorentzkit/errors.hpp"

namespace lorentzkit {

using Rational = mpq_class;
using Integer = mpz_class;

/// The two real embeddings of Q(sqrt(d)). The identity embedding sends
/// sqrt(d) to the positive root.
enum class Embedding { Identity, Conjugate };

std::string_view embedding_name(Embedding e);

/// Either Q (no d) or Q(sqrt(d)) for a square-free d >= 2.
class FieldDescriptor {
 public:
  /// The rational field.
  FieldDescriptor() = default;

  static FieldDescriptor rationals() { return FieldDescriptor{}; }
  /// Throws InvalidField unless d is square-free and d >= 2.
  static FieldDescriptor quadratic(std::int64_t d);

  bool is_rational() const noexcept { return !d_.has_value(); }
  bool is_quadratic() const noexcept { return d_.has_value(); }
  /// Requires is_quadratic().
  std::int64_t d() const { return d_.value(); }
  std::optional<std::int64_t> radicand() const noexcept { return d_; }
  int degree() const noexcept { return d_ ? 2 : 1; }

  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  explicit FieldDescriptor(std::int64_t d) : d_(d) {}
  std::optional<std::int64_t> d_;
};

bool is_square_free(std::int64_t n);

/// Closed interval with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

class QuadFieldElem {
 public:
  /// Zero of Q.
  QuadFieldElem() = default;
  /// Rational element of the given field.
  QuadFieldElem(FieldDescriptor field, Rational a);
  /// a + b*sqrt(d). Throws InvalidField when field is Q and b != 0.
  QuadFieldElem(FieldDescriptor field, Rational a, Rational b);

  const FieldDescriptor& field() const noexcept { return field_; }
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadFieldElem zero() const { return QuadFieldElem(field_, 0); }
  QuadFieldElem one() const { return QuadFieldElem(field_, 1); }

  /// Field norm x * conj(x) = a^2 - d b^2.
  Rational norm() const;
  /// Field trace x + conj(x) = 2a.
  Rational trace() const { return 2 * a_; }

  QuadFieldElem operator-() const;
  QuadFieldElem& operator+=(const QuadFieldElem& y);
  QuadFieldElem& operator-=(const QuadFieldElem& y);
  QuadFieldElem& operator*=(const QuadFieldElem& y);
  QuadFieldElem& operator/=(const QuadFieldElem& y);

  friend QuadFieldElem operator+(QuadFieldElem x, const QuadFieldElem& y) { return x += y; }
  friend QuadFieldElem operator-(QuadFieldElem x, const QuadFieldElem& y) { return x -= y; }
  friend QuadFieldElem operator*(QuadFieldElem x, const QuadFieldElem& y) { return x *= y; }
  friend QuadFieldElem operator/(QuadFieldElem x, const QuadFieldElem& y) { return x /= y; }

  friend bool operator==(const QuadFieldElem& x, const QuadFieldElem& y) {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  FieldDescriptor field_;
  Rational a_;
  Rational b_;
};

QuadFieldElem field_add(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem field_mul(const QuadFieldElem& x, const QuadFieldElem& y);
/// Throws DivisionByZero for x == 0.
QuadFieldElem field_inv(const QuadFieldElem& x);
QuadFieldElem galois_conjugate(const QuadFieldElem& x);

/// Exact sign of x under the embedding. Over Q the conjugate embedding is
/// the identity map.
int sign_at(const QuadFieldElem& x, Embedding e);

/// y with y*y == x when x is a square in its field.
std::optional<QuadFieldElem> is_square(const QuadFieldElem& x);

/// Rational square root, when it exists.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Dyadic enclosure [s/2^k, (s+1)/2^k] of sqrt(n) for a non-negative
/// integer n, with s = floor(sqrt(n * 4^k)). Exact when n is a square.
Interval sqrt_enclosure(const Integer& n, unsigned frac_bits);

/// Rational enclosure of x (identity embedding) of width at most
/// 2^-precision_bits * max(1, |x|). Throws InvalidArgument for
/// precision_bits < 8.
Interval decimal_enclosure(const QuadFieldElem& x, unsigned precision_bits);

/// Number of base-2 digits of ceil(|q|); 0 for q == 0.
unsigned magnitude_bits(const Rational& q);

/// Textual element syntax: "p/q", "p/q+r/s*sqrt(d)", "-sqrt(d)", ...
/// Whitespace is ignored. Any sqrt(d) must match the field's d.
/// Throws ParseError or FieldMismatch.
QuadFieldElem parse_element(std::string_view text, const FieldDescriptor& field);

/// Canonical text in the syntax accepted by parse_element.
std::string to_string(const QuadFieldElem& x);

}  // namespace lorentzkit

#endif  // LORENTZKIT_NUMBERFIELD_HPP
