#include "lorentzkit/numberfield.hpp"

#include <cctype>
#include <string_view>

namespace lorentzkit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::InvalidField: return "INVALID_FIELD";
    case ErrorCode::InvalidEmbedding: return "INVALID_EMBEDDING";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ZeroCoefficient: return "ZERO_COEFFICIENT";
    case ErrorCode::DimTooSmall: return "DIM_TOO_SMALL";
    case ErrorCode::DimMismatch: return "DIM_MISMATCH";
    case ErrorCode::NotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::SingularForm: return "SINGULAR_FORM";
    case ErrorCode::NoConjugateForQ: return "NO_CONJUGATE_FOR_Q";
    case ErrorCode::PointNotInModel: return "POINT_NOT_IN_MODEL";
    case ErrorCode::NormalNotSpacelike: return "NORMAL_NOT_SPACELIKE";
    case ErrorCode::FormMismatch: return "FORM_MISMATCH";
    case ErrorCode::NotUltraparallel: return "NOT_ULTRAPARALLEL";
    case ErrorCode::NotFOrthogonal: return "NOT_F_ORTHOGONAL";
    case ErrorCode::NotAReflection: return "NOT_A_REFLECTION";
    case ErrorCode::InvalidSideCount: return "INVALID_SIDE_COUNT";
    case ErrorCode::EmptyGeneratorSet: return "EMPTY_GENERATOR_SET";
    case ErrorCode::WordBudgetExceeded: return "WORD_BUDGET_EXCEEDED";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

std::string_view embedding_name(Embedding e) {
  return e == Embedding::Identity ? "IDENTITY" : "CONJUGATE";
}

bool is_square_free(std::int64_t n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::quadratic(std::int64_t d) {
  if (d < 2)
    throw Error(ErrorCode::InvalidField,
                "d must be >= 2 for a real quadratic field, got " + std::to_string(d));
  if (!is_square_free(d))
    throw Error(ErrorCode::InvalidField, "d must be square-free, got " + std::to_string(d));
  return FieldDescriptor(d);
}

std::string FieldDescriptor::to_string() const {
  return d_ ? "Q(sqrt(" + std::to_string(*d_) + "))" : "Q";
}

namespace {

void require_same_field(const QuadFieldElem& x, const QuadFieldElem& y) {
  if (!(x.field() == y.field()))
    throw Error(ErrorCode::FieldMismatch,
                "field mismatch: " + x.field().to_string() + " vs " + y.field().to_string());
}

Rational radicand_q(const FieldDescriptor& f) {
  return f.is_quadratic() ? Rational(static_cast<long>(f.d())) : Rational(0);
}

}  // namespace

QuadFieldElem::QuadFieldElem(FieldDescriptor field, Rational a)
    : field_(field), a_(std::move(a)), b_(0) {
  a_.canonicalize();
}

QuadFieldElem::QuadFieldElem(FieldDescriptor field, Rational a, Rational b)
    : field_(field), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (field_.is_rational() && sgn(b_) != 0)
    throw Error(ErrorCode::InvalidField, "irrational part given for an element of Q");
}

Rational QuadFieldElem::norm() const {
  return a_ * a_ - radicand_q(field_) * b_ * b_;
}

QuadFieldElem QuadFieldElem::operator-() const {
  QuadFieldElem r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadFieldElem& QuadFieldElem::operator+=(const QuadFieldElem& y) {
  require_same_field(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

QuadFieldElem& QuadFieldElem::operator-=(const QuadFieldElem& y) {
  require_same_field(*this, y);
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

QuadFieldElem& QuadFieldElem::operator*=(const QuadFieldElem& y) {
  require_same_field(*this, y);
  if (field_.is_rational()) {
    a_ *= y.a_;
    return *this;
  }
  Rational a = a_ * y.a_ + radicand_q(field_) * b_ * y.b_;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadFieldElem& QuadFieldElem::operator/=(const QuadFieldElem& y) {
  require_same_field(*this, y);
  return *this *= field_inv(y);
}

QuadFieldElem field_add(const QuadFieldElem& x, const QuadFieldElem& y) { return x + y; }

QuadFieldElem field_mul(const QuadFieldElem& x, const QuadFieldElem& y) { return x * y; }

QuadFieldElem field_inv(const QuadFieldElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Rational n = x.norm();
  return QuadFieldElem(x.field(), x.a() / n, -x.b() / n);
}

QuadFieldElem galois_conjugate(const QuadFieldElem& x) {
  return QuadFieldElem(x.field(), x.a(), -x.b());
}

int sign_at(const QuadFieldElem& x, Embedding e) {
  const int sa = sgn(x.a());
  int sb = sgn(x.b());
  if (e == Embedding::Conjugate) sb = -sb;
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the term of larger magnitude wins. |a| vs |b| sqrt(d).
  const int cmp_sq = cmp(x.a() * x.a(), radicand_q(x.field()) * x.b() * x.b());
  return cmp_sq > 0 ? sa : sb;  // a^2 == d b^2 is impossible for square-free d
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  return Rational(n, d);
}

std::optional<QuadFieldElem> is_square(const QuadFieldElem& x) {
  const FieldDescriptor& f = x.field();
  if (sgn(x.b()) == 0) {
    if (auto r = rational_sqrt(x.a())) return QuadFieldElem(f, *r);
    if (f.is_quadratic()) {
      // a = d q^2, root q sqrt(d).
      if (auto q = rational_sqrt(x.a() / Rational(static_cast<long>(f.d()))))
        return QuadFieldElem(f, 0, *q);
    }
    return std::nullopt;
  }
  // b != 0: seek p + q sqrt(d) with p^2 + d q^2 = a, 2pq = b, p != 0.
  // p^2 is a root of t^2 - a t + d b^2 / 4, discriminant a^2 - d b^2.
  auto s = rational_sqrt(x.norm());
  if (!s) return std::nullopt;
  const Rational d = radicand_q(f);
  for (int sign : {1, -1}) {
    Rational t = (x.a() + sign * *s) / 2;
    auto p = rational_sqrt(t);
    if (!p || sgn(*p) == 0) continue;
    Rational q = x.b() / (2 * *p);
    if (*p * *p + d * q * q == x.a()) return QuadFieldElem(f, *p, q);
  }
  return std::nullopt;
}

Interval sqrt_enclosure(const Integer& n, unsigned frac_bits) {
  if (sgn(n) < 0) throw Error(ErrorCode::InvalidArgument, "square root of a negative number");
  Integer scaled = n << (2 * frac_bits);
  Integer s = sqrt(scaled);
  Integer denom = Integer(1) << frac_bits;
  Interval out{Rational(s, denom), Rational(s, denom)};
  if (s * s != scaled) out.hi = Rational(s + 1, denom);
  out.lo.canonicalize();
  out.hi.canonicalize();
  return out;
}

unsigned magnitude_bits(const Rational& q) {
  if (sgn(q) == 0) return 0;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  c = abs(c);
  if (c == 0) return 1;  // |q| < 1 rounds up to 1
  return static_cast<unsigned>(mpz_sizeinbase(c.get_mpz_t(), 2));
}

Interval decimal_enclosure(const QuadFieldElem& x, unsigned precision_bits) {
  if (precision_bits < 8)
    throw Error(ErrorCode::InvalidArgument, "precision_bits must be at least 8");
  if (sgn(x.b()) == 0) return Interval{x.a(), x.a()};
  // |b| * 2^-k <= 2^-(p+1) with k = p + 1 + bits(ceil |b|).
  const unsigned k = precision_bits + 1 + magnitude_bits(x.b());
  const Interval root = sqrt_enclosure(Integer(static_cast<long>(x.field().d())), k);
  Rational e1 = x.a() + x.b() * root.lo;
  Rational e2 = x.a() + x.b() * root.hi;
  if (e1 > e2) std::swap(e1, e2);
  return Interval{e1, e2};
}

// ---------------------------------------------------------------------------
// Textual syntax

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, const FieldDescriptor& field) : field_(field) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
  }

  QuadFieldElem parse() {
    if (src_.empty()) fail("empty element");
    Rational a, b;
    bool first = true;
    while (pos_ < src_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      bool irrational = false;
      Rational coef = parse_term(irrational);
      if (sign < 0) coef = -coef;
      (irrational ? b : a) += coef;
    }
    if (sgn(b) != 0 && field_.is_rational())
      throw Error(ErrorCode::FieldMismatch, "sqrt term in an element of Q");
    return QuadFieldElem(field_, a, b);
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char get() { return src_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "cannot parse element '" + src_ + "': " + why);
  }

  bool at_sqrt() const { return src_.compare(pos_, 5, "sqrt(") == 0; }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(src_.substr(start, pos_ - start));
  }

  void parse_sqrt() {
    pos_ += 5;
    Integer d = parse_integer();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    if (field_.is_rational() || d != static_cast<long>(field_.d()))
      throw Error(ErrorCode::FieldMismatch,
                  "sqrt(" + d.get_str() + ") does not match field " + field_.to_string());
  }

  // rational ['*' sqrt(d)] | sqrt(d) ['*' rational]
  Rational parse_term(bool& irrational) {
    Rational coef(1);
    if (at_sqrt()) {
      parse_sqrt();
      irrational = true;
      if (peek() == '*') {
        ++pos_;
        coef = parse_rational();
      }
      return coef;
    }
    coef = parse_rational();
    if (peek() == '*') {
      ++pos_;
      if (!at_sqrt()) fail("expected sqrt( after '*'");
      parse_sqrt();
      irrational = true;
    }
    return coef;
  }

  Rational parse_rational() {
    Integer num = parse_integer();
    Integer den(1);
    if (peek() == '/') {
      ++pos_;
      den = parse_integer();
      if (den == 0) fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  const FieldDescriptor& field_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadFieldElem parse_element(std::string_view text, const FieldDescriptor& field) {
  return ElementParser(text, field).parse();
}

std::string to_string(const QuadFieldElem& x) {
  if (sgn(x.b()) == 0) return x.a().get_str();
  std::string root = "sqrt(" + std::to_string(x.field().d()) + ")";
  std::string bpart = abs(x.b()) == 1 ? root : Rational(abs(x.b())).get_str() + "*" + root;
  if (sgn(x.a()) == 0) return (sgn(x.b()) < 0 ? "-" : "") + bpart;
  return x.a().get_str() + (sgn(x.b()) < 0 ? "-" : "+") + bpart;
}

}  // namespace lorentzkit
