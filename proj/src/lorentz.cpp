#include "lorentzkit/lorentz.hpp"

#include <gmp.h>
#include <mpfr.h>

namespace lorentzkit {

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;

  mpfr_ptr get() { return v_; }

  Rational to_rational() const {
    Integer mantissa;
    const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), v_);
    Rational r(mantissa);
    if (e >= 0)
      mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
      mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
  }

 private:
  mpfr_t v_;
};

// arccosh(sqrt(max(c, 1))) rounded in one direction; every step is monotone
// increasing, so rounding each step the same way bounds the exact value.
Rational directed_arccosh_sqrt(const Rational& c, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  MpfrValue x(prec);
  mpfr_set_q(x.get(), c.get_mpq_t(), rnd);
  if (mpfr_cmp_ui(x.get(), 1) < 0) mpfr_set_ui(x.get(), 1, rnd);
  mpfr_sqrt(x.get(), x.get(), rnd);
  if (mpfr_cmp_ui(x.get(), 1) < 0) mpfr_set_ui(x.get(), 1, rnd);
  mpfr_acosh(x.get(), x.get(), rnd);
  return x.to_rational();
}

void require_same_form(const QuadraticForm& a, const QuadraticForm& b) {
  if (!(a == b)) throw Error(ErrorCode::FormMismatch, "objects live over different forms");
}

void require_length(const QuadraticForm& f, const Vector& v) {
  if (v.size() != f.dim())
    throw Error(ErrorCode::DimMismatch, "vector length " + std::to_string(v.size()) +
                                            " does not match form dimension " +
                                            std::to_string(f.dim()));
}

}  // namespace

ModelPoint::ModelPoint(QuadraticForm form, Vector coords)
    : form_(std::move(form)), coords_(std::move(coords)) {
  require_length(form_, coords_);
  if (sign_at(evaluate(form_, coords_), Embedding::Identity) >= 0)
    throw Error(ErrorCode::PointNotInModel, "f(x) must be negative for a point of the model");
}

Hyperplane::Hyperplane(QuadraticForm form, Vector normal)
    : form_(std::move(form)), normal_(std::move(normal)) {
  require_length(form_, normal_);
  if (sign_at(evaluate(form_, normal_), Embedding::Identity) <= 0)
    throw Error(ErrorCode::NormalNotSpacelike, "hyperplane normal needs f(v) > 0");
}

std::string_view hyperplane_pair_name(HyperplanePair p) {
  switch (p) {
    case HyperplanePair::Intersecting: return "INTERSECTING";
    case HyperplanePair::Tangent: return "TANGENT";
    case HyperplanePair::Ultraparallel: return "ULTRAPARALLEL";
  }
  return "INTERSECTING";
}

QuadFieldElem lorentz_inner(const QuadraticForm& f, const Vector& x, const Vector& y) {
  require_length(f, x);
  require_length(f, y);
  return bilinear(f.gram(), x, y);
}

Interval arccosh_sqrt_enclosure(const QuadFieldElem& c, unsigned precision_bits) {
  const unsigned working = precision_bits + 32;
  const Interval ce = decimal_enclosure(c, working);
  if (ce.hi < 1)
    throw Error(ErrorCode::InvalidArgument, "cosh^2 below 1: " + to_string(c));
  const auto prec = static_cast<mpfr_prec_t>(working);
  return Interval{directed_arccosh_sqrt(ce.lo, prec, MPFR_RNDD),
                  directed_arccosh_sqrt(ce.hi, prec, MPFR_RNDU)};
}

CertifiedDistance point_distance(const ModelPoint& x, const ModelPoint& y,
                                 unsigned precision_bits) {
  require_same_form(x.form(), y.form());
  const QuadraticForm& f = x.form();
  const QuadFieldElem xy = lorentz_inner(f, x.coords(), y.coords());
  QuadFieldElem cosh_sq = xy * xy / (evaluate(f, x.coords()) * evaluate(f, y.coords()));
  Interval d = arccosh_sqrt_enclosure(cosh_sq, precision_bits);
  return CertifiedDistance{std::move(cosh_sq), std::move(d), precision_bits};
}

HyperplanePair classify_hyperplane_pair(const Hyperplane& h0, const Hyperplane& h1) {
  require_same_form(h0.form(), h1.form());
  const QuadraticForm& f = h0.form();
  const QuadFieldElem ip = lorentz_inner(f, h0.normal(), h1.normal());
  const QuadFieldElem disc = ip * ip - evaluate(f, h0.normal()) * evaluate(f, h1.normal());
  switch (sign_at(disc, Embedding::Identity)) {
    case -1: return HyperplanePair::Intersecting;
    case 0: return HyperplanePair::Tangent;
    default: return HyperplanePair::Ultraparallel;
  }
}

CertifiedDistance hyperplane_distance(const Hyperplane& h0, const Hyperplane& h1,
                                      unsigned precision_bits) {
  const HyperplanePair kind = classify_hyperplane_pair(h0, h1);
  if (kind != HyperplanePair::Ultraparallel)
    throw Error(ErrorCode::NotUltraparallel,
                "hyperplanes are " + std::string(hyperplane_pair_name(kind)) +
                    ", no common perpendicular");
  const QuadraticForm& f = h0.form();
  const QuadFieldElem ip = lorentz_inner(f, h0.normal(), h1.normal());
  QuadFieldElem cosh_sq = ip * ip / (evaluate(f, h0.normal()) * evaluate(f, h1.normal()));
  Interval d = arccosh_sqrt_enclosure(cosh_sq, precision_bits);
  return CertifiedDistance{std::move(cosh_sq), std::move(d), precision_bits};
}

GroupElement reflection_matrix(const Hyperplane& h) {
  const QuadraticForm& f = h.form();
  const Vector& v = h.normal();
  const std::size_t n = f.dim();
  const Vector fv = f.gram() * v;  // F symmetric, so v^T F = (F v)^T
  const QuadFieldElem two_over_norm = QuadFieldElem(f.field(), 2) / evaluate(f, v);
  Matrix r = Matrix::identity(f.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    const QuadFieldElem coef = two_over_norm * v[i];
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= coef * fv[j];
  }
  return GroupElement::from_matrix(f, r);
}

}  // namespace lorentzkit
