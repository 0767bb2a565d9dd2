#ifndef LORENTZKIT_LORENTZ_HPP
#define LORENTZKIT_LORENTZ_HPP

// Projective Lorentz model over a form f of signature (n,1): points are
// K-vectors with f(x) < 0 up to scale, hyperplanes are orthogonal
// complements of K-vectors v with f(v) > 0.

#include "lorentzkit/group.hpp"
#include "lorentzkit/quadform.hpp"

namespace lorentzkit {

inline constexpr unsigned kDefaultPrecisionBits = 128;

class ModelPoint {
 public:
  /// Throws DimMismatch or PointNotInModel (f(x) >= 0).
  ModelPoint(QuadraticForm form, Vector coords);

  const QuadraticForm& form() const noexcept { return form_; }
  const Vector& coords() const noexcept { return coords_; }

 private:
  QuadraticForm form_;
  Vector coords_;
};

class Hyperplane {
 public:
  /// Throws DimMismatch or NormalNotSpacelike (f(v) <= 0).
  Hyperplane(QuadraticForm form, Vector normal);

  const QuadraticForm& form() const noexcept { return form_; }
  const Vector& normal() const noexcept { return normal_; }

 private:
  QuadraticForm form_;
  Vector normal_;
};

/// Exact cosh^2 of a hyperbolic distance plus a certified enclosure of the
/// distance itself.
struct CertifiedDistance {
  QuadFieldElem cosh_sq;
  Interval distance;
  unsigned precision_bits = kDefaultPrecisionBits;
};

enum class HyperplanePair { Intersecting, Tangent, Ultraparallel };
std::string_view hyperplane_pair_name(HyperplanePair p);

/// x^T F y. Throws DimMismatch.
QuadFieldElem lorentz_inner(const QuadraticForm& f, const Vector& x, const Vector& y);

/// cosh^2 d = (x,y)^2 / (f(x) f(y)). Throws FormMismatch.
CertifiedDistance point_distance(const ModelPoint& x, const ModelPoint& y,
                                 unsigned precision_bits = kDefaultPrecisionBits);

/// Sign of D = (v0,v1)^2 - f(v0) f(v1): negative intersecting, zero tangent,
/// positive ultraparallel. Throws FormMismatch.
HyperplanePair classify_hyperplane_pair(const Hyperplane& h0, const Hyperplane& h1);

/// Length of the common perpendicular, cosh^2 = (v0,v1)^2 / (f(v0) f(v1)).
/// Throws NotUltraparallel (tangent pairs included) or FormMismatch.
CertifiedDistance hyperplane_distance(const Hyperplane& h0, const Hyperplane& h1,
                                      unsigned precision_bits = kDefaultPrecisionBits);

/// Enclosure of arccosh(sqrt(c)) for c >= 1 at the identity embedding.
/// Endpoints are rounded outward; width is about 2^-precision_bits unless c
/// is very close to 1, where arccosh loses conditioning.
Interval arccosh_sqrt_enclosure(const QuadFieldElem& c, unsigned precision_bits);

/// R = I - 2 v (v^T F) / f(v): fixes the hyperplane, negates v.
GroupElement reflection_matrix(const Hyperplane& h);

}  // namespace lorentzkit

#endif  // LORENTZKIT_LORENTZ_HPP
