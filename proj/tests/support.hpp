#ifndef LORENTZKIT_TESTS_SUPPORT_HPP
#define LORENTZKIT_TESTS_SUPPORT_HPP

// Generators and independent oracles shared by the unit and acceptance
// suites. Nothing here calls into the code path it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lorentzkit/lattice.hpp"
#include "lorentzkit/lorentz.hpp"
#include "lorentzkit/numberfield.hpp"
#include "lorentzkit/quadform.hpp"

namespace lktest {

using namespace lorentzkit;

inline const FieldDescriptor kQ = FieldDescriptor::rationals();
inline const FieldDescriptor kQ2 = FieldDescriptor::quadratic(2);

inline QuadFieldElem q(const FieldDescriptor& f, long num, long den = 1) {
  return QuadFieldElem(f, Rational(num, den));
}

inline QuadFieldElem e(const FieldDescriptor& f, std::string_view text) {
  return parse_element(text, f);
}

inline Vector vec(const FieldDescriptor& f, std::initializer_list<std::string_view> items) {
  Vector v;
  for (auto s : items) v.push_back(e(f, s));
  return v;
}

inline Matrix mat(const FieldDescriptor& f,
                  std::initializer_list<std::initializer_list<std::string_view>> rows) {
  std::vector<Vector> r;
  for (auto row : rows) r.push_back(vec(f, row));
  return Matrix(f, r);
}

/// f_n = diag(-1, 1, ..., 1) over Q.
inline QuadraticForm standard_form(std::size_t n, const FieldDescriptor& f = kQ) {
  std::vector<QuadFieldElem> c(n + 1, q(f, 1));
  c[0] = q(f, -1);
  return form_from_diagonal(f, c);
}

/// diag(lead, 1, ..., 1) on K^{n+1}.
inline QuadraticForm lead_form(std::size_t n, const QuadFieldElem& lead) {
  std::vector<QuadFieldElem> c(n + 1, lead.one());
  c[0] = lead;
  return form_from_diagonal(lead.field(), c);
}

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline QuadFieldElem random_elem(Rng& rng, const FieldDescriptor& f, long max_num = 9,
                                 long max_den = 4) {
  Rational a = random_rational(rng, max_num, max_den);
  Rational b = f.is_quadratic() ? random_rational(rng, max_num, max_den) : Rational(0);
  return QuadFieldElem(f, a, b);
}

inline QuadFieldElem random_nonzero(Rng& rng, const FieldDescriptor& f, long max_num = 9,
                                    long max_den = 4) {
  for (;;) {
    auto x = random_elem(rng, f, max_num, max_den);
    if (!x.is_zero()) return x;
  }
}

/// Leibniz expansion; independent of the elimination used by determinant().
inline QuadFieldElem leibniz_determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  QuadFieldElem total(m.field(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    QuadFieldElem term(m.field(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Matrix random_matrix(Rng& rng, const FieldDescriptor& f, std::size_t n, long max_num = 3,
                            long max_den = 2) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_elem(rng, f, max_num, max_den);
  return m;
}

inline Matrix random_invertible(Rng& rng, const FieldDescriptor& f, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, f, n);
    if (!leibniz_determinant(m).is_zero()) return m;
  }
}

inline Vector random_vector(Rng& rng, const FieldDescriptor& f, std::size_t n, long max_num = 5,
                            long max_den = 3) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_elem(rng, f, max_num, max_den));
  return v;
}

/// Rejection sampling for f(v) > 0 at the identity embedding.
inline Vector random_spacelike(Rng& rng, const QuadraticForm& f) {
  for (;;) {
    Vector v = random_vector(rng, f.field(), f.dim());
    if (sign_at(evaluate(f, v), Embedding::Identity) > 0) return v;
  }
}

inline GroupElement random_reflection(Rng& rng, const QuadraticForm& f) {
  return reflection_matrix(Hyperplane(f, random_spacelike(rng, f)));
}

struct InbreedingInstance {
  GeneratorSet gamma1;
  GroupElement i0;
  std::vector<GroupElement> sides;
};

/// Gamma_1 of 1-4 generators, each a word of 1-3 random reflections; a
/// random I_0 and 1-3 random side reflections.
inline InbreedingInstance random_inbreeding(Rng& rng, const QuadraticForm& f) {
  std::uniform_int_distribution<int> count(1, 4), word(1, 3), sides(1, 3);
  std::vector<GroupElement> gens;
  std::vector<std::string> labels;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    GroupElement g = random_reflection(rng, f);
    for (int len = word(rng); len > 1; --len) g = compose(g, random_reflection(rng, f));
    gens.push_back(g);
    labels.push_back("g" + std::to_string(i + 1));
  }
  std::vector<GroupElement> side;
  for (int j = sides(rng); j > 0; --j) side.push_back(random_reflection(rng, f));
  return {GeneratorSet(std::move(gens), std::move(labels)), random_reflection(rng, f), std::move(side)};
}

/// Real value of x at the embedding via a 128-bit enclosure midpoint.
inline double to_double(const QuadFieldElem& x, Embedding emb) {
  const QuadFieldElem y = emb == Embedding::Conjugate ? galois_conjugate(x) : x;
  return decimal_enclosure(y, 128).midpoint().get_d();
}

/// Floating eigenvalue-sign oracle. Empty when some eigenvalue is within
/// `separation` of zero.
inline std::optional<Signature> eigen_signature(const Matrix& gram, Embedding emb,
                                                double separation = 1e-9) {
  const auto n = static_cast<Eigen::Index>(gram.rows());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = to_double(gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), emb);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  Signature s;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) < separation) return std::nullopt;
    (lambda > 0 ? s.positives : s.negatives) += 1;
  }
  return s;
}

/// Brute-force square root search: p = u/w, q = v/w with |u|,|v|,w <= bound.
/// Uses exact integer arithmetic; the element must have small parts.
inline bool brute_force_has_square_root(const QuadFieldElem& x, long bound) {
  // (u + v sqrt(d))^2 / w^2 = a + b sqrt(d)
  //   <=>  (u^2 + d v^2) * a_den == a_num * w^2  and  2uv * b_den == b_num * w^2
  const long d = x.field().is_quadratic() ? static_cast<long>(x.field().d()) : 0;
  const long a_num = x.a().get_num().get_si(), a_den = x.a().get_den().get_si();
  const long b_num = x.b().get_num().get_si(), b_den = x.b().get_den().get_si();
  const long v_bound = d == 0 ? 0 : bound;
  for (long w = 1; w <= bound; ++w) {
    const long w2 = w * w;
    for (long u = -bound; u <= bound; ++u)
      for (long v = -v_bound; v <= v_bound; ++v) {
        if ((u * u + d * v * v) * a_den != a_num * w2) continue;
        if (2 * u * v * b_den != b_num * w2) continue;
        return true;
      }
  }
  return false;
}

}  // namespace lktest

#endif  // LORENTZKIT_TESTS_SUPPORT_HPP
