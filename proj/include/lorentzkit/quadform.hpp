#ifndef LORENTZKIT_QUADFORM_HPP
#define LORENTZKIT_QUADFORM_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lorentzkit/matrix.hpp"
#include "lorentzkit/numberfield.hpp"

namespace lorentzkit {

struct Signature {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;

  Signature swapped() const { return Signature{negatives, positives, zeros}; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Result of congruence diagonalization: transform^T * A * transform is
/// diagonal with the given entries.
struct CongruenceDiagonalization {
  std::vector<QuadFieldElem> diagonal;
  Matrix transform;
};

/// Exact symmetric elimination. When every remaining diagonal entry is zero
/// but some off-diagonal a_ij is not, basis vector e_i is replaced by
/// e_i + e_j, which puts 2 a_ij on the diagonal.
CongruenceDiagonalization diagonalize(const Matrix& symmetric);

/// Nonsingular symmetric bilinear form on K^dim, dim >= 3. Immutable; copies
/// share storage.
class QuadraticForm {
 public:
  /// Validates symmetry (NotSymmetric), size (DimTooSmall) and
  /// nonsingularity (SingularForm).
  static QuadraticForm from_gram(const Matrix& gram);

  const FieldDescriptor& field() const noexcept { return data_->gram.field(); }
  std::size_t dim() const noexcept { return data_->gram.rows(); }
  const Matrix& gram() const noexcept { return data_->gram; }
  const Matrix& gram_inverse() const noexcept { return data_->gram_inverse; }
  const QuadFieldElem& determinant() const noexcept { return data_->determinant; }

  /// A vector with f(t) < 0 at the identity embedding, present when the
  /// form has signature (dim-1, 1) there. Orients the light cone.
  const std::optional<Vector>& timelike() const noexcept { return data_->timelike; }

  friend bool operator==(const QuadraticForm& x, const QuadraticForm& y) {
    return x.data_ == y.data_ || x.data_->gram == y.data_->gram;
  }

 private:
  struct Data {
    Matrix gram;
    Matrix gram_inverse;
    QuadFieldElem determinant;
    std::optional<Vector> timelike;
  };
  explicit QuadraticForm(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

enum class Verdict { Certified, Refuted, Inconclusive };
std::string_view verdict_name(Verdict v);

struct AdmissibilityCertificate {
  Verdict verdict = Verdict::Refuted;
  std::map<Embedding, Signature> signature_profile;
  std::optional<Embedding> failing_embedding;
};

/// Class of a nonzero element in K* / (K*)^2.
class SquareClass {
 public:
  /// Throws DivisionByZero for zero.
  explicit SquareClass(QuadFieldElem representative);
  const QuadFieldElem& representative() const noexcept { return rep_; }

 private:
  QuadFieldElem rep_;
};

/// Diagonal form; throws ZeroCoefficient or DimTooSmall.
QuadraticForm form_from_diagonal(const FieldDescriptor& field,
                                 const std::vector<QuadFieldElem>& coeffs);

/// x^T gram x. Throws DimMismatch.
QuadFieldElem evaluate(const QuadraticForm& f, const Vector& x);

/// Entrywise Galois conjugate of the Gram matrix; NoConjugateForQ over Q.
QuadraticForm conjugate_form(const QuadraticForm& f);

/// P^T F P; P must be invertible.
QuadraticForm congruent_form(const QuadraticForm& f, const Matrix& p);
/// lambda * F, lambda != 0.
QuadraticForm scaled_form(const QuadraticForm& f, const QuadFieldElem& lambda);

Signature signature_at(const QuadraticForm& f, Embedding e);

AdmissibilityCertificate is_admissible_pair(const QuadraticForm& f);

SquareClass discriminant_class(const QuadraticForm& f);

/// Throws FieldMismatch.
bool square_class_equal(const SquareClass& c1, const SquareClass& c2);

enum class SimilarityVerdict { NonSimilar, Inconclusive };
enum class Obstruction { None, Dimension, Signature, Discriminant };

std::string_view similarity_verdict_name(SimilarityVerdict v);
std::string_view obstruction_name(Obstruction o);

struct SimilarityCertificate {
  SimilarityVerdict verdict = SimilarityVerdict::Inconclusive;
  Obstruction witness = Obstruction::None;
  std::string detail;
  /// det(f2) / det(f1), set whenever the dimensions agree.
  std::optional<QuadFieldElem> discriminant_ratio;
  /// For a signature witness: an embedding whose signatures are neither
  /// equal nor swapped.
  std::optional<Embedding> embedding;
};

/// Sound but incomplete test of "f2 is similar to lambda * f1 for some
/// lambda in K*". Never claims similarity.
SimilarityCertificate similarity_obstruction(const QuadraticForm& f1, const QuadraticForm& f2);

/// Embeddings of the field: {Identity} for Q, both for Q(sqrt(d)).
std::vector<Embedding> embeddings_of(const FieldDescriptor& field);

}  // namespace lorentzkit

#endif  // LORENTZKIT_QUADFORM_HPP
