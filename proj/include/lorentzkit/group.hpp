#ifndef LORENTZKIT_GROUP_HPP
#define LORENTZKIT_GROUP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorentzkit/matrix.hpp"
#include "lorentzkit/quadform.hpp"

namespace lorentzkit {

/// Position (row, column) of an entry.
using EntryIndex = std::pair<std::size_t, std::size_t>;

/// First entry (row-major) where m^T F m differs from F, if any.
std::optional<EntryIndex> first_orthogonality_violation(const QuadraticForm& f, const Matrix& m);

/// An element of PO_f(K): a matrix with M^T F M = F, taken up to sign.
///
/// The stored representative is canonical. When f is Lorentzian at the
/// identity embedding the representative preserves the time orientation
/// fixed by f.timelike(), so reflections keep det = -1 in every dimension.
/// Otherwise the first nonzero entry (row-major) is made positive.
class GroupElement {
 public:
  /// Throws DimMismatch, FieldMismatch or NotFOrthogonal.
  static GroupElement from_matrix(const QuadraticForm& f, const Matrix& m);
  static GroupElement identity(const QuadraticForm& f);

  const Matrix& matrix() const noexcept { return matrix_; }
  const QuadraticForm& form() const noexcept { return form_; }

  QuadFieldElem determinant() const { return lorentzkit::determinant(matrix_); }
  QuadFieldElem trace() const;
  bool is_identity() const { return matrix_.is_identity(); }

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.form_ == y.form_ && x.matrix_ == y.matrix_;
  }

  friend GroupElement compose(const GroupElement& g, const GroupElement& h);
  friend GroupElement invert(const GroupElement& g);

 private:
  GroupElement(QuadraticForm f, Matrix m);
  QuadraticForm form_;
  Matrix matrix_;
};

/// Throws FormMismatch.
GroupElement compose(const GroupElement& g, const GroupElement& h);
/// F^-1 g^T F.
GroupElement invert(const GroupElement& g);

/// Canonical sign representative of +-m in PO_f (see GroupElement).
Matrix normalize_sign(const QuadraticForm& f, Matrix m);

/// Labelled, nonempty list of elements over one ambient form.
class GeneratorSet {
 public:
  /// Throws EmptyGeneratorSet, InvalidArgument (length mismatch) or
  /// FormMismatch.
  GeneratorSet(std::vector<GroupElement> elements, std::vector<std::string> labels);

  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const QuadraticForm& form() const { return elements_.front().form(); }

 private:
  std::vector<GroupElement> elements_;
  std::vector<std::string> labels_;
};

}  // namespace lorentzkit

#endif  // LORENTZKIT_GROUP_HPP
