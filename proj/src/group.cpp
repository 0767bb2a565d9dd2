#include "lorentzkit/group.hpp"

namespace lorentzkit {

std::optional<EntryIndex> first_orthogonality_violation(const QuadraticForm& f, const Matrix& m) {
  const Matrix lhs = m.transpose() * f.gram() * m;
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j)
      if (!(lhs(i, j) == f.gram()(i, j))) return EntryIndex{i, j};
  return std::nullopt;
}

Matrix normalize_sign(const QuadraticForm& f, Matrix m) {
  bool flip = false;
  if (const auto& t = f.timelike()) {
    // Timelike vectors are never orthogonal, so (t, M t) != 0 and M keeps
    // the cone component of t exactly when (t, M t) < 0.
    flip = sign_at(bilinear(f.gram(), *t, m * *t), Embedding::Identity) > 0;
  } else {
    for (std::size_t i = 0; i < m.rows() && !flip; ++i) {
      std::size_t j = 0;
      while (j < m.cols() && m(i, j).is_zero()) ++j;
      if (j == m.cols()) continue;
      flip = sign_at(m(i, j), Embedding::Identity) < 0;
      break;
    }
  }
  return flip ? -m : m;
}

GroupElement::GroupElement(QuadraticForm f, Matrix m)
    : form_(std::move(f)), matrix_(normalize_sign(form_, std::move(m))) {}

GroupElement GroupElement::from_matrix(const QuadraticForm& f, const Matrix& m) {
  if (m.rows() != f.dim() || m.cols() != f.dim())
    throw Error(ErrorCode::DimMismatch, "matrix is " + std::to_string(m.rows()) + "x" +
                                            std::to_string(m.cols()) + ", form dimension is " +
                                            std::to_string(f.dim()));
  if (!(m.field() == f.field()))
    throw Error(ErrorCode::FieldMismatch, "matrix over " + m.field().to_string() +
                                              ", form over " + f.field().to_string());
  if (auto bad = first_orthogonality_violation(f, m))
    throw Error(ErrorCode::NotFOrthogonal,
                "M^T F M differs from F at entry (" + std::to_string(bad->first) + ", " +
                    std::to_string(bad->second) + ")");
  return GroupElement(f, m);
}

GroupElement GroupElement::identity(const QuadraticForm& f) {
  return GroupElement(f, Matrix::identity(f.field(), f.dim()));
}

QuadFieldElem GroupElement::trace() const {
  QuadFieldElem t(matrix_.field(), 0);
  for (std::size_t i = 0; i < matrix_.rows(); ++i) t += matrix_(i, i);
  return t;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (!(g.form_ == h.form_))
    throw Error(ErrorCode::FormMismatch, "composing elements of different groups");
  return GroupElement(g.form_, g.matrix_ * h.matrix_);
}

GroupElement invert(const GroupElement& g) {
  const QuadraticForm& f = g.form_;
  return GroupElement(f, f.gram_inverse() * g.matrix_.transpose() * f.gram());
}

GeneratorSet::GeneratorSet(std::vector<GroupElement> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
  if (elements_.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "generator set is empty");
  if (elements_.size() != labels_.size())
    throw Error(ErrorCode::InvalidArgument, "generator and label counts differ");
  for (const auto& g : elements_)
    if (!(g.form() == elements_.front().form()))
      throw Error(ErrorCode::FormMismatch, "generators do not share one ambient form");
}

}  // namespace lorentzkit
