#include "lorentzkit/quadform.hpp"

#include <utility>

namespace lorentzkit {

namespace {

void swap_rows_cols(Matrix& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
}

void swap_cols(Matrix& p, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < p.rows(); ++r) std::swap(p(r, i), p(r, j));
}

// Column/row operation e_dst <- e_dst + factor * e_src applied by congruence.
void add_basis_multiple(Matrix& a, Matrix& p, std::size_t dst, std::size_t src,
                        const QuadFieldElem& factor) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) a(dst, c) += factor * a(src, c);
  for (std::size_t r = 0; r < n; ++r) a(r, dst) += factor * a(r, src);
  for (std::size_t r = 0; r < n; ++r) p(r, dst) += factor * p(r, src);
}

Signature count_signs(const std::vector<QuadFieldElem>& diagonal) {
  Signature s;
  for (const auto& x : diagonal) {
    switch (sign_at(x, Embedding::Identity)) {
      case 1: ++s.positives; break;
      case -1: ++s.negatives; break;
      default: ++s.zeros; break;
    }
  }
  return s;
}

}  // namespace

CongruenceDiagonalization diagonalize(const Matrix& symmetric) {
  if (!symmetric.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "diagonalize needs a symmetric matrix");
  const std::size_t n = symmetric.rows();
  const FieldDescriptor& field = symmetric.field();
  Matrix a = symmetric;
  Matrix p = Matrix::identity(field, n);
  const QuadFieldElem one(field, 1);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, pivot).is_zero()) ++pivot;

    if (pivot == n) {
      // Zero diagonal on the trailing block; split a hyperbolic pair if any.
      std::optional<std::pair<std::size_t, std::size_t>> pair;
      for (std::size_t i = k; i < n && !pair; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            pair.emplace(i, j);
            break;
          }
      if (!pair) break;  // trailing block is identically zero
      add_basis_multiple(a, p, pair->first, pair->second, one);
      pivot = pair->first;
    }

    if (pivot != k) {
      swap_rows_cols(a, pivot, k);
      swap_cols(p, pivot, k);
    }

    const QuadFieldElem inv = field_inv(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      add_basis_multiple(a, p, r, k, -(a(r, k) * inv));
    }
  }

  CongruenceDiagonalization out{{}, std::move(p)};
  out.diagonal.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.diagonal.push_back(a(k, k));
  return out;
}

QuadraticForm QuadraticForm::from_gram(const Matrix& gram) {
  if (!gram.is_square()) throw Error(ErrorCode::DimMismatch, "Gram matrix must be square");
  if (gram.rows() < 3)
    throw Error(ErrorCode::DimTooSmall,
                "form dimension must be at least 3, got " + std::to_string(gram.rows()));
  if (!gram.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");

  const auto diag = diagonalize(gram);
  const Signature sig = count_signs(diag.diagonal);
  if (sig.zeros != 0) throw Error(ErrorCode::SingularForm, "Gram matrix is singular");

  auto data = std::make_shared<Data>();
  data->gram = gram;
  data->gram_inverse = inverse(gram);
  data->determinant = lorentzkit::determinant(gram);
  if (sig.negatives == 1) {
    for (std::size_t k = 0; k < diag.diagonal.size(); ++k) {
      if (sign_at(diag.diagonal[k], Embedding::Identity) >= 0) continue;
      Vector t;
      for (std::size_t r = 0; r < gram.rows(); ++r) t.push_back(diag.transform(r, k));
      data->timelike = std::move(t);
    }
  }
  return QuadraticForm(std::move(data));
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "CERTIFIED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string_view similarity_verdict_name(SimilarityVerdict v) {
  return v == SimilarityVerdict::NonSimilar ? "NON_SIMILAR" : "INCONCLUSIVE";
}

std::string_view obstruction_name(Obstruction o) {
  switch (o) {
    case Obstruction::None: return "NONE";
    case Obstruction::Dimension: return "DIMENSION";
    case Obstruction::Signature: return "SIGNATURE";
    case Obstruction::Discriminant: return "DISCRIMINANT";
  }
  return "NONE";
}

SquareClass::SquareClass(QuadFieldElem representative) : rep_(std::move(representative)) {
  if (rep_.is_zero()) throw Error(ErrorCode::DivisionByZero, "square class of zero");
}

std::vector<Embedding> embeddings_of(const FieldDescriptor& field) {
  if (field.is_rational()) return {Embedding::Identity};
  return {Embedding::Identity, Embedding::Conjugate};
}

QuadraticForm form_from_diagonal(const FieldDescriptor& field,
                                 const std::vector<QuadFieldElem>& coeffs) {
  if (coeffs.size() < 3)
    throw Error(ErrorCode::DimTooSmall,
                "need at least 3 coefficients, got " + std::to_string(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i].is_zero())
      throw Error(ErrorCode::ZeroCoefficient, "coefficient " + std::to_string(i) + " is zero");
  return QuadraticForm::from_gram(Matrix::diagonal(field, coeffs));
}

QuadFieldElem evaluate(const QuadraticForm& f, const Vector& x) {
  if (x.size() != f.dim())
    throw Error(ErrorCode::DimMismatch, "vector length " + std::to_string(x.size()) +
                                            " does not match form dimension " +
                                            std::to_string(f.dim()));
  return bilinear(f.gram(), x, x);
}

QuadraticForm conjugate_form(const QuadraticForm& f) {
  if (f.field().is_rational())
    throw Error(ErrorCode::NoConjugateForQ, "the rational field has no nontrivial conjugate");
  return QuadraticForm::from_gram(f.gram().conjugate());
}

QuadraticForm congruent_form(const QuadraticForm& f, const Matrix& p) {
  return QuadraticForm::from_gram(p.transpose() * f.gram() * p);
}

QuadraticForm scaled_form(const QuadraticForm& f, const QuadFieldElem& lambda) {
  return QuadraticForm::from_gram(lambda * f.gram());
}

Signature signature_at(const QuadraticForm& f, Embedding e) {
  // sign_at(sigma(x), Identity) == sign_at(x, Conjugate), so conjugating the
  // Gram matrix moves the computation to the identity embedding.
  const bool conj = e == Embedding::Conjugate && f.field().is_quadratic();
  return count_signs(diagonalize(conj ? f.gram().conjugate() : f.gram()).diagonal);
}

AdmissibilityCertificate is_admissible_pair(const QuadraticForm& f) {
  AdmissibilityCertificate cert;
  const std::size_t n = f.dim() - 1;
  for (Embedding e : embeddings_of(f.field())) {
    const Signature s = signature_at(f, e);
    cert.signature_profile[e] = s;
    const Signature wanted = e == Embedding::Identity ? Signature{n, 1, 0} : Signature{n + 1, 0, 0};
    if (!(s == wanted) && !cert.failing_embedding) cert.failing_embedding = e;
  }
  cert.verdict = cert.failing_embedding ? Verdict::Refuted : Verdict::Certified;
  return cert;
}

SquareClass discriminant_class(const QuadraticForm& f) { return SquareClass(f.determinant()); }

bool square_class_equal(const SquareClass& c1, const SquareClass& c2) {
  if (!(c1.representative().field() == c2.representative().field()))
    throw Error(ErrorCode::FieldMismatch, "square classes over different fields");
  return is_square(c1.representative() / c2.representative()).has_value();
}

SimilarityCertificate similarity_obstruction(const QuadraticForm& f1, const QuadraticForm& f2) {
  if (!(f1.field() == f2.field()))
    throw Error(ErrorCode::FieldMismatch,
                "forms over " + f1.field().to_string() + " and " + f2.field().to_string());
  SimilarityCertificate cert;

  if (f1.dim() != f2.dim()) {
    cert.verdict = SimilarityVerdict::NonSimilar;
    cert.witness = Obstruction::Dimension;
    cert.detail = "dimensions differ: " + std::to_string(f1.dim()) + " vs " +
                  std::to_string(f2.dim());
    return cert;
  }

  cert.discriminant_ratio = f2.determinant() / f1.determinant();

  // Every sign pattern of lambda over the real embeddings is realised by
  // some lambda in K*, so each embedding constrains independently: the
  // signatures must agree (lambda > 0 there) or be swapped (lambda < 0).
  for (Embedding e : embeddings_of(f1.field())) {
    const Signature s1 = signature_at(f1, e);
    const Signature s2 = signature_at(f2, e);
    if (!(s2 == s1) && !(s2 == s1.swapped())) {
      cert.verdict = SimilarityVerdict::NonSimilar;
      cert.witness = Obstruction::Signature;
      cert.embedding = e;
      cert.detail = "signatures at the " + std::string(embedding_name(e)) +
                    " embedding are neither equal nor swapped";
      return cert;
    }
  }

  // det(lambda f1) = lambda^dim det(f1); for even dim lambda^dim is a square.
  if (f1.dim() % 2 == 0 &&
      !square_class_equal(discriminant_class(f1), discriminant_class(f2))) {
    cert.verdict = SimilarityVerdict::NonSimilar;
    cert.witness = Obstruction::Discriminant;
    cert.detail = "discriminant ratio " + to_string(*cert.discriminant_ratio) +
                  " is not a square in " + f1.field().to_string();
    return cert;
  }

  cert.detail = "no implemented obstruction applies";
  return cert;
}

}  // namespace lorentzkit
