#include "lorentzkit/lattice.hpp"

namespace lorentzkit {

bool is_reflection(const GroupElement& g) {
  if (g.is_identity()) return false;
  if (!compose(g, g).is_identity()) return false;
  const QuadFieldElem det = g.determinant();
  return det == -det.one();
}

GeneratorSet assemble_inbred_generators(const GeneratorSet& gamma1, const GroupElement& i0,
                                        const std::vector<GroupElement>& side_reflections) {
  if (side_reflections.empty() || side_reflections.size() > 3)
    throw Error(ErrorCode::InvalidSideCount,
                "expected 1 to 3 side reflections, got " + std::to_string(side_reflections.size()));
  const QuadraticForm& f = gamma1.form();
  if (!(i0.form() == f)) throw Error(ErrorCode::FormMismatch, "I0 is over a different form");
  if (!is_reflection(i0)) throw Error(ErrorCode::NotAReflection, "I0 is not a reflection");
  for (std::size_t j = 0; j < side_reflections.size(); ++j) {
    if (!(side_reflections[j].form() == f))
      throw Error(ErrorCode::FormMismatch, "I" + std::to_string(j + 1) + " is over a different form");
    if (!is_reflection(side_reflections[j]))
      throw Error(ErrorCode::NotAReflection, "I" + std::to_string(j + 1) + " is not a reflection");
  }

  std::vector<GroupElement> elements;
  std::vector<std::string> labels;
  const GroupElement i0_inv = invert(i0);
  for (std::size_t k = 0; k < gamma1.size(); ++k) {
    elements.push_back(gamma1.elements()[k]);
    labels.push_back(gamma1.labels()[k]);
  }
  for (std::size_t k = 0; k < gamma1.size(); ++k) {
    elements.push_back(compose(compose(i0_inv, gamma1.elements()[k]), i0));
    labels.push_back("I0^-1*" + gamma1.labels()[k] + "*I0");
  }
  for (std::size_t j = 0; j < side_reflections.size(); ++j) {
    elements.push_back(compose(invert(side_reflections[j]), i0));
    labels.push_back("I" + std::to_string(j + 1) + "^-1*I0");
  }
  return GeneratorSet(std::move(elements), std::move(labels));
}

QACertificate certify_quasi_arithmetic(const QuadraticForm& f, const std::vector<Matrix>& matrices,
                                       const std::vector<std::string>& labels, Execution exec) {
  if (matrices.size() != labels.size())
    throw Error(ErrorCode::InvalidArgument, "generator and label counts differ");
  QACertificate cert;
  cert.admissibility = is_admissible_pair(f);

  const auto count = static_cast<long>(matrices.size());
  std::vector<std::optional<EntryIndex>> violation(matrices.size());
  std::vector<char> wrong_shape(matrices.size(), 0);
  auto check = [&](long k) {
    const auto idx = static_cast<std::size_t>(k);
    const Matrix& m = matrices[idx];
    if (m.rows() != f.dim() || m.cols() != f.dim() || !(m.field() == f.field())) {
      wrong_shape[idx] = 1;
      return;
    }
    violation[idx] = first_orthogonality_violation(f, m);
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) check(k);
  } else {
    for (long k = 0; k < count; ++k) check(k);
  }

  for (std::size_t k = 0; k < matrices.size(); ++k) {
    if (wrong_shape[k] || violation[k]) {
      cert.failing_generator = labels[k];
      cert.failing_entry = violation[k];
      break;
    }
  }
  cert.verdict = cert.admissibility.verdict == Verdict::Certified && !cert.failing_generator
                     ? Verdict::Certified
                     : Verdict::Refuted;
  return cert;
}

QACertificate certify_quasi_arithmetic(const QuadraticForm& f, const GeneratorSet& gens,
                                       Execution exec) {
  std::vector<Matrix> matrices;
  matrices.reserve(gens.size());
  for (const auto& g : gens.elements()) matrices.push_back(g.matrix());
  return certify_quasi_arithmetic(f, matrices, gens.labels(), exec);
}

std::vector<Rational> integral_basis_coordinates(const QuadFieldElem& x) {
  const FieldDescriptor& f = x.field();
  if (f.is_rational()) return {x.a()};
  if (f.d() % 4 == 1) {
    // a + b sqrt(d) = (a - b) + 2b * (1 + sqrt(d))/2
    return {x.a() - x.b(), 2 * x.b()};
  }
  return {x.a(), x.b()};
}

IntegralityReport integrality_report(const GeneratorSet& gens) {
  IntegralityReport report;
  const FieldDescriptor& f = gens.form().field();
  if (f.is_rational()) {
    report.ring_basis = "{1}";
  } else {
    const std::string root = "sqrt(" + std::to_string(f.d()) + ")";
    report.ring_basis = f.d() % 4 == 1 ? "{1, (1+" + root + ")/2}" : "{1, " + root + "}";
  }
  for (const auto& g : gens.elements()) {
    const Matrix& m = g.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (const Rational& c : integral_basis_coordinates(m(i, j)))
          mpz_lcm(report.common_denominator.get_mpz_t(), report.common_denominator.get_mpz_t(),
                  c.get_den_mpz_t());
  }
  report.is_integral = report.common_denominator == 1;
  return report;
}

GpsCertificate gps_incompatibility(const QuadraticForm& f1, const QuadraticForm& f2) {
  GpsCertificate cert;
  cert.similarity = similarity_obstruction(f1, f2);
  cert.incompatible = cert.similarity.verdict == SimilarityVerdict::NonSimilar;
  if (cert.incompatible) {
    cert.statement =
        "the forms are not similar over " + f1.field().to_string() +
        " (" + std::string(obstruction_name(cert.similarity.witness)) +
        " witness), so no single admissible pair (K, f') has PO_{f'}(K) isomorphic to both "
        "PO_{f1}(K) and PO_{f2}(K); a lattice glued from the two arithmetic pieces is not "
        "quasi-arithmetic with respect to any such pair";
  } else {
    cert.statement =
        "no obstruction to similarity found; pieces of similar forms glue inside one "
        "PO_f(K) and the result can be quasi-arithmetic";
  }
  return cert;
}

}  // namespace lorentzkit
