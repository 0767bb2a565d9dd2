#ifndef LORENTZKIT_LATTICE_HPP
#define LORENTZKIT_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lorentzkit/group.hpp"
#include "lorentzkit/quadform.hpp"

namespace lorentzkit {

/// Selects the OpenMP kernel or the single-threaded reference. Both give
/// identical results.
enum class Execution { Serial, Parallel };

inline constexpr std::size_t kDefaultWordCap = 100000;

struct QACertificate {
  Verdict verdict = Verdict::Refuted;
  AdmissibilityCertificate admissibility;
  std::optional<std::string> failing_generator;
  /// Entry of M^T F M - F that is nonzero for the failing generator.
  std::optional<EntryIndex> failing_entry;
};

struct IntegralityReport {
  Integer common_denominator{1};
  bool is_integral = true;
  /// "{1}", "{1, sqrt(d)}" or "{1, (1+sqrt(d))/2}".
  std::string ring_basis;
};

enum class TraceVerdict { GeneratesK, ProperSubfieldSoFar };
std::string_view trace_verdict_name(TraceVerdict v);

struct TraceProbeResult {
  /// Distinct values of +-trace in word order (length, then label order).
  std::vector<QuadFieldElem> traces;
  TraceVerdict verdict = TraceVerdict::ProperSubfieldSoFar;
  std::size_t words_enumerated = 0;
  /// Shortest word length with an irrational trace.
  std::optional<std::size_t> first_irrational_length;
};

struct GpsCertificate {
  SimilarityCertificate similarity;
  /// True when the forms provably cannot both embed in one PO_{f'}(K).
  bool incompatible = false;
  std::string statement;
};

/// True when g is a nontrivial involution with det -1.
bool is_reflection(const GroupElement& g);

/// Generators Gamma_1, I0^-1 Gamma_1 I0 and I_j^-1 I0 for each side
/// reflection I_j (1 to 3 of them). Labels of the conjugated copy read
/// "I0^-1*<g>*I0"; side pairings read "I<j>^-1*I0".
/// Throws NotAReflection, InvalidSideCount or FormMismatch.
GeneratorSet assemble_inbred_generators(const GeneratorSet& gamma1, const GroupElement& i0,
                                        const std::vector<GroupElement>& side_reflections);

/// CERTIFIED iff (K, f) is admissible and every generator satisfies
/// M^T F M = F for this f. Entries lie in K by construction.
QACertificate certify_quasi_arithmetic(const QuadraticForm& f, const GeneratorSet& gens,
                                       Execution exec = Execution::Parallel);

/// Same check on raw labelled matrices that need not be f-orthogonal.
QACertificate certify_quasi_arithmetic(const QuadraticForm& f, const std::vector<Matrix>& matrices,
                                       const std::vector<std::string>& labels,
                                       Execution exec = Execution::Parallel);

/// Integral-basis coordinates of every entry and their least common
/// denominator. Descriptive only: a denominator > 1 does not refute
/// arithmeticity of the generated group.
IntegralityReport integrality_report(const GeneratorSet& gens);

/// Coordinates of x in the ring-of-integers basis of its field.
std::vector<Rational> integral_basis_coordinates(const QuadFieldElem& x);

/// Traces of all freely reduced words up to max_word_length (the empty word
/// included). Throws InvalidArgument for max_word_length == 0 and
/// WordBudgetExceeded when more than word_cap words would be enumerated.
TraceProbeResult trace_field_probe(const GeneratorSet& gens, std::size_t max_word_length,
                                   std::size_t word_cap = kDefaultWordCap,
                                   Execution exec = Execution::Parallel);

/// Throws FieldMismatch.
GpsCertificate gps_incompatibility(const QuadraticForm& f1, const QuadraticForm& f2);

}  // namespace lorentzkit

#endif  // LORENTZKIT_LATTICE_HPP
