#ifndef LORENTZKIT_JSON_IO_HPP
#define LORENTZKIT_JSON_IO_HPP

// JSON schemas shared by the CLI and anything driving it from scripts.
//
//   field:      {"d": 2} | {"d": null} | {}            (absent means Q)
//   element:    "p/q" | "p/q+r/s*sqrt(d)"              (integers also accepted)
//   form:       {"field": F, "dim": 4, "gram": [[e, ...], ...]}
//               {"field": F, "diag": [e, ...]}
//   generator:  {"label": "g1", "matrix": [[e, ...], ...]}
//
// Parse failures raise InputError carrying a JSON pointer to the first
// offending field.

#include <string>

#include "json.hpp"

#include "lorentzkit/lattice.hpp"
#include "lorentzkit/lorentz.hpp"

namespace lorentzkit::io {

using nlohmann::json;

class InputError : public Error {
 public:
  InputError(ErrorCode code, std::string pointer, const std::string& message)
      : Error(code, message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// Runs fn, converting library errors into InputError at `pointer`.
template <class Fn>
auto blame(const std::string& pointer, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.code(), pointer, e.what());
  }
}

const json& require_key(const json& obj, const std::string& key, const std::string& pointer);

FieldDescriptor parse_field(const json& j, const std::string& pointer);
QuadFieldElem parse_element(const json& j, const FieldDescriptor& field, const std::string& pointer);
Vector parse_vector(const json& j, const FieldDescriptor& field, const std::string& pointer);
Matrix parse_matrix(const json& j, const FieldDescriptor& field, std::size_t dim,
                    const std::string& pointer);
QuadraticForm parse_form(const json& j, const std::string& pointer);
Embedding parse_embedding(const json& j, const std::string& pointer);
/// Array of {"label", "matrix"} objects; labels default to g1, g2, ...
GeneratorSet parse_generators(const json& j, const QuadraticForm& f, const std::string& pointer);

json to_json(const FieldDescriptor& field);
json to_json(const QuadFieldElem& x);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const QuadraticForm& f);
json to_json(const Signature& s);
json to_json(const AdmissibilityCertificate& c);
json to_json(const SimilarityCertificate& c);
json to_json(const GpsCertificate& c);
json to_json(const QACertificate& c);
json to_json(const IntegralityReport& r);
json to_json(const TraceProbeResult& r);
json to_json(const GeneratorSet& g);
/// {"cosh_sq", "distance": {"lo", "hi"}, "precision_bits"} with decimals
/// rounded outward to decimal_digits_for(precision_bits) digits.
json to_json(const CertifiedDistance& d);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace lorentzkit::io

#endif  // LORENTZKIT_JSON_IO_HPP
