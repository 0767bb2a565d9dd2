#include "lorentzkit/json_io.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

#include "lorentzkit/decimal.hpp"

namespace lorentzkit::io {

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw InputError(ErrorCode::ParseError, pointer, what);
}

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

}  // namespace

const json& require_key(const json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) schema_error(pointer.empty() ? "/" : pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(child(pointer, key), "missing required field '" + key + "'");
  return *it;
}

FieldDescriptor parse_field(const json& j, const std::string& pointer) {
  if (!j.is_object()) schema_error(pointer, "field must be an object like {\"d\": 2}");
  auto it = j.find("d");
  if (it == j.end() || it->is_null()) return FieldDescriptor::rationals();
  if (!it->is_number_integer()) schema_error(child(pointer, "d"), "d must be an integer");
  return blame(child(pointer, "d"), [&] { return FieldDescriptor::quadratic(it->get<std::int64_t>()); });
}

QuadFieldElem parse_element(const json& j, const FieldDescriptor& field, const std::string& pointer) {
  if (j.is_number_integer()) return QuadFieldElem(field, Rational(Integer(j.dump())));
  if (!j.is_string()) schema_error(pointer, "element must be a string such as \"1/2+3*sqrt(2)\"");
  return blame(pointer, [&] { return lorentzkit::parse_element(j.get<std::string>(), field); });
}

Vector parse_vector(const json& j, const FieldDescriptor& field, const std::string& pointer) {
  if (!j.is_array() || j.empty()) schema_error(pointer, "expected a nonempty array of elements");
  Vector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_element(j[i], field, child(pointer, i)));
  return v;
}

Matrix parse_matrix(const json& j, const FieldDescriptor& field, std::size_t dim,
                    const std::string& pointer) {
  if (!j.is_array() || j.size() != dim)
    schema_error(pointer, "expected " + std::to_string(dim) + " rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row_ptr = child(pointer, i);
    if (!j[i].is_array() || j[i].size() != dim)
      schema_error(row_ptr, "expected a row of " + std::to_string(dim) + " elements");
    rows.push_back(parse_vector(j[i], field, row_ptr));
  }
  return Matrix(field, rows);
}

QuadraticForm parse_form(const json& j, const std::string& pointer) {
  if (!j.is_object()) schema_error(pointer, "form must be an object");
  const FieldDescriptor field =
      j.contains("field") ? parse_field(j["field"], child(pointer, "field")) : FieldDescriptor{};

  if (j.contains("diag")) {
    const Vector coeffs = parse_vector(j["diag"], field, child(pointer, "diag"));
    if (j.contains("dim") && j["dim"] != coeffs.size())
      schema_error(child(pointer, "dim"), "dim disagrees with the diagonal length");
    return blame(child(pointer, "diag"), [&] { return form_from_diagonal(field, coeffs); });
  }

  const json& gram = require_key(j, "gram", pointer);
  if (!gram.is_array()) schema_error(child(pointer, "gram"), "gram must be an array of rows");
  std::size_t dim = gram.size();
  if (j.contains("dim")) {
    if (!j["dim"].is_number_unsigned()) schema_error(child(pointer, "dim"), "dim must be a positive integer");
    dim = j["dim"].get<std::size_t>();
  }
  const Matrix m = parse_matrix(gram, field, dim, child(pointer, "gram"));
  return blame(child(pointer, "gram"), [&] { return QuadraticForm::from_gram(m); });
}

Embedding parse_embedding(const json& j, const std::string& pointer) {
  if (j == "IDENTITY") return Embedding::Identity;
  if (j == "CONJUGATE") return Embedding::Conjugate;
  schema_error(pointer, "embedding must be \"IDENTITY\" or \"CONJUGATE\"");
}

GeneratorSet parse_generators(const json& j, const QuadraticForm& f, const std::string& pointer) {
  if (!j.is_array() || j.empty())
    throw InputError(ErrorCode::EmptyGeneratorSet, pointer, "expected a nonempty array of generators");
  std::vector<GroupElement> elements;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string gp = child(pointer, k);
    const json& g = j[k];
    std::string label = "g" + std::to_string(k + 1);
    if (g.is_object() && g.contains("label")) {
      if (!g["label"].is_string()) schema_error(child(gp, "label"), "label must be a string");
      label = g["label"].get<std::string>();
    }
    const Matrix m = parse_matrix(require_key(g, "matrix", gp), f.field(), f.dim(), child(gp, "matrix"));
    elements.push_back(blame(child(gp, "matrix"), [&] { return GroupElement::from_matrix(f, m); }));
    labels.push_back(std::move(label));
  }
  return GeneratorSet(std::move(elements), std::move(labels));
}

// ---------------------------------------------------------------------------

json to_json(const FieldDescriptor& field) {
  json j = json::object();
  j["d"] = field.is_quadratic() ? json(field.d()) : json(nullptr);
  return j;
}

json to_json(const QuadFieldElem& x) { return to_string(x); }

json to_json(const Vector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

json to_json(const Matrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

json to_json(const QuadraticForm& f) {
  return json{{"field", to_json(f.field())}, {"dim", f.dim()}, {"gram", to_json(f.gram())}};
}

json to_json(const Signature& s) {
  return json{{"positives", s.positives}, {"negatives", s.negatives}, {"zeros", s.zeros}};
}

json to_json(const AdmissibilityCertificate& c) {
  json profile = json::object();
  for (const auto& [e, s] : c.signature_profile) profile[std::string(embedding_name(e))] = to_json(s);
  return json{{"verdict", verdict_name(c.verdict)},
              {"signature_profile", profile},
              {"failing_embedding",
               c.failing_embedding ? json(embedding_name(*c.failing_embedding)) : json(nullptr)}};
}

json to_json(const SimilarityCertificate& c) {
  return json{
      {"verdict", similarity_verdict_name(c.verdict)},
      {"witness", obstruction_name(c.witness)},
      {"detail", c.detail},
      {"discriminant_ratio", c.discriminant_ratio ? to_json(*c.discriminant_ratio) : json(nullptr)},
      {"embedding", c.embedding ? json(embedding_name(*c.embedding)) : json(nullptr)}};
}

json to_json(const GpsCertificate& c) {
  return json{{"verdict", c.incompatible ? "GPS_INCOMPATIBLE" : "INCONCLUSIVE"},
              {"similarity", to_json(c.similarity)},
              {"statement", c.statement}};
}

json to_json(const QACertificate& c) {
  json failing = nullptr;
  if (c.failing_generator) {
    failing = json{{"label", *c.failing_generator}, {"entry", nullptr}};
    if (c.failing_entry) failing["entry"] = json::array({c.failing_entry->first, c.failing_entry->second});
  }
  return json{{"verdict", verdict_name(c.verdict)},
              {"admissibility", to_json(c.admissibility)},
              {"failing_generator", failing}};
}

json to_json(const IntegralityReport& r) {
  return json{{"common_denominator", r.common_denominator.get_str()},
              {"is_integral", r.is_integral},
              {"ring_basis", r.ring_basis}};
}

json to_json(const TraceProbeResult& r) {
  return json{{"verdict", trace_verdict_name(r.verdict)},
              {"traces", to_json(r.traces)},
              {"words_enumerated", r.words_enumerated},
              {"first_irrational_length",
               r.first_irrational_length ? json(*r.first_irrational_length) : json(nullptr)}};
}

json to_json(const GeneratorSet& g) {
  json gens = json::array();
  for (std::size_t k = 0; k < g.size(); ++k)
    gens.push_back(json{{"label", g.labels()[k]}, {"matrix", to_json(g.elements()[k].matrix())}});
  return json{{"form", to_json(g.form())}, {"generators", gens}};
}

json to_json(const CertifiedDistance& d) {
  const DecimalInterval iv = to_decimal(d.distance, decimal_digits_for(d.precision_bits));
  return json{{"cosh_sq", to_json(d.cosh_sq)},
              {"distance", json{{"lo", iv.lo}, {"hi", iv.hi}}},
              {"precision_bits", d.precision_bits}};
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace lorentzkit::io
