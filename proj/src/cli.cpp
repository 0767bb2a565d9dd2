#include "lorentzkit/cli.hpp"

#include <array>
#include <functional>
#include <utility>

#include "lorentzkit/decimal.hpp"
#include "lorentzkit/json_io.hpp"

namespace lorentzkit::cli {

namespace {

using io::blame;
using io::json;
using io::require_key;

constexpr std::array<std::pair<Subcommand, std::string_view>, 13> kNames{{
    {Subcommand::CheckAdmissible, "check-admissible"},
    {Subcommand::Signature, "signature"},
    {Subcommand::ConjugateForm, "conjugate-form"},
    {Subcommand::Evaluate, "evaluate"},
    {Subcommand::ClassifyPair, "classify-pair"},
    {Subcommand::Distance, "distance"},
    {Subcommand::Reflect, "reflect"},
    {Subcommand::Assemble, "assemble"},
    {Subcommand::CertifyQa, "certify-qa"},
    {Subcommand::Integrality, "integrality"},
    {Subcommand::TraceProbe, "trace-probe"},
    {Subcommand::Nonsimilar, "nonsimilar"},
    {Subcommand::GpsCheck, "gps-check"},
}};

struct Outcome {
  int exit_code = kHolds;
  json body = json::object();
};

struct Context {
  const json& input;
  const CommandRequest& request;
};

QuadraticForm form_at(const json& in, const std::string& key) {
  return io::parse_form(require_key(in, key, ""), "/" + key);
}

Vector vector_at(const json& in, const std::string& key, const QuadraticForm& f) {
  Vector v = io::parse_vector(require_key(in, key, ""), f.field(), "/" + key);
  if (v.size() != f.dim())
    throw io::InputError(ErrorCode::DimMismatch, "/" + key,
                         "expected " + std::to_string(f.dim()) + " entries");
  return v;
}

Hyperplane hyperplane_at(const json& in, const std::string& key, const QuadraticForm& f) {
  Vector v = vector_at(in, key, f);
  return blame("/" + key, [&] { return Hyperplane(f, std::move(v)); });
}

// A reflection given as {"normal": [...]} or {"matrix": [[...]]}.
GroupElement reflection_at(const json& desc, const QuadraticForm& f, const std::string& pointer) {
  if (!desc.is_object())
    throw io::InputError(ErrorCode::ParseError, pointer, "expected {\"normal\": ...} or {\"matrix\": ...}");
  if (desc.contains("normal")) {
    Vector v = io::parse_vector(desc["normal"], f.field(), pointer + "/normal");
    if (v.size() != f.dim())
      throw io::InputError(ErrorCode::DimMismatch, pointer + "/normal",
                           "expected " + std::to_string(f.dim()) + " entries");
    return blame(pointer + "/normal", [&] { return reflection_matrix(Hyperplane(f, std::move(v))); });
  }
  const Matrix m = io::parse_matrix(require_key(desc, "matrix", pointer), f.field(), f.dim(),
                                    pointer + "/matrix");
  return blame(pointer + "/matrix", [&] { return GroupElement::from_matrix(f, m); });
}

Outcome check_admissible(const Context& c) {
  const auto cert = is_admissible_pair(form_at(c.input, "form"));
  return {cert.verdict == Verdict::Certified ? kHolds : kRefuted, io::to_json(cert)};
}

Outcome signature(const Context& c) {
  const QuadraticForm f = form_at(c.input, "form");
  std::vector<Embedding> which = embeddings_of(f.field());
  if (c.input.contains("embedding")) {
    const Embedding e = io::parse_embedding(c.input["embedding"], "/embedding");
    if (e == Embedding::Conjugate && f.field().is_rational())
      throw io::InputError(ErrorCode::InvalidEmbedding, "/embedding", "Q has no conjugate embedding");
    which = {e};
  }
  json sigs = json::object();
  for (Embedding e : which) sigs[std::string(embedding_name(e))] = io::to_json(signature_at(f, e));
  return {kHolds, json{{"signatures", sigs}}};
}

Outcome conjugate(const Context& c) {
  const QuadraticForm f = form_at(c.input, "form");
  return {kHolds, json{{"form", io::to_json(blame("/form", [&] { return conjugate_form(f); }))}}};
}

Outcome evaluate_cmd(const Context& c) {
  const QuadraticForm f = form_at(c.input, "form");
  const Vector x = vector_at(c.input, "vector", f);
  if (c.input.contains("other")) {
    const Vector y = vector_at(c.input, "other", f);
    return {kHolds, json{{"value", io::to_json(lorentz_inner(f, x, y))}}};
  }
  return {kHolds, json{{"value", io::to_json(evaluate(f, x))}}};
}

Outcome classify(const Context& c) {
  const QuadraticForm f = form_at(c.input, "form");
  const Hyperplane h0 = hyperplane_at(c.input, "v0", f);
  const Hyperplane h1 = hyperplane_at(c.input, "v1", f);
  return {kHolds,
          json{{"classification", hyperplane_pair_name(classify_hyperplane_pair(h0, h1))}}};
}

Outcome distance(const Context& c) {
  const QuadraticForm f = form_at(c.input, "form");
  const unsigned bits = c.request.precision_bits;
  if (c.input.contains("x")) {
    Vector x = vector_at(c.input, "x", f);
    Vector y = vector_at(c.input, "y", f);
    const ModelPoint px = blame("/x", [&] { return ModelPoint(f, std::move(x)); });
    const ModelPoint py = blame("/y", [&] { return ModelPoint(f, std::move(y)); });
    json body = io::to_json(point_distance(px, py, bits));
    body["kind"] = "points";
    return {kHolds, body};
  }
  const Hyperplane h0 = hyperplane_at(c.input, "v0", f);
  const Hyperplane h1 = hyperplane_at(c.input, "v1", f);
  const CertifiedDistance d = blame("/v1", [&] { return hyperplane_distance(h0, h1, bits); });
  json body = io::to_json(d);
  body["kind"] = "hyperplanes";
  // A closed geodesic running twice along the common perpendicular.
  const Interval doubled{2 * d.distance.lo, 2 * d.distance.hi};
  const DecimalInterval sys = to_decimal(doubled, decimal_digits_for(bits));
  body["systole_bound"] = json{{"lo", sys.lo}, {"hi", sys.hi}};
  return {kHolds, body};
}

Outcome reflect(const Context& c) {
  const QuadraticForm f = form_at(c.input, "form");
  const Hyperplane h = hyperplane_at(c.input, "normal", f);
  const GroupElement r = reflection_matrix(h);
  return {kHolds, json{{"matrix", io::to_json(r.matrix())}, {"determinant", io::to_json(r.determinant())}}};
}

Outcome assemble(const Context& c) {
  const QuadraticForm f = form_at(c.input, "form");
  const GeneratorSet gamma1 = io::parse_generators(require_key(c.input, "gamma1", ""), f, "/gamma1");
  const GroupElement i0 = reflection_at(require_key(c.input, "i0", ""), f, "/i0");
  const json& sides = require_key(c.input, "side_reflections", "");
  if (!sides.is_array())
    throw io::InputError(ErrorCode::ParseError, "/side_reflections", "expected an array");
  std::vector<GroupElement> side;
  for (std::size_t j = 0; j < sides.size(); ++j)
    side.push_back(reflection_at(sides[j], f, "/side_reflections/" + std::to_string(j)));
  const GeneratorSet gens = blame("/side_reflections", [&] {
    return assemble_inbred_generators(gamma1, i0, side);
  });
  return {kHolds, io::to_json(gens)};
}

Outcome certify_qa(const Context& c) {
  const QuadraticForm f = form_at(c.input, "form");
  const json& gens = require_key(c.input, "generators", "");
  if (!gens.is_array() || gens.empty())
    throw io::InputError(ErrorCode::EmptyGeneratorSet, "/generators", "expected a nonempty array");
  std::vector<Matrix> matrices;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string gp = "/generators/" + std::to_string(k);
    const json& g = gens[k];
    matrices.push_back(io::parse_matrix(require_key(g, "matrix", gp), f.field(), f.dim(), gp + "/matrix"));
    labels.push_back(g.contains("label") && g["label"].is_string() ? g["label"].get<std::string>()
                                                                   : "g" + std::to_string(k + 1));
  }
  const QACertificate cert = certify_quasi_arithmetic(f, matrices, labels);
  return {cert.verdict == Verdict::Certified ? kHolds : kRefuted, io::to_json(cert)};
}

Outcome integrality(const Context& c) {
  const QuadraticForm f = form_at(c.input, "form");
  const GeneratorSet gens = io::parse_generators(require_key(c.input, "generators", ""), f, "/generators");
  const IntegralityReport r = integrality_report(gens);
  return {r.is_integral ? kHolds : kRefuted, io::to_json(r)};
}

Outcome trace_probe(const Context& c) {
  const QuadraticForm f = form_at(c.input, "form");
  const GeneratorSet gens = io::parse_generators(require_key(c.input, "generators", ""), f, "/generators");
  const json& len = require_key(c.input, "max_word_length", "");
  if (!len.is_number_unsigned() || len.get<std::size_t>() == 0)
    throw io::InputError(ErrorCode::InvalidArgument, "/max_word_length", "must be a positive integer");
  const TraceProbeResult r = blame("/max_word_length", [&] {
    return trace_field_probe(gens, len.get<std::size_t>(), c.request.word_cap);
  });
  return {r.verdict == TraceVerdict::GeneratesK ? kHolds : kInconclusive, io::to_json(r)};
}

std::pair<QuadraticForm, QuadraticForm> form_pair(const Context& c) {
  QuadraticForm f1 = form_at(c.input, "f1");
  QuadraticForm f2 = form_at(c.input, "f2");
  if (!(f1.field() == f2.field()))
    throw io::InputError(ErrorCode::FieldMismatch, "/f2/field", "f1 and f2 must share a field");
  return {std::move(f1), std::move(f2)};
}

Outcome nonsimilar(const Context& c) {
  const auto [f1, f2] = form_pair(c);
  const SimilarityCertificate cert = similarity_obstruction(f1, f2);
  return {cert.verdict == SimilarityVerdict::NonSimilar ? kHolds : kInconclusive, io::to_json(cert)};
}

Outcome gps_check(const Context& c) {
  const auto [f1, f2] = form_pair(c);
  const GpsCertificate cert = gps_incompatibility(f1, f2);
  return {cert.incompatible ? kHolds : kInconclusive, io::to_json(cert)};
}

Outcome dispatch(const Context& c) {
  switch (c.request.subcommand) {
    case Subcommand::CheckAdmissible: return check_admissible(c);
    case Subcommand::Signature: return signature(c);
    case Subcommand::ConjugateForm: return conjugate(c);
    case Subcommand::Evaluate: return evaluate_cmd(c);
    case Subcommand::ClassifyPair: return classify(c);
    case Subcommand::Distance: return distance(c);
    case Subcommand::Reflect: return reflect(c);
    case Subcommand::Assemble: return assemble(c);
    case Subcommand::CertifyQa: return certify_qa(c);
    case Subcommand::Integrality: return integrality(c);
    case Subcommand::TraceProbe: return trace_probe(c);
    case Subcommand::Nonsimilar: return nonsimilar(c);
    case Subcommand::GpsCheck: return gps_check(c);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown subcommand");
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string_view subcommand_name(Subcommand s) {
  for (const auto& [sub, name] : kNames)
    if (sub == s) return name;
  return "unknown";
}

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  for (const auto& [sub, n] : kNames)
    if (n == name) return sub;
  return std::nullopt;
}

const std::vector<Subcommand>& all_subcommands() {
  static const std::vector<Subcommand> subs = [] {
    std::vector<Subcommand> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return subs;
}

CommandResult input_error(std::string_view subcommand, std::string_view code,
                          std::string_view field, std::string_view message) {
  const json doc{{"subcommand", subcommand},
                 {"error", json{{"code", code}, {"field", field}, {"message", message}}}};
  return CommandResult{kInputError, render(doc)};
}

CommandResult run(const CommandRequest& request) {
  const std::string_view name = subcommand_name(request.subcommand);
  if (request.precision_bits < 8)
    return input_error(name, "INVALID_ARGUMENT", "--precision-bits", "precision must be at least 8 bits");

  json input;
  try {
    input = json::parse(request.input);
  } catch (const json::parse_error& e) {
    return input_error(name, "PARSE_ERROR", "/", e.what());
  }
  if (!input.is_object()) return input_error(name, "PARSE_ERROR", "/", "input must be a JSON object");

  try {
    Outcome out = dispatch(Context{input, request});
    out.body["subcommand"] = name;
    out.body["input_sha256"] = io::sha256_hex(input.dump());
    return CommandResult{out.exit_code, render(out.body)};
  } catch (const io::InputError& e) {
    return input_error(name, error_code_name(e.code()), e.pointer(), e.what());
  } catch (const Error& e) {
    return input_error(name, error_code_name(e.code()), "/", e.what());
  } catch (const json::exception& e) {
    return input_error(name, "PARSE_ERROR", "/", e.what());
  }
}

}  // namespace lorentzkit::cli
