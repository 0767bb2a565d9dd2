// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and time limits are fixed below.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "support.hpp"

using namespace lktest;
using nlohmann::json;

namespace {

constexpr double kAdmissibilitySeconds = 1.0;
constexpr double kReflectionSeconds = 5.0;
constexpr double kGpsSeconds = 10.0;
constexpr unsigned kDistanceBits = 128;
constexpr double kEigenSeparation = 1e-9;
constexpr long kSquareSearchBound = 50;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::fixed << s << " s";
  return ss.str();
}

QuadraticForm random_form(Rng& rng, const FieldDescriptor& f, std::size_t n) {
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_elem(rng, f, 4, 2);
    try {
      return QuadraticForm::from_gram(m);
    } catch (const Error&) {
    }
  }
}

Outcome admissibility_suite() {
  Outcome out;
  const Stopwatch clock;
  for (std::size_t n = 2; n <= 6; ++n)
    out.require(is_admissible_pair(standard_form(n)).verdict == Verdict::Certified,
                "(Q, f_" + std::to_string(n) + ") not certified");
  for (std::size_t n = 2; n <= 5; ++n) {
    out.require(is_admissible_pair(lead_form(n, e(kQ2, "-sqrt(2)"))).verdict == Verdict::Certified,
                "diag(-sqrt2, 1..1) n=" + std::to_string(n) + " not certified");
    const auto bad = is_admissible_pair(lead_form(n, q(kQ2, -1)));
    out.require(bad.verdict == Verdict::Refuted && bad.failing_embedding == Embedding::Conjugate,
                "diag(-1, 1..1) over Q(sqrt2) n=" + std::to_string(n) + " not refuted at CONJUGATE");
  }
  const double t = clock.seconds();
  out.require(t < kAdmissibilitySeconds, "took " + fmt_seconds(t));
  if (out.pass) out.detail = "14 pairs, " + fmt_seconds(t);
  return out;
}

Outcome reflection_suite() {
  Outcome out;
  Rng rng(2024);
  const QuadraticForm g = lead_form(3, e(kQ2, "-sqrt(2)"));
  const Stopwatch clock;
  for (int i = 0; i < 100 && out.pass; ++i) {
    const Vector v = random_spacelike(rng, g);
    const GroupElement refl = reflection_matrix(Hyperplane(g, v));
    const Matrix& r = refl.matrix();
    out.require((r * r).is_identity(), "R^2 != I");
    out.require(r.transpose() * g.gram() * r == g.gram(), "R^T F R != F");
    out.require(leibniz_determinant(r) == q(kQ2, -1), "det R != -1");
  }
  const double t = clock.seconds();
  out.require(t < kReflectionSeconds, "took " + fmt_seconds(t));
  if (out.pass) out.detail = "100 normals, " + fmt_seconds(t);
  return out;
}

Outcome inbreeding_suite() {
  Outcome out;
  Rng rng(2025);
  const QuadraticForm g = lead_form(3, e(kQ2, "-sqrt(2)"));
  std::size_t sides = 0;
  for (int i = 0; i < 20 && out.pass; ++i) {
    const auto inst = random_inbreeding(rng, g);
    const GeneratorSet gens = assemble_inbred_generators(inst.gamma1, inst.i0, inst.sides);
    out.require(certify_quasi_arithmetic(g, gens).verdict == Verdict::Certified,
                "instance " + std::to_string(i) + " not certified");
    const std::size_t base = 2 * inst.gamma1.size();
    for (std::size_t j = 0; j < inst.sides.size(); ++j, ++sides)
      out.require(leibniz_determinant(gens.elements()[base + j].matrix()) == q(kQ2, 1),
                  "instance " + std::to_string(i) + ": det(I_j^-1 I_0) != +1");
  }
  if (out.pass) out.detail = "20 instances, " + std::to_string(sides) + " side pairings";
  return out;
}

Outcome distance_suite() {
  Outcome out;
  const QuadraticForm f2 = standard_form(2);
  const Hyperplane h0(f2, vec(kQ, {"0", "1", "0"}));
  const Rational tolerance(Integer(1), Integer("1000000000000000000000000000000"));  // 1e-30
  for (long t : {2L, 3L, 4L, 8L}) {
    const Hyperplane h1(f2, Vector{q(kQ, 1), q(kQ, t), q(kQ, 0)});
    const CertifiedDistance d = hyperplane_distance(h0, h1, kDistanceBits);
    out.require(d.cosh_sq == q(kQ, t * t, t * t - 1), "cosh_sq wrong for t=" + std::to_string(t));
    out.require(d.distance.width() < tolerance, "enclosure too wide for t=" + std::to_string(t));
    out.require(d.distance.lo > 0, "distance enclosure not positive for t=" + std::to_string(t));
  }
  out.require(classify_hyperplane_pair(h0, Hyperplane(f2, vec(kQ, {"1", "1", "1"}))) == HyperplanePair::Tangent,
              "(1,1,1) not TANGENT");
  out.require(classify_hyperplane_pair(h0, Hyperplane(f2, vec(kQ, {"0", "0", "1"}))) ==
                  HyperplanePair::Intersecting,
              "(0,0,1) not INTERSECTING");
  if (out.pass) out.detail = "t in {2,3,4,8}, width < 1e-30 at 128 bits";
  return out;
}

Outcome gps_suite() {
  Outcome out;
  const Stopwatch clock;
  const auto cert = gps_incompatibility(lead_form(3, e(kQ2, "-sqrt(2)")),
                                        form_from_diagonal(kQ2, vec(kQ2, {"-sqrt(2)", "1", "1", "3"})));
  out.require(cert.incompatible && cert.similarity.verdict == SimilarityVerdict::NonSimilar,
              "diag(-sqrt2,1,1,1) vs diag(-sqrt2,1,1,3) not NON_SIMILAR");
  out.require(cert.similarity.witness == Obstruction::Discriminant &&
                  cert.similarity.discriminant_ratio == q(kQ2, 3),
              "witness is not the discriminant ratio 3");
  Rng rng(2026);
  for (int i = 0; i < 50 && out.pass; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(i % 4);
    const QuadraticForm f = random_form(rng, kQ2, n);
    const Matrix p = random_invertible(rng, kQ2, n);
    const QuadFieldElem lambda = random_nonzero(rng, kQ2);
    const QuadraticForm g = scaled_form(congruent_form(f, p), lambda);
    out.require(similarity_obstruction(f, g).verdict == SimilarityVerdict::Inconclusive,
                "false refutation on random pair " + std::to_string(i));
  }
  const double t = clock.seconds();
  out.require(t < kGpsSeconds, "took " + fmt_seconds(t));
  if (out.pass) out.detail = "witness 3; 50 similar pairs INCONCLUSIVE, " + fmt_seconds(t);
  return out;
}

Outcome oracle_suite() {
  Outcome out;
  Rng rng(2027);

  // sign_at against enclosure midpoints. A third of the samples sit close
  // to zero (continued-fraction approximations of sqrt 2).
  std::size_t compared = 0;
  for (int i = 0; i < 1000; ++i) {
    QuadFieldElem x = random_nonzero(rng, kQ2, 50, 20);
    if (i % 3 == 0) {
      static const long conv[][2] = {{3, 2}, {7, 5}, {17, 12}, {41, 29}, {99, 70}, {239, 169}, {577, 408}};
      const auto& c = conv[static_cast<std::size_t>(i / 3) % 7];
      const long s = i % 2 ? 1 : -1;
      x = QuadFieldElem(kQ2, Rational(s * c[0], c[1]), -s);
    }
    for (Embedding emb : {Embedding::Identity, Embedding::Conjugate}) {
      const Interval iv = decimal_enclosure(emb == Embedding::Conjugate ? galois_conjugate(x) : x, 128);
      if (iv.contains_zero()) continue;
      ++compared;
      out.require(sign_at(x, emb) == sgn(iv.midpoint()), "sign_at disagrees on " + to_string(x));
    }
  }

  // is_square against the brute-force search; roots that fit the search
  // bound must be found, and no non-square may have one.
  std::size_t squares = 0;
  for (int i = 0; i < 200; ++i) {
    QuadFieldElem x = random_nonzero(rng, kQ2, 6, 4);
    if (i % 2 == 0) {
      const QuadFieldElem y = random_nonzero(rng, kQ2, 6, 4);
      x = y * y;
    }
    const auto root = is_square(x);
    const bool brute = brute_force_has_square_root(x, kSquareSearchBound);
    if (root) {
      ++squares;
      out.require(*root * *root == x, "is_square root is wrong for " + to_string(x));
      Integer w;
      mpz_lcm(w.get_mpz_t(), root->a().get_den_mpz_t(), root->b().get_den_mpz_t());
      const bool fits = w <= kSquareSearchBound && abs(root->a() * w) <= kSquareSearchBound &&
                        abs(root->b() * w) <= kSquareSearchBound;
      out.require(!fits || brute, "brute force missed the root of " + to_string(x));
    } else {
      out.require(!brute, "brute force found a root is_square missed: " + to_string(x));
    }
  }

  // signature_at against floating eigenvalue signs.
  std::size_t eigen_compared = 0;
  for (int i = 0; i < 200; ++i) {
    const QuadraticForm f = random_form(rng, kQ2, 3 + static_cast<std::size_t>(i % 4));
    for (Embedding emb : {Embedding::Identity, Embedding::Conjugate}) {
      const auto oracle = eigen_signature(f.gram(), emb, kEigenSeparation);
      if (!oracle) continue;
      ++eigen_compared;
      out.require(signature_at(f, emb) == *oracle, "signature disagrees with eigenvalue oracle");
    }
  }
  out.require(compared >= 1000 && eigen_compared >= 200, "too few decided comparisons");
  if (out.pass)
    out.detail = std::to_string(compared) + " signs, 200 square tests (" + std::to_string(squares) +
                 " squares), " + std::to_string(eigen_compared) + " signatures";
  return out;
}

Outcome sylvester_suite() {
  Outcome out;
  Rng rng(2028);
  for (int i = 0; i < 100 && out.pass; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(i % 4);
    const QuadraticForm f = random_form(rng, kQ2, n);
    const QuadraticForm g = congruent_form(f, random_invertible(rng, kQ2, n));
    for (Embedding emb : {Embedding::Identity, Embedding::Conjugate})
      out.require(signature_at(g, emb) == signature_at(f, emb),
                  "congruence " + std::to_string(i) + " changed the signature");
  }
  if (out.pass) out.detail = "100 congruences, both embeddings";
  return out;
}

Outcome trace_suite() {
  Outcome out;
  const QuadraticForm f2 = standard_form(2, kQ2);
  const GroupElement turn = GroupElement::from_matrix(
      f2, mat(kQ2, {{"1", "0", "0"}, {"0", "1/2*sqrt(2)", "-1/2*sqrt(2)"}, {"0", "1/2*sqrt(2)", "1/2*sqrt(2)"}}));
  out.require(turn.trace() == e(kQ2, "1+sqrt(2)"), "test generator does not have trace 1+sqrt(2)");
  out.require(trace_field_probe(GeneratorSet({turn}, {"t"}), 1).verdict == TraceVerdict::GeneratesK,
              "trace 1+sqrt(2) did not give GENERATES_K at length 1");

  std::vector<GroupElement> refl;
  for (auto v : {vec(kQ2, {"0", "1", "0"}), vec(kQ2, {"1", "2", "0"}), vec(kQ2, {"0", "1", "1"})})
    refl.push_back(reflection_matrix(Hyperplane(f2, v)));
  const GeneratorSet rational(refl, {"a", "b", "c"});
  for (std::size_t len = 1; len <= 4; ++len)
    out.require(trace_field_probe(rational, len).verdict == TraceVerdict::ProperSubfieldSoFar,
                "rational set left PROPER_SUBFIELD_SO_FAR at length " + std::to_string(len));

  refl.push_back(turn);
  const GeneratorSet mixed(refl, {"a", "b", "c", "t"});
  bool generated = false;
  for (std::size_t len = 1; len <= 4; ++len) {
    const bool now = trace_field_probe(mixed, len).verdict == TraceVerdict::GeneratesK;
    out.require(!generated || now, "verdict not monotone at length " + std::to_string(len));
    generated |= now;
  }
  out.require(generated, "mixed set never generated K");
  if (out.pass) out.detail = "lengths 1..4";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int exit_code;
  std::string out;
};

Run run_tool(const std::string& subcommand, const std::string& input) {
  const std::string cmd = std::string(LORENTZKIT_TOOL) + " " + subcommand + " --input " + input + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_suite() {
  Outcome out;
  const std::string dir = LORENTZKIT_FIXTURES;
  const json manifest = json::parse(read_file(dir + "/manifest.json"));
  std::set<std::string> subcommands;
  for (const auto& c : manifest) {
    const std::string name = c["name"].get<std::string>();
    const std::string sub = c["subcommand"].get<std::string>();
    const std::string path = dir + "/" + c["input"].get<std::string>();
    const Run first = run_tool(sub, path);
    const Run second = run_tool(sub, path);
    out.require(first.out == second.out, name + ": outputs differ between runs");
    out.require(first.exit_code == second.exit_code, name + ": exit codes differ between runs");
    out.require(first.exit_code == c["exit"].get<int>(),
                name + ": exit " + std::to_string(first.exit_code) + ", expected " +
                    std::to_string(c["exit"].get<int>()));
    subcommands.insert(sub);
  }
  out.require(subcommands.size() == 13, "corpus covers " + std::to_string(subcommands.size()) + " of 13 subcommands");
  if (out.pass)
    out.detail = std::to_string(manifest.size()) + " fixtures, " + std::to_string(subcommands.size()) +
                 " subcommands";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"admissibility suite", admissibility_suite},
      {"reflection suite", reflection_suite},
      {"inbreeding generators are quasi-arithmetic", inbreeding_suite},
      {"distance certification", distance_suite},
      {"GPS incompatibility and soundness", gps_suite},
      {"oracle equivalences", oracle_suite},
      {"Sylvester invariance", sylvester_suite},
      {"trace probe sanity", trace_suite},
      {"CLI determinism and exit codes", cli_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << "AC" << i + 1 << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << o.detail << ")\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
