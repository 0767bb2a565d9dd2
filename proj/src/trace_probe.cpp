#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "lorentzkit/lattice.hpp"

namespace lorentzkit {

std::string_view trace_verdict_name(TraceVerdict v) {
  return v == TraceVerdict::GeneratesK ? "GENERATES_K" : "PROPER_SUBFIELD_SO_FAR";
}

namespace {

struct Alphabet {
  std::vector<Matrix> letters;
  // inverse_letter[l] is the letter that cancels l; involutions cancel
  // themselves.
  std::vector<std::size_t> inverse_letter;
};

// Letters ordered by generator label, each generator followed by its
// inverse unless it is an involution.
Alphabet build_alphabet(const GeneratorSet& gens) {
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return gens.labels()[x] < gens.labels()[y];
  });
  Alphabet a;
  for (std::size_t k : order) {
    const GroupElement& g = gens.elements()[k];
    const GroupElement g_inv = invert(g);
    const std::size_t self = a.letters.size();
    a.letters.push_back(g.matrix());
    if (g_inv == g) {
      a.inverse_letter.push_back(self);
    } else {
      a.letters.push_back(g_inv.matrix());
      a.inverse_letter.push_back(self + 1);
      a.inverse_letter.push_back(self);
    }
  }
  return a;
}

struct Word {
  Matrix matrix;
  std::size_t last_letter;  // npos for the empty word
};

constexpr std::size_t kNoLetter = static_cast<std::size_t>(-1);

QuadFieldElem matrix_trace(const Matrix& m) {
  QuadFieldElem t(m.field(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

TraceProbeResult trace_field_probe(const GeneratorSet& gens, std::size_t max_word_length,
                                   std::size_t word_cap, Execution exec) {
  if (max_word_length == 0)
    throw Error(ErrorCode::InvalidArgument, "max_word_length must be at least 1");
  const Alphabet alphabet = build_alphabet(gens);
  const std::size_t n_letters = alphabet.letters.size();
  const QuadraticForm& f = gens.form();

  TraceProbeResult result;
  std::unordered_set<std::string> seen;
  auto record = [&](const QuadFieldElem& t, std::size_t length) {
    for (const QuadFieldElem& v : {t, -t})
      if (seen.insert(to_string(v)).second) result.traces.push_back(v);
    if (!t.is_rational() && !result.first_irrational_length)
      result.first_irrational_length = length;
  };

  std::vector<Word> frontier{Word{Matrix::identity(f.field(), f.dim()), kNoLetter}};
  result.words_enumerated = 1;
  record(matrix_trace(frontier.front().matrix), 0);

  for (std::size_t length = 1; length <= max_word_length; ++length) {
    // Offsets into the next level keep output order independent of
    // scheduling: words in lexicographic order, letters in alphabet order.
    std::vector<std::size_t> offset(frontier.size() + 1, 0);
    for (std::size_t w = 0; w < frontier.size(); ++w) {
      const std::size_t last = frontier[w].last_letter;
      offset[w + 1] = offset[w] + n_letters - (last == kNoLetter ? 0 : 1);
    }
    const std::size_t next_size = offset.back();
    if (next_size == 0) break;
    if (result.words_enumerated + next_size > word_cap)
      throw Error(ErrorCode::WordBudgetExceeded,
                  "enumerating words of length " + std::to_string(length) + " exceeds the cap of " +
                      std::to_string(word_cap) + " words");

    std::vector<Word> next(next_size);
    std::vector<QuadFieldElem> traces(next_size);
    auto extend = [&](long w_signed) {
      const auto w = static_cast<std::size_t>(w_signed);
      const Word& word = frontier[w];
      std::size_t slot = offset[w];
      for (std::size_t l = 0; l < n_letters; ++l) {
        if (word.last_letter != kNoLetter && alphabet.inverse_letter[word.last_letter] == l)
          continue;
        next[slot].matrix = word.matrix * alphabet.letters[l];
        next[slot].last_letter = l;
        traces[slot] = matrix_trace(next[slot].matrix);
        ++slot;
      }
    };
    const auto count = static_cast<long>(frontier.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long w = 0; w < count; ++w) extend(w);
    } else {
      for (long w = 0; w < count; ++w) extend(w);
    }

    for (const auto& t : traces) record(t, length);
    result.words_enumerated += next_size;
    frontier = std::move(next);
  }

  result.verdict = result.first_irrational_length ? TraceVerdict::GeneratesK
                                                  : TraceVerdict::ProperSubfieldSoFar;
  return result;
}

}  // namespace lorentzkit
