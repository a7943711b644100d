#include "ccurves/sampling.hpp"

#include "ccurves/errors.hpp"

namespace ccurves {

CyclicWord random_word(std::mt19937_64& rng, int rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> length_dist(1, max_len);
  std::uniform_int_distribution<int> first_dist(0, 2 * rank - 1);
  std::uniform_int_distribution<int> next_dist(0, 2 * rank - 2);
  for (;;) {
    const std::size_t len = length_dist(rng);
    LinearWord letters;
    letters.reserve(len);
    letters.push_back(Letter::from_code(static_cast<std::uint16_t>(first_dist(rng))));
    while (letters.size() < len) {
      // Skip the code that would cancel the previous letter.
      auto c = static_cast<std::uint16_t>(next_dist(rng));
      if (c >= letters.back().inverse().code()) ++c;
      letters.push_back(Letter::from_code(c));
    }
    try {
      return make_cyclic(letters);
    } catch (const TrivialClass&) {
    }
  }
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms{Axiom::skew,     Axiom::jacobi,        Axiom::coskew,
                                         Axiom::cojacobi, Axiom::compatibility, Axiom::involutive};
  return axioms;
}

std::vector<AxiomTally> run_axiom_suite(const SurfaceSymbol& o, std::uint64_t seed, int samples,
                                        std::size_t max_len, const std::vector<Axiom>& axioms,
                                        const LinkOptions& opts) {
  std::mt19937_64 rng(seed);
  std::vector<AxiomTally> out;
  for (Axiom axiom : axioms) {
    AxiomTally tally{axiom, 0, 0, std::nullopt};
    for (int i = 0; i < samples; ++i) {
      std::vector<CyclicWord> sample;
      for (int k = 0; k < arity(axiom); ++k) sample.push_back(random_word(rng, o.rank(), max_len));
      auto result = check_axiom(axiom, o, sample, opts);
      ++tally.samples;
      if (!result.passed) {
        ++tally.failures;
        if (!tally.first_failure) tally.first_failure = std::move(result);
      }
    }
    out.push_back(std::move(tally));
  }
  return out;
}

}  // namespace ccurves
