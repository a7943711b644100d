#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ccurves/bialgebra.hpp"

namespace ccurves {

// A reduced cyclic word of length at most max_len: a uniformly random freely
// reduced sequence of uniform length, cyclically reduced (redrawn if trivial).
CyclicWord random_word(std::mt19937_64& rng, int rank, std::size_t max_len);

struct AxiomTally {
  Axiom axiom;
  int samples = 0;
  int failures = 0;
  // First failing check, if any.
  std::optional<AxiomResult> first_failure;
};

// Draws `samples` fresh samples per axiom from one generator seeded with `seed`.
std::vector<AxiomTally> run_axiom_suite(const SurfaceSymbol& o, std::uint64_t seed, int samples,
                                        std::size_t max_len, const std::vector<Axiom>& axioms,
                                        const LinkOptions& opts = {});

const std::vector<Axiom>& all_axioms();

}  // namespace ccurves
