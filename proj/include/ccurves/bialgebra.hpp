#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ccurves/formal_sum.hpp"
#include "ccurves/linking.hpp"

namespace ccurves {

// The two loops obtained by resolving the self-crossing recorded by `pair`.
// Throws std::invalid_argument if the pair is not a linked pair of w.
WordPair delta_parts(const CyclicWord& w, const LinkedPair& pair, const SurfaceSymbol& o,
                     const LinkOptions& opts = {});

// The loop product at the crossing recorded by `pair`.
// Throws std::invalid_argument if the pair is not a linked pair of (v, w).
CyclicWord gamma_word(const CyclicWord& v, const CyclicWord& w, const LinkedPair& pair, const SurfaceSymbol& o,
                      const LinkOptions& opts = {});

TensorSum cobracket(const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts = {});
FormalSum bracket(const CyclicWord& v, const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts = {});

// Bilinear extensions.
FormalSum bracket(const FormalSum& a, const FormalSum& b, const SurfaceSymbol& o, const LinkOptions& opts = {});
TensorSum cobracket(const FormalSum& a, const SurfaceSymbol& o, const LinkOptions& opts = {});
// [a, b (x) c] = [a, b] (x) c + b (x) [a, c]
TensorSum bracket(const FormalSum& a, const TensorSum& t, const SurfaceSymbol& o, const LinkOptions& opts = {});
// [b (x) c, a] = -[a, b (x) c]
TensorSum bracket(const TensorSum& t, const FormalSum& a, const SurfaceSymbol& o, const LinkOptions& opts = {});

enum class Axiom { skew, jacobi, coskew, cojacobi, compatibility, involutive };

std::string to_string(Axiom a);
Axiom parse_axiom(std::string_view name);
// Number of words the identity takes.
int arity(Axiom a);

struct AxiomResult {
  Axiom axiom;
  bool passed;
  std::variant<FormalSum, TensorSum, TripleSum> residual;
  std::vector<CyclicWord> witness;  // the sample, recorded only on failure
};

// Evaluates the identity exactly; `sample` must hold arity(axiom) words.
AxiomResult check_axiom(Axiom axiom, const SurfaceSymbol& o, std::span<const CyclicWord> sample,
                        const LinkOptions& opts = {});

}  // namespace ccurves
