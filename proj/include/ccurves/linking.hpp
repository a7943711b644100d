#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "ccurves/surface.hpp"
#include "ccurves/words.hpp"

namespace ccurves {

// A subword occurrence: `length` letters of the periodic extension of a base
// word read from `start`, with start in [0, base length).
struct Occurrence {
  int start = 0;
  int length = 0;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

enum class LinkKind : int { crossing = 1, parallel = 2, antiparallel = 3 };

struct Classification {
  LinkKind kind;
  int sign;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// A linked pair (P, Q) of occurrences in a first and second base word.
///
/// Anchors are positions modulo the base lengths. For kind 1 only p2/q2 are
/// meaningful; y_first_p/y_last_p locate the middle Y inside the first word,
/// ybar_first_q/ybar_last_q locate its partner (Y itself for kind 2, the
/// inverse of Y for kind 3) inside the second word.
struct LinkedPair {
  LinkKind kind;
  Occurrence p;
  Occurrence q;
  int sign;
  int p2 = 0;
  int q2 = 0;
  int y_first_p = -1;
  int y_last_p = -1;
  int ybar_first_q = -1;
  int ybar_last_q = -1;

  int middle_length() const { return p.length - 2; }

  friend bool operator==(const LinkedPair& a, const LinkedPair& b) {
    return a.kind == b.kind && a.p == b.p && a.q == b.q && a.sign == b.sign;
  }
  friend auto operator<=>(const LinkedPair& a, const LinkedPair& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.q <=> b.q;
  }
};

struct LinkOptions {
  OrientationMode orientation = OrientationMode::lenient;
  // Extra powers allowed beyond the finite-length window for pairs of words.
  int bound_slack = 0;
  // Extra letters allowed beyond l(W) for single-word occurrences.
  int lp1_cap_extra = 0;
};

// Decides which clause (if any) links P and Q. Both must be freely reduced
// with length >= 2 (std::invalid_argument otherwise).
std::optional<Classification> classify(std::span<const Letter> p, std::span<const Letter> q,
                                       const SurfaceSymbol& o,
                                       OrientationMode mode = OrientationMode::lenient);

std::vector<LinkedPair> lp1(const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts = {});
std::vector<LinkedPair> lp2(const CyclicWord& v, const CyclicWord& w, const SurfaceSymbol& o,
                            const LinkOptions& opts = {});

// Exhaustive versions: every occurrence pair is read out and passed to
// classify(). Serial, slow, kept as the reference for the fast enumerators.
std::vector<LinkedPair> lp1_reference(const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts = {});
std::vector<LinkedPair> lp2_reference(const CyclicWord& v, const CyclicWord& w, const SurfaceSymbol& o,
                                      const LinkOptions& opts = {});

// Largest power index j with j < 2 + l(w)/l(v), plus slack.
int power_window(std::size_t lv, std::size_t lw, int slack = 0);

// Throws AlphabetMismatch if w uses generators the symbol lacks.
void require_alphabet(const CyclicWord& w, const SurfaceSymbol& o);

}  // namespace ccurves
