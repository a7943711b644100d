#pragma once

#include <span>
#include <string>
#include <vector>

#include "ccurves/words.hpp"

namespace ccurves {

/// Cyclic word of length 2n using every letter of A_n exactly once.
///
/// The rotation given at construction is kept as the fixed linear
/// representative; `position` refers to it.
class SurfaceSymbol {
 public:
  // Throws BadSymbol.
  static SurfaceSymbol from_letters(std::span<const Letter> letters);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  bool contains(Letter x) const { return x.index() <= rank_; }
  int position(Letter x) const { return position_[x.code()]; }

  friend bool operator==(const SurfaceSymbol& a, const SurfaceSymbol& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<Letter> letters_;
  std::vector<int> position_;
  int rank_ = 0;
};

SurfaceSymbol parse_symbol(std::string_view text);
std::string to_string(const SurfaceSymbol& o);

struct SurfaceInvariants {
  int euler_characteristic;
  int boundary_components;
  int genus;
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// Traces the boundary of the glued 4n-gon.
SurfaceInvariants invariants(const SurfaceSymbol& o);

// Handles a_{2k-1} a_{2k} A_{2k-1} A_{2k} followed by a_m A_m blocks, with
// n = 2g + b - 1. Throws BadSurface.
SurfaceSymbol preset(int genus, int boundary);

// The literal reading also zeroes o on cyclic words that are not reduced.
enum class OrientationMode { lenient, strict };

/// Cyclic orientation of distinct letters relative to the symbol.
///
/// Returns +1 when the letters sit in the same cyclic order as in the symbol,
/// -1 for the reversed order, 0 otherwise (including any repeated letter).
/// Requires at least three letters.
int cyclic_orientation(const SurfaceSymbol& o, std::span<const Letter> letters,
                       OrientationMode mode = OrientationMode::lenient);

}  // namespace ccurves
