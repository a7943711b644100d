#pragma once

#include <stdexcept>

namespace ccurves {

// Raised when text cannot be parsed as a word or symbol.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Free reduction emptied the word; the trivial loop is not a basis element.
struct TrivialClass : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A word uses letters that the surface alphabet does not contain.
struct AlphabetMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadSymbol : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadSurface : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Intersection counts are only defined here for primitive classes.
struct NonPrimitive : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace ccurves
