#include "ccurves/surface.hpp"

#include <stdexcept>

#include "ccurves/errors.hpp"

namespace ccurves {

SurfaceSymbol SurfaceSymbol::from_letters(std::span<const Letter> letters) {
  if (letters.empty() || letters.size() % 2 != 0) {
    throw BadSymbol("surface symbol must have even, non-zero length");
  }
  const int n = static_cast<int>(letters.size() / 2);
  SurfaceSymbol o;
  o.rank_ = n;
  o.letters_.assign(letters.begin(), letters.end());
  o.position_.assign(static_cast<std::size_t>(2 * n), -1);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    Letter x = letters[i];
    if (x.index() > n) throw BadSymbol("symbol letter " + to_string(x) + " is outside A_" + std::to_string(n));
    if (o.position_[x.code()] != -1) throw BadSymbol("symbol letter " + to_string(x) + " repeats");
    o.position_[x.code()] = static_cast<int>(i);
  }
  return o;
}

SurfaceSymbol parse_symbol(std::string_view text) {
  LinearWord letters;
  try {
    letters = parse_letters(text);
  } catch (const ParseError& e) {
    throw BadSymbol(e.what());
  }
  return SurfaceSymbol::from_letters(letters);
}

std::string to_string(const SurfaceSymbol& o) { return to_string(o.letters()); }

SurfaceInvariants invariants(const SurfaceSymbol& o) {
  // Edges of the 4n-gon alternate: labeled edge k carries letter o_k and is
  // followed by boundary arc k. Walking arc k ends at the start corner of
  // labeled edge k+1, which the gluing identifies with the end corner of the
  // partner edge; the boundary then continues along the arc after the partner.
  const auto m = static_cast<int>(o.letters().size());
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  int cycles = 0;
  for (int start = 0; start < m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    int arc = start;
    while (!seen[static_cast<std::size_t>(arc)]) {
      seen[static_cast<std::size_t>(arc)] = true;
      Letter next_label = o.letters()[static_cast<std::size_t>((arc + 1) % m)];
      arc = o.position(next_label.inverse());
    }
  }
  const int n = o.rank();
  return {1 - n, cycles, (n + 1 - cycles) / 2};
}

SurfaceSymbol preset(int genus, int boundary) {
  if (genus < 0 || boundary < 1) throw BadSurface("genus must be >= 0 and boundary >= 1");
  const int n = 2 * genus + boundary - 1;
  if (n < 1) throw BadSurface("surface needs at least one generator (2g + b - 1 >= 1)");
  LinearWord letters;
  for (int k = 1; k <= genus; ++k) {
    letters.push_back(Letter::generator(2 * k - 1));
    letters.push_back(Letter::generator(2 * k));
    letters.push_back(Letter::generator(2 * k - 1, true));
    letters.push_back(Letter::generator(2 * k, true));
  }
  for (int m = 2 * genus + 1; m <= n; ++m) {
    letters.push_back(Letter::generator(m));
    letters.push_back(Letter::generator(m, true));
  }
  auto o = SurfaceSymbol::from_letters(letters);
  const SurfaceInvariants expected{1 - n, boundary, genus};
  if (invariants(o) != expected) throw BadSurface("preset layout failed boundary validation");
  return o;
}

int cyclic_orientation(const SurfaceSymbol& o, std::span<const Letter> letters, OrientationMode mode) {
  const std::size_t len = letters.size();
  if (len < 3) throw std::invalid_argument("cyclic orientation needs at least three letters");
  for (std::size_t i = 0; i < len; ++i) {
    if (!o.contains(letters[i])) throw AlphabetMismatch("letter " + to_string(letters[i]) + " not in symbol");
    for (std::size_t j = i + 1; j < len; ++j) {
      if (letters[i] == letters[j]) return 0;
    }
  }
  if (mode == OrientationMode::strict && !is_cyclically_reduced(letters)) return 0;
  std::size_t descents = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (o.position(letters[i]) > o.position(letters[(i + 1) % len])) ++descents;
  }
  if (descents == 1) return 1;
  if (descents == len - 1) return -1;
  return 0;
}

}  // namespace ccurves
