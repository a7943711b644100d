#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccurves {

/// One symbol of the alphabet: a generator a_k or its inverse A_k.
///
/// Letters are totally ordered a1 < A1 < a2 < A2 < ...; the packed code
/// 2*(k-1) + barred realises that order directly.
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter generator(int index, bool barred = false) {
    return Letter(static_cast<std::uint16_t>(2 * (index - 1) + (barred ? 1 : 0)));
  }
  static constexpr Letter from_code(std::uint16_t code) { return Letter(code); }

  constexpr int index() const { return code_ / 2 + 1; }
  constexpr bool barred() const { return (code_ & 1u) != 0; }
  constexpr std::uint16_t code() const { return code_; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1u); }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::uint16_t code) : code_(code) {}
  std::uint16_t code_ = 0;
};

using LinearWord = std::vector<Letter>;

bool is_freely_reduced(std::span<const Letter> letters);
// Freely reduced, and the last letter does not cancel against the first.
bool is_cyclically_reduced(std::span<const Letter> letters);

// Index of the lexicographically least rotation (first one on ties).
std::size_t least_rotation(std::span<const Letter> letters);

/// A reduced cyclic word, stored as its lexicographically least rotation.
///
/// Ordering is by length, then lexicographic on the stored rotation; this is
/// the canonical term order used by sums and by enumeration.
class CyclicWord {
 public:
  std::size_t size() const { return letters_.size(); }
  std::span<const Letter> letters() const { return letters_; }

  // Letter of the bi-infinite periodic extension; any integer position.
  Letter at(std::ptrdiff_t position) const {
    auto n = static_cast<std::ptrdiff_t>(letters_.size());
    auto r = position % n;
    return letters_[static_cast<std::size_t>(r < 0 ? r + n : r)];
  }

  // Largest generator index that occurs.
  int max_index() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  friend CyclicWord make_cyclic(std::span<const Letter>);
  friend CyclicWord canonical_from_reduced(std::span<const Letter>);
  explicit CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

// Cyclically reduces the letters and returns the canonical word.
// Throws TrivialClass if nothing is left.
CyclicWord make_cyclic(std::span<const Letter> tokens);

// Skips reduction; the input must already be cyclically reduced and non-empty
// (checked, throws std::logic_error otherwise).
CyclicWord canonical_from_reduced(std::span<const Letter> letters);

CyclicWord inverse(const CyclicWord& w);
CyclicWord power(const CyclicWord& w, int k);

struct PrimitiveRoot {
  CyclicWord root;
  int multiplicity;
};
PrimitiveRoot primitive_root(const CyclicWord& w);
bool is_primitive(const CyclicWord& w);

// `len` letters of the periodic extension read from `start`.
LinearWord subword_at(const CyclicWord& w, std::size_t start, std::size_t len);

// Rotation of the stored representative starting at `start` (mod length).
LinearWord rotation(const CyclicWord& w, std::size_t start);

/// Exponent sums per generator.
struct HomologyVector {
  std::vector<std::int64_t> sums;

  HomologyVector& operator+=(const HomologyVector& other);
  friend HomologyVector operator+(HomologyVector a, const HomologyVector& b) { return a += b; }
  friend HomologyVector operator-(HomologyVector a) {
    for (auto& s : a.sums) s = -s;
    return a;
  }
  bool is_zero() const;
  friend bool operator==(const HomologyVector&, const HomologyVector&) = default;
};

HomologyVector homology_vector(const CyclicWord& w, int rank);

// Calls `visit` with every canonical reduced cyclic word of exactly `length`
// letters over A_rank whose stored form begins with `prefix`, in
// lexicographic order. An empty prefix visits the whole length class.
void for_each_reduced(int rank, std::size_t length, std::span<const Letter> prefix,
                      const std::function<void(const CyclicWord&)>& visit);

// All canonical reduced cyclic words of length 1..max_len, ordered by
// length then lexicographically.
std::vector<CyclicWord> enumerate_reduced(int rank, std::size_t max_len);

// Prefixes of length `depth` (clamped to `length`) that can begin a canonical
// word of the given length, in lexicographic order. Used to partition scans.
std::vector<LinearWord> enumeration_prefixes(int rank, std::size_t length, std::size_t depth);

// Text form: tokens a<k> / A<k> separated by '.' or whitespace.
LinearWord parse_letters(std::string_view text);
CyclicWord parse_word(std::string_view text);
std::string to_string(Letter x);
std::string to_string(std::span<const Letter> letters);
std::string to_string(const CyclicWord& w);

}  // namespace ccurves
