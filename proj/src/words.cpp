#include "ccurves/words.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "ccurves/errors.hpp"

namespace ccurves {

bool is_freely_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i + 1] == letters[i].inverse()) return false;
  }
  return true;
}

bool is_cyclically_reduced(std::span<const Letter> letters) {
  if (letters.empty()) return false;
  return is_freely_reduced(letters) && letters.back() != letters.front().inverse();
}

std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = s[(i + k) % n];
    Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

namespace {

std::vector<Letter> rotated(std::span<const Letter> s, std::size_t start) {
  std::vector<Letter> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[(start + i) % s.size()]);
  return out;
}

bool is_canonical_rotation(std::span<const Letter> s) {
  const std::size_t r = least_rotation(s);
  if (r == 0) return true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[(r + i) % s.size()] != s[i]) return false;
  }
  return true;
}

}  // namespace

int CyclicWord::max_index() const {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, x.index());
  return m;
}

CyclicWord make_cyclic(std::span<const Letter> tokens) {
  std::vector<Letter> stack;
  stack.reserve(tokens.size());
  for (Letter x : tokens) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[hi - 1] == stack[lo].inverse()) {
    ++lo;
    --hi;
  }
  if (hi == lo) throw TrivialClass("word reduces to the trivial class");
  std::span<const Letter> core(stack.data() + lo, hi - lo);
  return CyclicWord(rotated(core, least_rotation(core)));
}

CyclicWord canonical_from_reduced(std::span<const Letter> letters) {
  if (!is_cyclically_reduced(letters)) {
    throw std::logic_error("expected a cyclically reduced word: " + to_string(letters));
  }
  return CyclicWord(rotated(letters, least_rotation(letters)));
}

CyclicWord inverse(const CyclicWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back(it->inverse());
  return canonical_from_reduced(out);
}

CyclicWord power(const CyclicWord& w, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be at least 1");
  std::vector<Letter> out;
  out.reserve(w.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.letters().begin(), w.letters().end());
  return canonical_from_reduced(out);
}

PrimitiveRoot primitive_root(const CyclicWord& w) {
  const std::size_t n = w.size();
  auto s = w.letters();
  for (std::size_t period = 1; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = s[i] == s[i - period];
    if (periodic) {
      return {canonical_from_reduced(s.subspan(0, period)), static_cast<int>(n / period)};
    }
  }
  return {w, 1};
}

bool is_primitive(const CyclicWord& w) { return primitive_root(w).multiplicity == 1; }

LinearWord subword_at(const CyclicWord& w, std::size_t start, std::size_t len) {
  LinearWord out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(w.at(static_cast<std::ptrdiff_t>(start + i)));
  return out;
}

LinearWord rotation(const CyclicWord& w, std::size_t start) { return subword_at(w, start, w.size()); }

HomologyVector& HomologyVector::operator+=(const HomologyVector& other) {
  if (sums.size() < other.sums.size()) sums.resize(other.sums.size(), 0);
  for (std::size_t i = 0; i < other.sums.size(); ++i) sums[i] += other.sums[i];
  return *this;
}

bool HomologyVector::is_zero() const {
  return std::all_of(sums.begin(), sums.end(), [](std::int64_t s) { return s == 0; });
}

HomologyVector homology_vector(const CyclicWord& w, int rank) {
  if (w.max_index() > rank) throw AlphabetMismatch("word uses a generator beyond the alphabet rank");
  HomologyVector h{std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)};
  for (Letter x : w.letters()) h.sums[static_cast<std::size_t>(x.index() - 1)] += x.barred() ? -1 : 1;
  return h;
}

namespace {

// Depth-first extension in ascending letter order. Letters smaller than the
// first letter never occur in a least rotation, so they are pruned.
void extend(int rank, std::size_t length, std::vector<Letter>& buffer,
            const std::function<void(const CyclicWord&)>& visit) {
  if (buffer.size() == length) {
    if (buffer.back() != buffer.front().inverse() && is_canonical_rotation(buffer)) {
      visit(canonical_from_reduced(buffer));
    }
    return;
  }
  const std::uint16_t first = buffer.empty() ? 0 : buffer.front().code();
  const auto alphabet = static_cast<std::uint16_t>(2 * rank);
  for (std::uint16_t c = first; c < alphabet; ++c) {
    Letter x = Letter::from_code(c);
    if (!buffer.empty() && x == buffer.back().inverse()) continue;
    buffer.push_back(x);
    extend(rank, length, buffer, visit);
    buffer.pop_back();
  }
}

}  // namespace

void for_each_reduced(int rank, std::size_t length, std::span<const Letter> prefix,
                      const std::function<void(const CyclicWord&)>& visit) {
  if (rank < 1 || length < 1 || prefix.size() > length) return;
  for (Letter x : prefix) {
    if (x.index() > rank || x < prefix.front()) return;
  }
  if (!is_freely_reduced(prefix)) return;
  std::vector<Letter> buffer(prefix.begin(), prefix.end());
  buffer.reserve(length);
  extend(rank, length, buffer, visit);
}

std::vector<CyclicWord> enumerate_reduced(int rank, std::size_t max_len) {
  std::vector<CyclicWord> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for_each_reduced(rank, len, {}, [&](const CyclicWord& w) { out.push_back(w); });
  }
  return out;
}

std::vector<LinearWord> enumeration_prefixes(int rank, std::size_t length, std::size_t depth) {
  const std::size_t d = std::min(depth, length);
  std::vector<LinearWord> out;
  std::vector<Letter> buffer;
  const auto alphabet = static_cast<std::uint16_t>(2 * rank);
  std::function<void()> grow = [&] {
    if (buffer.size() == d) {
      out.push_back(buffer);
      return;
    }
    const std::uint16_t first = buffer.empty() ? 0 : buffer.front().code();
    for (std::uint16_t c = first; c < alphabet; ++c) {
      Letter x = Letter::from_code(c);
      if (!buffer.empty() && x == buffer.back().inverse()) continue;
      buffer.push_back(x);
      grow();
      buffer.pop_back();
    }
  };
  if (rank >= 1) grow();
  return out;
}

LinearWord parse_letters(std::string_view text) {
  LinearWord out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == '.' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  bool expect_token = true;
  while (i < text.size()) {
    if (is_sep(text[i])) {
      if (text[i] == '.' && expect_token) throw ParseError("empty token in word '" + std::string(text) + "'");
      if (text[i] == '.') expect_token = true;
      ++i;
      continue;
    }
    const char head = text[i];
    if (head != 'a' && head != 'A') {
      throw ParseError("unexpected character '" + std::string(1, head) + "' in word '" + std::string(text) + "'");
    }
    std::size_t j = i + 1;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    int index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i + 1, text.data() + j, index);
    if (ec != std::errc() || ptr != text.data() + j || index < 1 || index > 32767 || text[i + 1] == '0') {
      throw ParseError("bad generator index in word '" + std::string(text) + "'");
    }
    out.push_back(Letter::generator(index, head == 'A'));
    expect_token = false;
    i = j;
  }
  if (out.empty()) throw ParseError("empty word");
  if (expect_token) throw ParseError("trailing separator in word '" + std::string(text) + "'");
  return out;
}

CyclicWord parse_word(std::string_view text) { return make_cyclic(parse_letters(text)); }

std::string to_string(Letter x) { return (x.barred() ? "A" : "a") + std::to_string(x.index()); }

std::string to_string(std::span<const Letter> letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += '.';
    out += to_string(letters[i]);
  }
  return out;
}

std::string to_string(const CyclicWord& w) { return to_string(w.letters()); }

}  // namespace ccurves
