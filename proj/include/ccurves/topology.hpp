#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ccurves/bialgebra.hpp"

namespace ccurves {

// Minimal self-intersection of a primitive class: |LP1(w)| / 2.
// Throws NonPrimitive for proper powers.
std::int64_t self_intersection_number(const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts = {});

// Minimal intersection of two primitive classes: |LP2(v, w)|.
std::int64_t intersection_number(const CyclicWord& v, const CyclicWord& w, const SurfaceSymbol& o,
                                 const LinkOptions& opts = {});

// Primitive with no linked pairs.
bool is_simple(const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts = {});

// Whether [v, w] counted with multiplicity matches |LP2(v, w)|.
bool no_cancellation_holds(const CyclicWord& v, const CyclicWord& w, const SurfaceSymbol& o,
                           const LinkOptions& opts = {});

struct Finding {
  CyclicWord word;
  bool cobracket_zero = false;
  bool root_simple = false;
  std::optional<std::int64_t> self_int;
  std::optional<std::int64_t> bracket_inverse_terms;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ScanReport {
  SurfaceSymbol surface;
  std::size_t max_length = 0;
  std::vector<Finding> findings;
  std::uint64_t words_scanned = 0;
  // Summary counters; which ones are filled depends on the scan.
  std::uint64_t primitive_words = 0;
  std::uint64_t simple_words = 0;
  std::uint64_t violations = 0;
  std::int64_t max_self_int = 0;
  double wall_seconds = 0.0;
};

struct ScanOptions {
  int threads = 1;
  LinkOptions link;
  // Findings are passed here in canonical order as they are merged.
  std::function<void(const Finding&)> sink;
  bool retain_findings = true;
  // Exponents (n, m) for the bracket scan: compares |[v^n, v^m]| with
  // 2|n m| s(v). Negative exponents use the inverse.
  int exponent_left = 1;
  int exponent_right = -1;
};

// Every word of length <= max_len with zero cobracket, tagged with whether its
// primitive root is simple and the root's self-intersection.
ScanReport scan_cobracket_zero(const SurfaceSymbol& o, std::size_t max_len, const ScanOptions& opts = {});

// Every primitive word of length <= max_len where the bracket term count
// differs from 2|n m| times its self-intersection.
ScanReport scan_bracket_inverse(const SurfaceSymbol& o, std::size_t max_len, const ScanOptions& opts = {});

// Signed power: w^k for k > 0, inverse(w)^|k| for k < 0.
CyclicWord signed_power(const CyclicWord& w, int k);

}  // namespace ccurves
