#include "ccurves/topology.hpp"

#include <chrono>
#include <cstdlib>
#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccurves/errors.hpp"

namespace ccurves {

std::int64_t self_intersection_number(const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts) {
  if (!is_primitive(w)) throw NonPrimitive(to_string(w) + " is a proper power");
  return static_cast<std::int64_t>(lp1(w, o, opts).size() / 2);
}

std::int64_t intersection_number(const CyclicWord& v, const CyclicWord& w, const SurfaceSymbol& o,
                                 const LinkOptions& opts) {
  if (!is_primitive(v)) throw NonPrimitive(to_string(v) + " is a proper power");
  if (!is_primitive(w)) throw NonPrimitive(to_string(w) + " is a proper power");
  return static_cast<std::int64_t>(lp2(v, w, o, opts).size());
}

bool is_simple(const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts) {
  return is_primitive(w) && lp1(w, o, opts).empty();
}

bool no_cancellation_holds(const CyclicWord& v, const CyclicWord& w, const SurfaceSymbol& o,
                           const LinkOptions& opts) {
  return bracket(v, w, o, opts).norm1() == Integer(lp2(v, w, o, opts).size());
}

CyclicWord signed_power(const CyclicWord& w, int k) {
  if (k == 0) throw std::invalid_argument("exponent must be non-zero");
  return k > 0 ? power(w, k) : power(inverse(w), -k);
}

namespace {

struct Chunk {
  std::vector<Finding> findings;
  std::uint64_t scanned = 0;
  std::uint64_t primitive = 0;
  std::uint64_t simple = 0;
  std::uint64_t violations = 0;
  std::int64_t max_self_int = 0;
  std::exception_ptr error;
};

constexpr std::size_t kPrefixDepth = 3;

// Partitions each length class by canonical prefix, runs `visit` on every
// word, then merges chunk results in prefix order so the output does not
// depend on the thread count.
template <class Visit>
ScanReport run_scan(const SurfaceSymbol& o, std::size_t max_len, const ScanOptions& opts, Visit visit) {
  if (max_len < 1) throw std::invalid_argument("max length must be at least 1");
  if (opts.threads < 1) throw std::invalid_argument("thread count must be at least 1");
  const auto started = std::chrono::steady_clock::now();
  ScanReport report{o, max_len, {}, 0};
  for (std::size_t len = 1; len <= max_len; ++len) {
    const auto prefixes = enumeration_prefixes(o.rank(), len, kPrefixDepth);
    std::vector<Chunk> chunks(prefixes.size());
    const auto count = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.threads)
    for (long i = 0; i < count; ++i) {
      auto& chunk = chunks[static_cast<std::size_t>(i)];
      try {
        for_each_reduced(o.rank(), len, prefixes[static_cast<std::size_t>(i)],
                         [&](const CyclicWord& w) { visit(w, chunk); });
      } catch (...) {
        chunk.error = std::current_exception();
      }
    }
    for (auto& chunk : chunks) {
      if (chunk.error) std::rethrow_exception(chunk.error);
      report.words_scanned += chunk.scanned;
      report.primitive_words += chunk.primitive;
      report.simple_words += chunk.simple;
      report.violations += chunk.violations;
      report.max_self_int = std::max(report.max_self_int, chunk.max_self_int);
      for (auto& f : chunk.findings) {
        if (opts.sink) opts.sink(f);
        if (opts.retain_findings) report.findings.push_back(std::move(f));
      }
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace

ScanReport scan_cobracket_zero(const SurfaceSymbol& o, std::size_t max_len, const ScanOptions& opts) {
  return run_scan(o, max_len, opts, [&](const CyclicWord& w, Chunk& chunk) {
    ++chunk.scanned;
    const auto root = primitive_root(w);
    if (root.multiplicity == 1) {
      ++chunk.primitive;
    }
    if (!cobracket(w, o, opts.link).is_zero()) return;
    const auto pairs = lp1(root.root, o, opts.link);
    Finding f{w, true, pairs.empty(), static_cast<std::int64_t>(pairs.size() / 2), std::nullopt};
    if (root.multiplicity == 1 && pairs.empty()) ++chunk.simple;
    if (!f.root_simple) ++chunk.violations;
    chunk.max_self_int = std::max(chunk.max_self_int, *f.self_int);
    chunk.findings.push_back(std::move(f));
  });
}

ScanReport scan_bracket_inverse(const SurfaceSymbol& o, std::size_t max_len, const ScanOptions& opts) {
  const int n = opts.exponent_left, m = opts.exponent_right;
  if (n == 0 || m == 0 || n == m) throw std::invalid_argument("exponents must be distinct and non-zero");
  const auto scale = static_cast<std::int64_t>(2) * std::abs(n) * std::abs(m);
  return run_scan(o, max_len, opts, [&](const CyclicWord& v, Chunk& chunk) {
    ++chunk.scanned;
    if (!is_primitive(v)) return;
    ++chunk.primitive;
    const auto s = static_cast<std::int64_t>(lp1(v, o, opts.link).size() / 2);
    if (s == 0) ++chunk.simple;
    chunk.max_self_int = std::max(chunk.max_self_int, s);
    const auto t = bracket(signed_power(v, n), signed_power(v, m), o, opts.link).norm1();
    if (t == Integer(scale * s)) return;
    ++chunk.violations;
    chunk.findings.push_back(
        Finding{v, cobracket(v, o, opts.link).is_zero(), s == 0, s, t.convert_to<std::int64_t>()});
  });
}

}  // namespace ccurves
