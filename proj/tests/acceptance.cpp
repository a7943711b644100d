// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ccurves/io.hpp"
#include "ccurves/sampling.hpp"
#include "ccurves/topology.hpp"
#include "support.hpp"

using namespace ccurves;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

CyclicWord w(const char* text) { return parse_word(text); }

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

const SurfaceSymbol& genus2() {
  static const auto o = preset(2, 1);
  return o;
}

const SurfaceSymbol& pants() {
  static const auto o = parse_symbol("a1.A1.a2.A2");
  return o;
}

const SurfaceSymbol& torus() {
  static const auto o = preset(1, 1);
  return o;
}

Outcome example_d(const LinkOptions& opts) {
  Outcome r;
  const auto start = std::chrono::steady_clock::now();
  const auto v = w("a1.a2.a2.a3"), z = w("A2.A2");
  const auto b = bracket(v, z, genus2(), opts);
  const auto pairs = lp2(v, z, genus2(), opts);
  const double t = seconds_since(start);
  r.require(b == single(w("a3.a1"), -2), "bracket is " + to_string(b));
  r.require(pairs.size() == 2, std::to_string(pairs.size()) + " pairs");
  for (const auto& p : pairs) r.require(p.kind == LinkKind::antiparallel, "pair of kind " + std::to_string(int(p.kind)));
  r.require(t < 1.0, "took " + fmt_seconds(t));
  if (r.pass) r.detail = "[a1.a2.a2.a3, A2.A2] = " + to_string(b) + ", 2 antiparallel pairs, " + fmt_seconds(t);
  return r;
}

Outcome cut_examples(const LinkOptions& opts) {
  Outcome r;
  const auto x = w("a1.a2.A3.a1.a1.a3.A2.a1");
  const auto pairs = lp1(x, genus2(), opts);
  const auto check = [&](const char* p, const char* q, const WordPair& want) {
    const auto pair = support::unique_spelled(pairs, x, x, p, q);
    if (!pair) {
      r.require(false, std::string("(") + p + ", " + q + ") not linked");
      return;
    }
    const auto got = delta_parts(x, *pair, genus2(), opts);
    r.require(got == want, std::string("(") + p + ", " + q + ") cuts to " + to_string(got.first) + " | " +
                               to_string(got.second));
  };
  check("a2.A3", "A3.a1", {w("A3"), w("a1.a1.a3.A2.a1.a1.a2")});
  check("a1.a2.A3.a1", "a1.a3.A2.a1", {w("a1.a1"), w("a1.a1")});
  if (r.pass) r.detail = "A3 | a1.a1.a3.A2.a1.a1.a2 and a1.a1 | a1.a1";
  return r;
}

Outcome sharp(const LinkOptions& opts) {
  Outcome r;
  const auto x = w("a1.A3.a2");
  const auto one = lp1(x, genus2(), opts);
  r.require(one.size() == 6, "|LP1| = " + std::to_string(one.size()));
  for (auto [p, q] : {std::pair{"a1.A3", "A3.a2"}, {"a1.A3", "a2.a1"}, {"A3.a2", "a1.A3"}, {"A3.a2", "a2.a1"},
                      {"a2.a1", "a1.A3"}, {"a2.a1", "A3.a2"}}) {
    r.require(support::unique_spelled(one, x, x, p, q).has_value(), std::string("missing (") + p + ", " + q + ")");
  }
  const auto v = w("a1.A3"), z = w("a2.A4");
  const auto two = lp2(v, z, genus2(), opts);
  r.require(two.size() == 4, "|LP2| = " + std::to_string(two.size()));
  for (auto [p, q] : {std::pair{"a1.A3", "a2.A4"}, {"a1.A3", "A4.a2"}, {"A3.a1", "a2.A4"}, {"A3.a1", "A4.a2"}}) {
    r.require(support::unique_spelled(two, v, z, p, q).has_value(), std::string("missing (") + p + ", " + q + ")");
  }
  if (r.pass) r.detail = "|LP1(a1.A3.a2)| = 6 and |LP2(a1.A3, a2.A4)| = 4, all listed pairs present";
  return r;
}

Outcome first(const LinkOptions& opts) {
  Outcome r;
  const auto x = w("a1.a2.A3.a1.a1.a3.A2.a1");
  const auto pairs = lp1(x, genus2(), opts);
  struct Listed {
    const char* p;
    const char* q;
    LinkKind kind;
  };
  const Listed listed[] = {
      {"a2.A3", "A3.a1", LinkKind::crossing},
      {"A3.a1", "a2.A3", LinkKind::crossing},
      {"a2.A3", "a1.a3", LinkKind::crossing},
      {"a1.a3", "a2.A3", LinkKind::crossing},
      {"A3.a1", "a3.A2", LinkKind::crossing},
      {"a3.A2", "A3.a1", LinkKind::crossing},
      {"a1.a3", "a3.A2", LinkKind::crossing},
      {"a3.A2", "a1.a3", LinkKind::crossing},
      {"A3.a1.a1", "a1.a1.a3", LinkKind::parallel},
      {"a1.a1.a3", "A3.a1.a1", LinkKind::parallel},
      {"A2.a1.a1", "a1.a1.a2", LinkKind::parallel},
      {"a1.a1.a2", "A2.a1.a1", LinkKind::parallel},
      {"a1.a2.A3.a1", "a1.a3.A2.a1", LinkKind::antiparallel},
      {"a1.a3.A2.a1", "a1.a2.A3.a1", LinkKind::antiparallel},
  };
  int found = 0;
  for (const auto& l : listed) {
    const auto pair = support::unique_spelled(pairs, x, x, l.p, l.q);
    if (!pair) {
      r.require(false, std::string("(") + l.p + ", " + l.q + ") missing");
      continue;
    }
    r.require(pair->kind == l.kind, std::string("(") + l.p + ", " + l.q + ") has kind " + std::to_string(int(pair->kind)));
    ++found;
  }
  if (r.pass) r.detail = std::to_string(found) + " listed pairs present with their kinds, |LP1| = " + std::to_string(pairs.size());
  return r;
}

Outcome counter(const LinkOptions& opts) {
  Outcome r;
  const auto d = cobracket(w("a1.a1.a2.a2"), torus(), opts);
  r.require(d.is_zero(), "cobracket is " + to_string(d));
  int checked = 0;
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      LinearWord x(static_cast<std::size_t>(i), Letter::generator(1));
      x.insert(x.end(), static_cast<std::size_t>(j), Letter::generator(2));
      const auto word = make_cyclic(x);
      const auto s = self_intersection_number(word, torus(), opts);
      r.require(s == (i - 1) * (j - 1), to_string(word) + " has " + std::to_string(s));
      r.require(cobracket(word, torus(), opts).is_zero(), to_string(word) + " has nonzero cobracket");
      ++checked;
    }
  }
  if (r.pass) r.detail = "cobracket(a1.a1.a2.a2) = 0, s(a1^i a2^j) = (i-1)(j-1) on " + std::to_string(checked) + " words";
  return r;
}

Outcome more(const LinkOptions& opts) {
  Outcome r;
  const std::pair<const char*, std::int64_t> listed[] = {
      {"a3.a4.A3.a4", 1},
      {"a2.a3.a2.a3.A1.A1.A1", 2},
      {"a3.a1.A2.a3.a1.A2.a3.a1.A2.A2.A2", 2},
      {"A2.A2.a1.a1.a1.a1.a1.A2.a1.a1.a1.a1.a1", 8},
      {"A2.a3.a4.a4.a4.a4.a4.a1.A2.a3.a1", 4},
      {"a3.a1.a3.a1.a2.a2", 1},
  };
  std::string counts;
  for (const auto& [text, want] : listed) {
    const auto x = w(text);
    r.require(cobracket(x, genus2(), opts).is_zero(), std::string(text) + " has nonzero cobracket");
    const auto s = self_intersection_number(x, genus2(), opts);
    r.require(s == want, std::string(text) + " has self-intersection " + std::to_string(s));
    counts += (counts.empty() ? "" : ", ") + std::to_string(s);
  }
  if (r.pass) r.detail = "all six have zero cobracket; self-intersections " + counts;
  return r;
}

Outcome cancellation(const LinkOptions& opts) {
  Outcome r;
  struct Case {
    const SurfaceSymbol* o;
    const char* v;
    const char* x;
    std::int64_t i;
  };
  const Case cases[] = {{&pants(), "a1.A2.A2", "a1.A2", 2},
                        {&genus2(), "a1.A2.A4.a1.A2", "a1.A2.A4.A4", 2},
                        {&genus2(), "a1.a3.a3.a3.A2", "a1.a3.a3.A2", 4}};
  std::string got;
  for (const auto& c : cases) {
    const auto v = w(c.v), x = w(c.x);
    const auto b = bracket(v, x, *c.o, opts);
    const auto i = intersection_number(v, x, *c.o, opts);
    r.require(b.is_zero(), std::string("[") + c.v + ", " + c.x + "] = " + to_string(b));
    r.require(i == c.i, std::string(c.v) + ", " + c.x + " intersect " + std::to_string(i) + " times");
    r.require(!no_cancellation_holds(v, x, *c.o, opts), std::string(c.v) + ", " + c.x + " show no cancellation");
    got += (got.empty() ? "" : ", ") + std::to_string(i);
  }
  if (r.pass) r.detail = "brackets vanish with intersection numbers " + got;
  return r;
}

Outcome bounds() {
  Outcome r;
  std::mt19937_64 rng(20260);
  int draws = 0;
  for (const auto* o : {&torus(), &pants(), &genus2()}) {
    for (int i = 0; i < 1000; ++i) {
      const auto v = random_word(rng, o->rank(), 12), x = random_word(rng, o->rank(), 12);
      const auto one = lp1(v, *o).size(), two = lp2(v, x, *o).size();
      r.require(one <= v.size() * (v.size() - 1), "|LP1(" + to_string(v) + ")| = " + std::to_string(one));
      r.require(two <= v.size() * x.size(), "|LP2(" + to_string(v) + ", " + to_string(x) + ")| = " + std::to_string(two));
      ++draws;
    }
  }
  const auto s1 = lp1(w("a1.A3.a2"), genus2()).size(), s2 = lp2(w("a1.A3"), w("a2.A4"), genus2()).size();
  r.require(s1 == 3 * 2, "sharp LP1 bound not attained");
  r.require(s2 == 2 * 2, "sharp LP2 bound not attained");
  if (r.pass) r.detail = std::to_string(draws) + " draws within bounds; equality 6 = 3*2 and 4 = 2*2 on the sharp words";
  return r;
}

Outcome axioms() {
  Outcome r;
  const auto start = std::chrono::steady_clock::now();
  int total = 0;
  std::uint64_t seed = 1;
  for (const auto* o : {&torus(), &pants(), &genus2()}) {
    for (const auto& t : run_axiom_suite(*o, seed++, 500, 8, all_axioms(), {})) {
      r.require(t.samples >= 500, to_string(t.axiom) + " ran " + std::to_string(t.samples) + " samples");
      r.require(t.failures == 0, to_string(t.axiom) + " failed " + std::to_string(t.failures) + " times on " +
                                     to_string(*o));
      total += t.samples;
    }
  }
  const double t = seconds_since(start);
  r.require(t < 300.0, "took " + fmt_seconds(t));
  if (r.pass) r.detail = "6 identities x 500 samples x 3 surfaces, " + std::to_string(total) + " checks, " + fmt_seconds(t);
  return r;
}

Outcome no_cancellation() {
  Outcome r;
  const auto start = std::chrono::steady_clock::now();
  const auto& o = genus2();
  std::uint64_t pairs = 0, bad = 0;
  for (int g = 1; g <= 4; ++g) {
    const LinearWord letter{Letter::generator(g)};
    const auto v = make_cyclic(letter);
    if (!is_simple(v, o)) {
      r.require(false, to_string(v) + " is not simple");
      continue;
    }
    for (std::size_t len = 1; len <= 8; ++len) {
      const auto prefixes = enumeration_prefixes(4, len, 2);
      const auto count = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : pairs, bad)
      for (long i = 0; i < count; ++i) {
        for_each_reduced(4, len, prefixes[static_cast<std::size_t>(i)], [&](const CyclicWord& x) {
          ++pairs;
          if (!no_cancellation_holds(v, x, o)) ++bad;
        });
      }
    }
  }
  r.require(bad == 0, std::to_string(bad) + " pairs cancel");
  if (r.pass) r.detail = std::to_string(pairs) + " pairs (a1..a4 against all words up to length 8), " + fmt_seconds(seconds_since(start));
  return r;
}

Outcome attempt(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("threw: ") + e.what()};
  }
}

std::string serialize(const ScanReport& report, const std::string& findings) {
  std::ostringstream out;
  out << findings << "scanned " << report.words_scanned << " primitive " << report.primitive_words << " simple "
      << report.simple_words << " violations " << report.violations << " max_self_int " << report.max_self_int << '\n';
  return out.str();
}

struct ScanRun {
  ScanReport report;
  std::string bytes;
};

ScanRun run_scan(bool cobracket_scan, const SurfaceSymbol& o, std::size_t len, int threads) {
  std::string findings;
  ScanOptions opts;
  opts.threads = threads;
  opts.retain_findings = false;
  opts.sink = [&](const Finding& f) { findings += to_json(f).dump() + "\n"; };
  auto report = cobracket_scan ? scan_cobracket_zero(o, len, opts) : scan_bracket_inverse(o, len, opts);
  return {report, serialize(report, findings)};
}

}  // namespace

int main() {
  int failed = 0;
  const auto line = [&](int n, const std::string& title, const Outcome& r) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << " -- " << r.detail << std::endl;
    if (!r.pass) ++failed;
  };
  const LinkOptions lenient{};

  line(1, "bracket of a1.a2.a2.a3 with A2.A2", attempt([&] { return example_d(lenient); }));
  line(2, "cut words of two linked pairs", attempt([&] { return cut_examples(lenient); }));
  line(3, "sharp linked-pair counts", attempt([&] { return sharp(lenient); }));
  line(4, "listed linked pairs of a1.a2.A3.a1.a1.a3.A2.a1", attempt([&] { return first(lenient); }));
  line(5, "punctured torus: zero cobracket with (i-1)(j-1) crossings", attempt([&] { return counter(lenient); }));
  line(6, "genus two: zero cobracket with listed self-intersections", attempt([&] { return more(lenient); }));
  line(7, "vanishing brackets of intersecting pairs", attempt([&] { return cancellation(lenient); }));
  line(8, "linked-pair cardinality bounds", attempt(bounds));
  line(9, "Lie bialgebra identities on three surfaces", attempt(axioms));
  line(10, "no cancellation for generators on genus two", attempt(no_cancellation));

  const auto start11 = std::chrono::steady_clock::now();
  const auto s11 = run_scan(true, pants(), 12, 1);
  const double t11 = seconds_since(start11);
  {
    Outcome r;
    r.require(s11.report.violations == 0, std::to_string(s11.report.violations) +
                                              " zero-cobracket words whose root is not simple");
    if (r.pass) {
      r.detail = std::to_string(s11.report.words_scanned) + " words to length 12, every zero-cobracket word is a power of one of " +
                 std::to_string(s11.report.simple_words) + " simple words, " + fmt_seconds(t11) + " on 1 thread";
    }
    line(11, "three-punctured sphere cobracket scan", r);
  }

  const auto start12 = std::chrono::steady_clock::now();
  const auto s12 = run_scan(false, preset(1, 2), 8, 1);
  const double t12 = seconds_since(start12);
  {
    Outcome r;
    r.require(s12.report.violations == 0, std::to_string(s12.report.violations) + " violations");
    if (r.pass) {
      r.detail = std::to_string(s12.report.primitive_words) + " primitive words to length 8, terms of [v, inverse v] = 2 s(v) for all, " +
                 fmt_seconds(t12) + " on 1 thread";
    }
    line(12, "twice-punctured torus bracket-with-inverse scan", r);
  }

  {
    Outcome r;
    const std::tuple<int, int, SurfaceInvariants> cases[] = {
        {1, 1, {-1, 1, 1}}, {2, 1, {-3, 1, 2}}, {0, 3, {-1, 3, 0}}};
    for (const auto& [g, b, want] : cases) {
      const auto got = invariants(preset(g, b));
      r.require(got == want, "preset(" + std::to_string(g) + "," + std::to_string(b) + ") gives chi " +
                                 std::to_string(got.euler_characteristic) + " b " + std::to_string(got.boundary_components) +
                                 " g " + std::to_string(got.genus));
    }
    int presets = 0;
    for (int g = 0; g <= 5; ++g) {
      for (int b = 1; b <= 6; ++b) {
        if (2 * g + b - 1 < 1) continue;
        const auto inv = invariants(preset(g, b));
        r.require(inv == SurfaceInvariants{2 - 2 * g - b, b, g}, "preset(" + std::to_string(g) + "," + std::to_string(b) + ")");
        ++presets;
      }
    }
    if (r.pass) r.detail = "three listed presets match; " + std::to_string(presets) + " presets self-validate";
    line(13, "surface invariants", r);
  }

  {
    Outcome r;
    const auto a = run_scan(true, pants(), 12, 8);
    const auto b = run_scan(false, preset(1, 2), 8, 8);
    r.require(a.bytes == s11.bytes, "cobracket scan output differs between 1 and 8 threads");
    r.require(b.bytes == s12.bytes, "bracket scan output differs between 1 and 8 threads");
    if (r.pass) {
      r.detail = std::to_string(s11.bytes.size()) + " and " + std::to_string(s12.bytes.size()) +
                 " bytes identical at 1 and 8 threads";
    }
    line(14, "scan output independent of thread count", r);
  }

  // Informational: which examples survive the literal reduced-word reading
  // of the orientation function. These lines never affect the exit status.
  LinkOptions strict;
  strict.orientation = OrientationMode::strict;
  const std::pair<int, std::function<Outcome(const LinkOptions&)>> examples[] = {
      {1, example_d}, {2, cut_examples}, {3, sharp}, {4, first}, {5, counter}, {6, more}, {7, cancellation}};
  for (const auto& [n, f] : examples) {
    const auto r = attempt([&] { return f(strict); });
    std::cout << "info  strict orientation, criterion " << n << ": " << (r.pass ? "holds" : "fails -- " + r.detail)
              << std::endl;
  }

  std::cout << (failed == 0 ? "all 14 criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
