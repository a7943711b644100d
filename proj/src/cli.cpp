#include "ccurves/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "ccurves/errors.hpp"
#include "ccurves/io.hpp"
#include "ccurves/sampling.hpp"
#include "ccurves/topology.hpp"

namespace ccurves::cli {

namespace {

struct Settings {
  std::optional<int> genus;
  std::optional<int> boundary;
  std::string symbol;
  std::vector<std::string> words;
  bool json = false;
  int threads = 1;
  std::size_t max_len = 8;
  std::optional<std::uint64_t> seed;
  int samples = 500;
  int bound_slack = 0;
  bool strict_o = false;
  bool check = false;
  std::string output;
  std::vector<std::string> axioms;
  std::vector<int> exponents{1, -1};
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

SurfaceSymbol resolve_surface(const Settings& s) {
  const bool by_preset = s.genus || s.boundary;
  if (!s.symbol.empty() && by_preset) throw UsageError("give either --symbol or --genus/--boundary, not both");
  if (!s.symbol.empty()) return parse_symbol(s.symbol);
  if (!s.genus || !s.boundary) throw UsageError("a surface is required: --symbol S or --genus G --boundary B");
  return preset(*s.genus, *s.boundary);
}

std::vector<CyclicWord> resolve_words(const Settings& s, const SurfaceSymbol& o) {
  std::vector<CyclicWord> out;
  for (const auto& text : s.words) {
    auto w = parse_word(text);
    require_alphabet(w, o);
    out.push_back(std::move(w));
  }
  return out;
}

void require_words(const Settings& s, std::size_t lo, std::size_t hi) {
  if (s.words.size() < lo || s.words.size() > hi) {
    throw UsageError(lo == hi ? "expected " + std::to_string(lo) + " word(s)"
                              : "expected " + std::to_string(lo) + " to " + std::to_string(hi) + " words");
  }
}

LinkOptions link_options(const Settings& s) {
  LinkOptions opts;
  opts.orientation = s.strict_o ? OrientationMode::strict : OrientationMode::lenient;
  opts.bound_slack = s.bound_slack;
  return opts;
}

std::string describe(const CyclicWord& w, const Occurrence& occ) {
  return to_string(subword_at(w, static_cast<std::size_t>(occ.start), static_cast<std::size_t>(occ.length))) +
         " (start " + std::to_string(occ.start) + ", len " + std::to_string(occ.length) + ")";
}

int run_axioms(const Settings& s, const SurfaceSymbol& o, std::ostream& out) {
  if (!s.seed) throw UsageError("axioms requires --seed");
  if (s.samples < 1) throw UsageError("--samples must be positive");
  std::vector<Axiom> axioms;
  for (const auto& name : s.axioms) axioms.push_back(parse_axiom(name));
  if (axioms.empty()) axioms = all_axioms();
  const auto tallies = run_axiom_suite(o, *s.seed, s.samples, s.max_len, axioms, link_options(s));
  bool ok = true;
  Json j = Json::array();
  for (const auto& t : tallies) {
    ok = ok && t.failures == 0;
    Json rec{{"axiom", to_string(t.axiom)}, {"samples", t.samples}, {"failures", t.failures}};
    if (t.first_failure) {
      Json witness = Json::array();
      for (const auto& w : t.first_failure->witness) witness.push_back(to_string(w));
      rec["witness"] = witness;
    }
    if (s.json) {
      j.push_back(rec);
      continue;
    }
    out << to_string(t.axiom) << ": " << (t.failures == 0 ? "pass" : "FAIL") << " (" << t.samples - t.failures
        << "/" << t.samples << ")\n";
    if (t.first_failure) {
      out << "  witness:";
      for (const auto& w : t.first_failure->witness) out << ' ' << to_string(w);
      out << "\n  residual: "
          << std::visit([](const auto& r) { return to_string(r); }, t.first_failure->residual) << '\n';
    }
  }
  if (s.json) out << j.dump() << '\n';
  return ok ? kSuccess : kCheckFailed;
}

int run_scan(const std::string& name, const Settings& s, const SurfaceSymbol& o, std::ostream& out,
             std::ostream& err) {
  if (s.threads < 1) throw UsageError("--threads must be positive");
  if (s.max_len < 1) throw UsageError("--max-len must be positive");
  ScanOptions opts;
  opts.threads = s.threads;
  opts.link = link_options(s);
  opts.retain_findings = false;
  opts.sink = [&](const Finding& f) { out << to_json(f).dump() << '\n'; };
  const bool zero_scan = name == "scan-cobracket-zero";
  if (!zero_scan) {
    if (s.exponents.size() != 2) throw UsageError("--exponents takes two integers");
    opts.exponent_left = s.exponents[0];
    opts.exponent_right = s.exponents[1];
  }
  const ScanReport report = zero_scan ? scan_cobracket_zero(o, s.max_len, opts) : scan_bracket_inverse(o, s.max_len, opts);
  err << name << ": surface " << to_string(o) << ", lengths 1.." << s.max_len << ", " << report.words_scanned
      << " words (" << report.primitive_words << " primitive, " << report.simple_words << " simple), "
      << report.violations << (zero_scan ? " non-simple-root findings" : " violations")
      << ", max self-intersection " << report.max_self_int << ", " << std::fixed << std::setprecision(2)
      << report.wall_seconds << " s with " << s.threads << " thread(s)\n";
  return s.check && report.violations > 0 ? kCheckFailed : kSuccess;
}

int dispatch(const std::string& name, const Settings& s, std::ostream& out, std::ostream& err) {
  const auto o = resolve_surface(s);
  const auto opts = link_options(s);

  if (name == "surface-info") {
    require_words(s, 0, 0);
    const auto inv = invariants(o);
    if (s.json) {
      out << Json{{"symbol", to_string(o)},
                  {"rank", o.rank()},
                  {"euler_characteristic", inv.euler_characteristic},
                  {"boundary_components", inv.boundary_components},
                  {"genus", inv.genus}}
                 .dump()
          << '\n';
    } else {
      out << "symbol: " << to_string(o) << "\nrank: " << o.rank()
          << "\neuler characteristic: " << inv.euler_characteristic
          << "\nboundary components: " << inv.boundary_components << "\ngenus: " << inv.genus << '\n';
    }
    return kSuccess;
  }
  if (name == "axioms") {
    require_words(s, 0, 0);
    return run_axioms(s, o, out);
  }
  if (name == "scan-cobracket-zero" || name == "scan-bracket-inverse") {
    require_words(s, 0, 0);
    return run_scan(name, s, o, out, err);
  }

  if (name == "bracket" || name == "int") require_words(s, 2, 2);
  if (name == "cobracket" || name == "self-int" || name == "simple") require_words(s, 1, 1);
  if (name == "pairs") require_words(s, 1, 2);
  const auto words = resolve_words(s, o);

  if (name == "bracket") {
    const auto b = bracket(words[0], words[1], o, opts);
    out << (s.json ? to_json(b).dump() : to_string(b)) << '\n';
  } else if (name == "cobracket") {
    const auto d = cobracket(words[0], o, opts);
    out << (s.json ? to_json(d).dump() : to_string(d)) << '\n';
  } else if (name == "self-int") {
    const auto n = self_intersection_number(words[0], o, opts);
    out << (s.json ? Json{{"word", to_string(words[0])}, {"self_int", n}}.dump() : std::to_string(n)) << '\n';
  } else if (name == "int") {
    const auto n = intersection_number(words[0], words[1], o, opts);
    out << (s.json ? Json{{"words", {to_string(words[0]), to_string(words[1])}}, {"int", n}}.dump()
                   : std::to_string(n))
        << '\n';
  } else if (name == "simple") {
    const bool simple = is_simple(words[0], o, opts);
    out << (s.json ? Json{{"word", to_string(words[0])}, {"simple", simple}}.dump()
                   : std::string(simple ? "true" : "false"))
        << '\n';
  } else if (name == "pairs") {
    const bool single_word = words.size() == 1;
    const auto& v = words[0];
    const auto& w = single_word ? words[0] : words[1];
    const auto pairs = single_word ? lp1(v, o, opts) : lp2(v, w, o, opts);
    if (s.json) {
      Json j = Json::array();
      for (const auto& p : pairs) j.push_back(to_json(p));
      out << j.dump() << '\n';
    } else {
      for (const auto& p : pairs) {
        out << "kind " << static_cast<int>(p.kind) << " sign " << (p.sign > 0 ? "+1" : "-1") << "  P="
            << describe(v, p.p) << "  Q=" << describe(w, p.q) << '\n';
      }
    }
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Goldman bracket and Turaev cobracket of curves on surfaces, on reduced cyclic words", "ccurves"};
  app.require_subcommand(1);
  Settings s;

  const auto common = [&](CLI::App* sub, bool takes_words) {
    sub->add_option("--genus", s.genus, "Genus of the preset surface");
    sub->add_option("--boundary", s.boundary, "Boundary components of the preset surface");
    sub->add_option("--symbol", s.symbol, "Surface symbol, e.g. a1.a2.A1.A2");
    sub->add_flag("--json", s.json, "Machine-readable output");
    sub->add_option("--bound-slack", s.bound_slack, "Extra powers searched for pairs of words");
    sub->add_flag("--strict-o", s.strict_o, "Orientation vanishes on non-reduced cyclic words");
    sub->add_option("--output", s.output, "Write output to FILE instead of stdout");
    if (takes_words) sub->add_option("words", s.words, "Words such as a1.a1.A2");
  };

  const std::vector<std::pair<std::string, std::string>> simple_commands{
      {"bracket", "Bracket of two words"},
      {"cobracket", "Cobracket of one word"},
      {"self-int", "Minimal self-intersection number of a primitive word"},
      {"int", "Minimal intersection number of two primitive words"},
      {"simple", "Whether a word has a simple representative"},
      {"pairs", "Linked pairs of one word, or of two words"},
      {"surface-info", "Euler characteristic, boundary components and genus"},
  };
  for (const auto& [name, help] : simple_commands) common(app.add_subcommand(name, help), name != "surface-info");

  auto* axioms = app.add_subcommand("axioms", "Check the involutive Lie bialgebra identities on random samples");
  common(axioms, false);
  axioms->add_option("--seed", s.seed, "Sampler seed (required)");
  axioms->add_option("--samples", s.samples, "Samples per identity")->capture_default_str();
  axioms->add_option("--max-len", s.max_len, "Maximum sample word length")->capture_default_str();
  axioms->add_option("--axiom", s.axioms, "Restrict to these identities")
      ->check(CLI::IsMember({"skew", "jacobi", "coskew", "cojacobi", "compatibility", "involutive"}));

  for (const std::string name : {"scan-cobracket-zero", "scan-bracket-inverse"}) {
    auto* scan = app.add_subcommand(name, name == "scan-cobracket-zero"
                                              ? "List every word with zero cobracket"
                                              : "Compare bracket term counts with self-intersection");
    common(scan, false);
    scan->add_option("--max-len", s.max_len, "Longest word scanned")->required();
    scan->add_option("--threads", s.threads, "Worker threads")->capture_default_str();
    scan->add_flag("--check", s.check, "Exit with status 4 if the expectation is violated");
    if (name == "scan-bracket-inverse") {
      scan->add_option("--exponents", s.exponents, "Exponents n,m of [v^n, v^m]")->delimiter(',')->expected(2);
    }
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::ofstream file;
  if (!s.output.empty()) {
    file.open(s.output);
    if (!file) {
      err << "error: cannot open " << s.output << '\n';
      return kUsage;
    }
  }
  std::ostream& sink = s.output.empty() ? out : file;
  try {
    return dispatch(name, s, sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BadSymbol& e) {
    err << "invalid surface: " << e.what() << '\n';
    return kInvalidSurface;
  } catch (const BadSurface& e) {
    err << "invalid surface: " << e.what() << '\n';
    return kInvalidSurface;
  } catch (const ParseError& e) {
    err << "invalid word: " << e.what() << '\n';
    return kInvalidWord;
  } catch (const TrivialClass& e) {
    err << "invalid word: " << e.what() << '\n';
    return kInvalidWord;
  } catch (const AlphabetMismatch& e) {
    err << "invalid word: " << e.what() << '\n';
    return kInvalidWord;
  } catch (const NonPrimitive& e) {
    err << "invalid word: " << e.what() << '\n';
    return kInvalidWord;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ccurves::cli
