#include "ccurves/bialgebra.hpp"

#include <stdexcept>

#include "ccurves/errors.hpp"

namespace ccurves {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

LinearWord concat(LinearWord a, const LinearWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Throws unless `pair` is, occurrence for occurrence, a linked pair of
// (v, w) within the enumeration windows.
void verify_pair(const CyclicWord& v, const CyclicWord& w, const LinkedPair& pair, const SurfaceSymbol& o,
                 const LinkOptions& opts, bool same_word) {
  const int lv = static_cast<int>(v.size()), lw = static_cast<int>(w.size());
  int cap_p, cap_q;
  if (same_word) {
    cap_p = cap_q = lv + opts.lp1_cap_extra;
  } else {
    cap_p = power_window(v.size(), w.size(), opts.bound_slack) * lv;
    cap_q = power_window(w.size(), v.size(), opts.bound_slack) * lw;
  }
  const auto in_range = [](const Occurrence& x, int base, int cap) {
    return x.start >= 0 && x.start < base && x.length >= 2 && x.length <= cap;
  };
  if (!in_range(pair.p, lv, cap_p) || !in_range(pair.q, lw, cap_q) || (same_word && pair.p == pair.q)) {
    throw std::invalid_argument("pair occurrences do not belong to these words");
  }
  const auto p = subword_at(v, static_cast<std::size_t>(pair.p.start), static_cast<std::size_t>(pair.p.length));
  const auto q = subword_at(w, static_cast<std::size_t>(pair.q.start), static_cast<std::size_t>(pair.q.length));
  const auto c = classify(p, q, o, opts.orientation);
  if (!c || c->kind != pair.kind || c->sign != pair.sign) {
    throw std::invalid_argument("pair is not a linked pair of these words");
  }
  const int p2 = mod(pair.p.start + pair.p.length - 1, lv);
  const int q2 = mod(pair.q.start + pair.q.length - 1, lw);
  if (pair.p2 != p2 || pair.q2 != q2) throw std::invalid_argument("pair anchors are inconsistent");
}

WordPair delta_unchecked(const CyclicWord& w, const LinkedPair& pair) {
  const int l = static_cast<int>(w.size());
  LinearWord w1, w2;
  if (pair.kind == LinkKind::antiparallel) {
    // W1 runs from p2 through q1, W2 from q2 through p1.
    const int len1 = mod(pair.q.start - pair.p2, l) + 1;
    const int len2 = mod(pair.p.start - pair.q2, l) + 1;
    if (len1 + len2 != l - 2 * pair.middle_length()) {
      throw std::logic_error("antiparallel cut arcs overlap in " + to_string(w));
    }
    w1 = subword_at(w, static_cast<std::size_t>(pair.p2), static_cast<std::size_t>(len1));
    w2 = subword_at(w, static_cast<std::size_t>(pair.q2), static_cast<std::size_t>(len2));
  } else {
    // Cuts just before p2 and just before q2.
    const int len1 = mod(pair.q2 - pair.p2, l);
    if (len1 == 0) throw std::logic_error("cuts coincide in " + to_string(w));
    w1 = subword_at(w, static_cast<std::size_t>(pair.p2), static_cast<std::size_t>(len1));
    w2 = subword_at(w, static_cast<std::size_t>(pair.q2), static_cast<std::size_t>(l - len1));
  }
  return {canonical_from_reduced(w1), canonical_from_reduced(w2)};
}

CyclicWord gamma_unchecked(const CyclicWord& v, const CyclicWord& w, const LinkedPair& pair) {
  if (pair.kind != LinkKind::antiparallel) {
    // Full representatives of v and w, cut just before p2 and q2.
    return canonical_from_reduced(concat(rotation(v, static_cast<std::size_t>(pair.p2)),
                                         rotation(w, static_cast<std::size_t>(pair.q2))));
  }
  // Run around v from the start of Y, then around w from just after the end
  // of the inverse of Y. The trailing inverse of Y cancels the leading Y.
  // While Y fits inside both words this leaves exactly the arcs of v and w
  // after Y and its inverse; a longer Y cancels further into the periodic
  // extension, so the product is reduced in general.
  const auto product = concat(rotation(v, static_cast<std::size_t>(pair.y_first_p)),
                              rotation(w, static_cast<std::size_t>(pair.q2)));
  const auto m = static_cast<std::size_t>(pair.middle_length());
  CyclicWord out = [&] {
    try {
      return make_cyclic(product);
    } catch (const TrivialClass&) {
      throw std::logic_error("loop product is trivial for " + to_string(v) + ", " + to_string(w));
    }
  }();
  if (m <= v.size() && m <= w.size() && out.size() != v.size() + w.size() - 2 * m) {
    throw std::logic_error("loop product needed extra reduction for " + to_string(v) + ", " + to_string(w));
  }
  return out;
}

TensorSum tensor_left(const FormalSum& a, const CyclicWord& c) {
  TensorSum out;
  for (const auto& [x, k] : a) out.add({x, c}, k);
  return out;
}

TensorSum tensor_right(const CyclicWord& b, const FormalSum& a) {
  TensorSum out;
  for (const auto& [x, k] : a) out.add({b, x}, k);
  return out;
}

}  // namespace

WordPair delta_parts(const CyclicWord& w, const LinkedPair& pair, const SurfaceSymbol& o, const LinkOptions& opts) {
  require_alphabet(w, o);
  verify_pair(w, w, pair, o, opts, true);
  return delta_unchecked(w, pair);
}

CyclicWord gamma_word(const CyclicWord& v, const CyclicWord& w, const LinkedPair& pair, const SurfaceSymbol& o,
                      const LinkOptions& opts) {
  require_alphabet(v, o);
  require_alphabet(w, o);
  verify_pair(v, w, pair, o, opts, false);
  return gamma_unchecked(v, w, pair);
}

TensorSum cobracket(const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts) {
  TensorSum out;
  for (const auto& pair : lp1(w, o, opts)) out.add(delta_unchecked(w, pair), pair.sign);
  return out;
}

FormalSum bracket(const CyclicWord& v, const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts) {
  FormalSum out;
  for (const auto& pair : lp2(v, w, o, opts)) out.add(gamma_unchecked(v, w, pair), pair.sign);
  return out;
}

FormalSum bracket(const FormalSum& a, const FormalSum& b, const SurfaceSymbol& o, const LinkOptions& opts) {
  FormalSum out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      out += Integer(cx * cy) * bracket(x, y, o, opts);
    }
  }
  return out;
}

TensorSum cobracket(const FormalSum& a, const SurfaceSymbol& o, const LinkOptions& opts) {
  TensorSum out;
  for (const auto& [x, c] : a) out += c * cobracket(x, o, opts);
  return out;
}

TensorSum bracket(const FormalSum& a, const TensorSum& t, const SurfaceSymbol& o, const LinkOptions& opts) {
  TensorSum out;
  for (const auto& [bc, k] : t) {
    const auto& [b, c] = bc;
    out += k * tensor_left(bracket(a, single(b), o, opts), c);
    out += k * tensor_right(b, bracket(a, single(c), o, opts));
  }
  return out;
}

TensorSum bracket(const TensorSum& t, const FormalSum& a, const SurfaceSymbol& o, const LinkOptions& opts) {
  return -bracket(a, t, o, opts);
}

TensorSum swap_factors(const TensorSum& t) {
  TensorSum out;
  for (const auto& [ab, k] : t) out.add({ab.second, ab.first}, k);
  return out;
}

TripleSum rotate_factors(const TripleSum& t) {
  TripleSum out;
  for (const auto& [uvw, k] : t) {
    const auto& [u, v, w] = uvw;
    out.add({w, u, v}, k);
  }
  return out;
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::skew: return "skew";
    case Axiom::jacobi: return "jacobi";
    case Axiom::coskew: return "coskew";
    case Axiom::cojacobi: return "cojacobi";
    case Axiom::compatibility: return "compatibility";
    case Axiom::involutive: return "involutive";
  }
  return "?";
}

Axiom parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::skew, Axiom::jacobi, Axiom::coskew, Axiom::cojacobi, Axiom::compatibility,
                  Axiom::involutive}) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
}

int arity(Axiom a) {
  switch (a) {
    case Axiom::skew: return 2;
    case Axiom::jacobi: return 3;
    case Axiom::compatibility: return 2;
    default: return 1;
  }
}

AxiomResult check_axiom(Axiom axiom, const SurfaceSymbol& o, std::span<const CyclicWord> sample,
                        const LinkOptions& opts) {
  if (static_cast<int>(sample.size()) != arity(axiom)) {
    throw std::invalid_argument(to_string(axiom) + " takes " + std::to_string(arity(axiom)) + " words");
  }
  AxiomResult result{axiom, true, FormalSum{}, {}};
  switch (axiom) {
    case Axiom::skew: {
      const auto u = single(sample[0]), v = single(sample[1]);
      result.residual = bracket(u, v, o, opts) + bracket(v, u, o, opts);
      break;
    }
    case Axiom::jacobi: {
      const auto u = single(sample[0]), v = single(sample[1]), w = single(sample[2]);
      result.residual = bracket(u, bracket(v, w, o, opts), o, opts) + bracket(v, bracket(w, u, o, opts), o, opts) +
                        bracket(w, bracket(u, v, o, opts), o, opts);
      break;
    }
    case Axiom::coskew: {
      const auto d = cobracket(sample[0], o, opts);
      result.residual = d + swap_factors(d);
      break;
    }
    case Axiom::cojacobi: {
      TripleSum t;
      for (const auto& [xy, k] : cobracket(sample[0], o, opts)) {
        for (const auto& [yz, j] : cobracket(xy.second, o, opts)) {
          t.add({xy.first, yz.first, yz.second}, Integer(k * j));
        }
      }
      const auto t1 = rotate_factors(t);
      result.residual = t + t1 + rotate_factors(t1);
      break;
    }
    case Axiom::compatibility: {
      const auto a = single(sample[0]), b = single(sample[1]);
      result.residual = cobracket(bracket(a, b, o, opts), o, opts) - bracket(cobracket(a, o, opts), b, o, opts) -
                        bracket(a, cobracket(b, o, opts), o, opts);
      break;
    }
    case Axiom::involutive: {
      FormalSum total;
      for (const auto& [xy, k] : cobracket(sample[0], o, opts)) total += k * bracket(xy.first, xy.second, o, opts);
      result.residual = total;
      break;
    }
  }
  result.passed = std::visit([](const auto& r) { return r.is_zero(); }, result.residual);
  if (!result.passed) result.witness.assign(sample.begin(), sample.end());
  return result;
}

namespace {

template <class Sum, class Render>
std::string render_sum(const Sum& s, Render render) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : s) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude.str() + "*" + render(key);
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const FormalSum& s) {
  return render_sum(s, [](const CyclicWord& w) { return to_string(w); });
}

std::string to_string(const TensorSum& t) {
  return render_sum(t, [](const WordPair& p) { return "(" + to_string(p.first) + " (x) " + to_string(p.second) + ")"; });
}

std::string to_string(const TripleSum& t) {
  return render_sum(t, [](const WordTriple& p) {
    return "(" + to_string(std::get<0>(p)) + " (x) " + to_string(std::get<1>(p)) + " (x) " +
           to_string(std::get<2>(p)) + ")";
  });
}

}  // namespace ccurves
