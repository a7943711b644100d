#include "ccurves/linking.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

#include "ccurves/errors.hpp"
#include "linking_detail.hpp"

namespace ccurves {

void require_alphabet(const CyclicWord& w, const SurfaceSymbol& o) {
  if (w.max_index() > o.rank()) {
    throw AlphabetMismatch("word " + to_string(w) + " uses generators outside A_" + std::to_string(o.rank()));
  }
}

int power_window(std::size_t lv, std::size_t lw, int slack) {
  return static_cast<int>((2 * lv + lw - 1) / lv) + slack;
}

namespace detail {

LinkedPair make_pair(LinkKind kind, Occurrence p, Occurrence q, int sign, int lv, int lw) {
  auto mod = [](int x, int n) { return ((x % n) + n) % n; };
  LinkedPair lp{kind, p, q, sign};
  lp.p2 = mod(p.start + p.length - 1, lv);
  lp.q2 = mod(q.start + q.length - 1, lw);
  if (kind != LinkKind::crossing) {
    lp.y_first_p = mod(p.start + 1, lv);
    lp.y_last_p = mod(p.start + p.length - 2, lv);
    lp.ybar_first_q = mod(q.start + 1, lw);
    lp.ybar_last_q = mod(q.start + q.length - 2, lw);
  }
  return lp;
}

}  // namespace detail

std::optional<Classification> classify(std::span<const Letter> p, std::span<const Letter> q,
                                       const SurfaceSymbol& o, OrientationMode mode) {
  if (p.size() < 2 || q.size() < 2) throw std::invalid_argument("linked-pair words need length >= 2");
  if (!is_freely_reduced(p) || !is_freely_reduced(q)) {
    throw std::invalid_argument("linked-pair words must be freely reduced");
  }
  const Letter p1 = p.front(), p2 = p.back(), q1 = q.front(), q2 = q.back();
  if (p.size() == 2 && q.size() == 2) {
    const std::array<Letter, 4> corner{p1.inverse(), q1.inverse(), p2, q2};
    const int s = cyclic_orientation(o, corner, mode);
    if (s == 0) return std::nullopt;
    return Classification{LinkKind::crossing, s};
  }
  if (p.size() != q.size() || p.size() < 3) return std::nullopt;

  const std::size_t m = p.size() - 2;
  auto ym = p.subspan(1, m);
  auto qm = q.subspan(1, m);
  const Letter x1 = ym.front(), x2 = ym.back();

  if (std::equal(ym.begin(), ym.end(), qm.begin())) {
    if (p1 == q1 || p2 == q2) return std::nullopt;
    const std::array<Letter, 3> head{p1.inverse(), q1.inverse(), x1};
    const std::array<Letter, 3> tail{p2, q2, x2.inverse()};
    const int s = cyclic_orientation(o, head, mode);
    if (s == 0 || s != cyclic_orientation(o, tail, mode)) return std::nullopt;
    return Classification{LinkKind::parallel, s};
  }

  bool inverted = true;
  for (std::size_t i = 0; i < m && inverted; ++i) inverted = qm[i] == ym[m - 1 - i].inverse();
  if (!inverted) return std::nullopt;
  if (p1 == q2.inverse() || p2 == q1.inverse()) return std::nullopt;
  const std::array<Letter, 3> head{q2, p1.inverse(), x1};
  const std::array<Letter, 3> tail{q1.inverse(), p2, x2.inverse()};
  const int s = cyclic_orientation(o, head, mode);
  if (s == 0 || s != cyclic_orientation(o, tail, mode)) return std::nullopt;
  return Classification{LinkKind::antiparallel, s};
}

namespace {

struct Periodic {
  std::span<const Letter> base;
  Letter operator()(long i) const {
    const auto n = static_cast<long>(base.size());
    const long r = i % n;
    return base[static_cast<std::size_t>(r < 0 ? r + n : r)];
  }
};

// Every linked pair is pinned down by two positions: kind 1 by the starts of
// P and Q, kind 2 by the letters before the common middle, kind 3 by the
// letter before Y in the first word and the last letter of its inverse in the
// second. The middle is then the longest agreement from those anchors, and
// the boundary inequalities of the definition are what stop it.
std::vector<LinkedPair> enumerate_linked(std::span<const Letter> vs, std::span<const Letter> ws, int cap_p,
                                         int cap_q, bool same_word, const SurfaceSymbol& o,
                                         OrientationMode mode) {
  std::vector<LinkedPair> out;
  const int cap = std::min(cap_p, cap_q);
  if (cap < 2) return out;
  const Periodic v{vs}, w{ws};
  const int lv = static_cast<int>(vs.size()), lw = static_cast<int>(ws.size());
  // Longest middle still inside both windows is cap - 2 letters.
  const int limit = cap - 1;

  for (int s = 0; s < lv; ++s) {
    const Letter p1 = v(s), x1 = v(s + 1);
    for (int t = 0; t < lw; ++t) {
      // Kind 1.
      if (!(same_word && s == t)) {
        const std::array<Letter, 4> corner{p1.inverse(), w(t).inverse(), x1, w(t + 1)};
        if (int sg = cyclic_orientation(o, corner, mode); sg != 0) {
          out.push_back(detail::make_pair(LinkKind::crossing, {s, 2}, {t, 2}, sg, lv, lw));
        }
      }
      // Kind 2: common middle starting after positions s and t.
      const Letter q1 = w(t);
      if (p1 != q1) {
        int m = 0;
        while (m < limit && v(s + 1 + m) == w(t + 1 + m)) ++m;
        if (m > 0 && m < limit) {
          const Letter p2 = v(s + 1 + m), q2 = w(t + 1 + m), x2 = v(s + m);
          const std::array<Letter, 3> head{p1.inverse(), q1.inverse(), x1};
          const std::array<Letter, 3> tail{p2, q2, x2.inverse()};
          const int sg = cyclic_orientation(o, head, mode);
          if (sg != 0 && sg == cyclic_orientation(o, tail, mode)) {
            out.push_back(detail::make_pair(LinkKind::parallel, {s, m + 2}, {t, m + 2}, sg, lv, lw));
          }
        }
      }
      // Kind 3: Y after position s, its inverse ending at position u = t.
      {
        const int u = t;
        int m = 0;
        while (m < limit && v(s + 1 + m) == w(u - m).inverse()) ++m;
        if (m > 0 && m < limit) {
          const Letter q1b = w(u - m), q2b = w(u + 1), p2 = v(s + 1 + m), x2 = v(s + m);
          if (p1 != q2b.inverse()) {
            const std::array<Letter, 3> head{q2b, p1.inverse(), x1};
            const std::array<Letter, 3> tail{q1b.inverse(), p2, x2.inverse()};
            const int sg = cyclic_orientation(o, head, mode);
            if (sg != 0 && sg == cyclic_orientation(o, tail, mode)) {
              const int qs = ((u - m) % lw + lw) % lw;
              out.push_back(detail::make_pair(LinkKind::antiparallel, {s, m + 2}, {qs, m + 2}, sg, lv, lw));
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LinkedPair> lp1(const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts) {
  require_alphabet(w, o);
  const int cap = static_cast<int>(w.size()) + opts.lp1_cap_extra;
  auto out = enumerate_linked(w.letters(), w.letters(), cap, cap, true, o, opts.orientation);
  assert(out.size() <= w.size() * (w.size() - 1) || opts.lp1_cap_extra > 0);
  return out;
}

std::vector<LinkedPair> lp2(const CyclicWord& v, const CyclicWord& w, const SurfaceSymbol& o,
                            const LinkOptions& opts) {
  require_alphabet(v, o);
  require_alphabet(w, o);
  const int cap_p = power_window(v.size(), w.size(), opts.bound_slack) * static_cast<int>(v.size());
  const int cap_q = power_window(w.size(), v.size(), opts.bound_slack) * static_cast<int>(w.size());
  auto out = enumerate_linked(v.letters(), w.letters(), cap_p, cap_q, false, o, opts.orientation);
  assert(out.size() <= v.size() * w.size() || opts.bound_slack > 0);
  return out;
}

}  // namespace ccurves
