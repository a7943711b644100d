#include <algorithm>

#include "ccurves/linking.hpp"
#include "linking_detail.hpp"

namespace ccurves {

namespace {

std::vector<LinkedPair> brute_force(const CyclicWord& v, const CyclicWord& w, int cap_p, int cap_q, bool same_word,
                                    const SurfaceSymbol& o, OrientationMode mode) {
  std::vector<LinkedPair> out;
  const int lv = static_cast<int>(v.size()), lw = static_cast<int>(w.size());
  for (int ps = 0; ps < lv; ++ps) {
    for (int pl = 2; pl <= cap_p; ++pl) {
      const auto p = subword_at(v, static_cast<std::size_t>(ps), static_cast<std::size_t>(pl));
      for (int qs = 0; qs < lw; ++qs) {
        for (int ql = 2; ql <= cap_q; ++ql) {
          if (same_word && ps == qs && pl == ql) continue;
          const auto q = subword_at(w, static_cast<std::size_t>(qs), static_cast<std::size_t>(ql));
          if (auto c = classify(p, q, o, mode)) {
            out.push_back(detail::make_pair(c->kind, {ps, pl}, {qs, ql}, c->sign, lv, lw));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LinkedPair> lp1_reference(const CyclicWord& w, const SurfaceSymbol& o, const LinkOptions& opts) {
  require_alphabet(w, o);
  const int cap = static_cast<int>(w.size()) + opts.lp1_cap_extra;
  return brute_force(w, w, cap, cap, true, o, opts.orientation);
}

std::vector<LinkedPair> lp2_reference(const CyclicWord& v, const CyclicWord& w, const SurfaceSymbol& o,
                                      const LinkOptions& opts) {
  require_alphabet(v, o);
  require_alphabet(w, o);
  const int cap_p = power_window(v.size(), w.size(), opts.bound_slack) * static_cast<int>(v.size());
  const int cap_q = power_window(w.size(), v.size(), opts.bound_slack) * static_cast<int>(w.size());
  return brute_force(v, w, cap_p, cap_q, false, o, opts.orientation);
}

}  // namespace ccurves
