#pragma once

#include <optional>
#include <vector>

#include "ccurves/linking.hpp"

namespace support {

// Pairs whose occurrences spell the given letters.
inline std::vector<ccurves::LinkedPair> spelled(const std::vector<ccurves::LinkedPair>& pairs,
                                                const ccurves::CyclicWord& v, const ccurves::CyclicWord& w,
                                                const char* p, const char* q) {
  const auto pl = ccurves::parse_letters(p), ql = ccurves::parse_letters(q);
  std::vector<ccurves::LinkedPair> out;
  for (const auto& x : pairs) {
    if (ccurves::subword_at(v, static_cast<std::size_t>(x.p.start), static_cast<std::size_t>(x.p.length)) == pl &&
        ccurves::subword_at(w, static_cast<std::size_t>(x.q.start), static_cast<std::size_t>(x.q.length)) == ql) {
      out.push_back(x);
    }
  }
  return out;
}

inline std::optional<ccurves::LinkedPair> unique_spelled(const std::vector<ccurves::LinkedPair>& pairs,
                                                         const ccurves::CyclicWord& v, const ccurves::CyclicWord& w,
                                                         const char* p, const char* q) {
  auto found = spelled(pairs, v, w, p, q);
  if (found.size() != 1) return std::nullopt;
  return found.front();
}

}  // namespace support
