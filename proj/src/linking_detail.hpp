#pragma once

#include "ccurves/linking.hpp"

namespace ccurves::detail {

// Fills in the anchors of a pair whose occurrences live in base words of
// lengths lv and lw.
LinkedPair make_pair(LinkKind kind, Occurrence p, Occurrence q, int sign, int lv, int lw);

}  // namespace ccurves::detail
