#pragma once

#include <json.hpp>

#include "ccurves/bialgebra.hpp"
#include "ccurves/topology.hpp"

namespace ccurves {

using Json = nlohmann::ordered_json;

// Integer coefficients serialise as JSON integers; values beyond 64 bits
// fall back to decimal strings.
Json to_json(const Integer& c);

// [{"word": ..., "coeff": ...}], canonical term order; [] is zero.
Json to_json(const FormalSum& s);
// [{"left": ..., "right": ..., "coeff": ...}]
Json to_json(const TensorSum& t);
// {kind, p_start, p_len, q_start, q_len, sign}
Json to_json(const LinkedPair& pair);
// {word, length, cobracket_zero, root_simple, self_int, bracket_inverse_terms}
Json to_json(const Finding& f);

FormalSum formal_sum_from_json(const Json& j);
TensorSum tensor_sum_from_json(const Json& j);

}  // namespace ccurves
