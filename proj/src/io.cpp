#include "ccurves/io.hpp"

#include <limits>

namespace ccurves {

Json to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return c.convert_to<std::int64_t>();
  }
  return c.str();
}

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

}  // namespace

Json to_json(const FormalSum& s) {
  Json out = Json::array();
  for (const auto& [w, c] : s) out.push_back({{"word", to_string(w)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const TensorSum& t) {
  Json out = Json::array();
  for (const auto& [p, c] : t) {
    out.push_back({{"left", to_string(p.first)}, {"right", to_string(p.second)}, {"coeff", to_json(c)}});
  }
  return out;
}

Json to_json(const LinkedPair& pair) {
  return {{"kind", static_cast<int>(pair.kind)}, {"p_start", pair.p.start}, {"p_len", pair.p.length},
          {"q_start", pair.q.start},             {"q_len", pair.q.length},   {"sign", pair.sign}};
}

Json to_json(const Finding& f) {
  Json j;
  j["word"] = to_string(f.word);
  j["length"] = f.word.size();
  j["cobracket_zero"] = f.cobracket_zero;
  j["root_simple"] = f.root_simple;
  j["self_int"] = f.self_int ? Json(*f.self_int) : Json(nullptr);
  j["bracket_inverse_terms"] = f.bracket_inverse_terms ? Json(*f.bracket_inverse_terms) : Json(nullptr);
  return j;
}

FormalSum formal_sum_from_json(const Json& j) {
  FormalSum s;
  for (const auto& term : j) s.add(parse_word(term.at("word").get<std::string>()), integer_from_json(term.at("coeff")));
  return s;
}

TensorSum tensor_sum_from_json(const Json& j) {
  TensorSum t;
  for (const auto& term : j) {
    t.add({parse_word(term.at("left").get<std::string>()), parse_word(term.at("right").get<std::string>())},
          integer_from_json(term.at("coeff")));
  }
  return t;
}

}  // namespace ccurves
