#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <tuple>
#include <utility>

#include "ccurves/words.hpp"

namespace ccurves {

using Integer = boost::multiprecision::cpp_int;

/// Finite integer combination of basis keys; zero coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using map_type = std::map<Key, Integer>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;

  void add(const Key& key, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Integer& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= scalar;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Integer(-1); }
  friend LinearCombination operator*(const Integer& s, LinearCombination a) { return a *= s; }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  Integer coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  // Terms counted with multiplicity.
  Integer norm1() const {
    Integer total = 0;
    for (const auto& [k, c] : terms_) total += abs(c);
    return total;
  }

 private:
  map_type terms_;
};

using WordPair = std::pair<CyclicWord, CyclicWord>;
using WordTriple = std::tuple<CyclicWord, CyclicWord, CyclicWord>;

using FormalSum = LinearCombination<CyclicWord>;
using TensorSum = LinearCombination<WordPair>;
using TripleSum = LinearCombination<WordTriple>;

inline FormalSum single(const CyclicWord& w, const Integer& coeff = 1) {
  FormalSum s;
  s.add(w, coeff);
  return s;
}

// s(a (x) b) = b (x) a
TensorSum swap_factors(const TensorSum& t);
// omega(u (x) v (x) w) = w (x) u (x) v
TripleSum rotate_factors(const TripleSum& t);

std::string to_string(const FormalSum& s);
std::string to_string(const TensorSum& t);
std::string to_string(const TripleSum& t);

}  // namespace ccurves
