#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qshuffle/cartan.hpp"

namespace qsh {

// A monomial theta_{i_1} ... theta_{i_N}, stored exactly as written:
// word[0] is the leftmost factor. All permutation conventions are expressed
// relative to this fixed storage order.
using Word = std::vector<int>;

// Basis keys of tensor spaces: one word per tensor slot.
using WordTuple = std::vector<Word>;

inline MultiDegree content(const Word& w, int rank) {
  MultiDegree nu(rank);
  for (int i : w) ++nu.v[i];
  return nu;
}

inline MultiDegree content(const WordTuple& t, int rank) {
  MultiDegree nu(rank);
  for (const Word& w : t)
    for (int i : w) ++nu.v[i];
  return nu;
}

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p) s += ".";
    s += std::to_string(w[p]);
  }
  return s;
}

// All words of the given content in lexicographic order.
inline std::vector<Word> word_basis(const MultiDegree& nu) {
  Word sorted;
  for (int i = 0; i < nu.rank(); ++i)
    for (int k = 0; k < nu[i]; ++k) sorted.push_back(i);
  std::vector<Word> out;
  if (sorted.empty()) {
    out.emplace_back();
    return out;
  }
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

// Sparse linear combinations with deterministic (lexicographic) term order.
template <class S>
using Lin = std::map<Word, S>;

template <class S>
using LinT = std::map<WordTuple, S>;

template <class K, class S>
void add_term(std::map<K, S>& m, const K& key, const S& coeff) {
  if (is_zero(coeff)) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (is_zero(it->second)) m.erase(it);
}

template <class K, class S>
void add_scaled(std::map<K, S>& m, const std::map<K, S>& other, const S& factor) {
  if (is_zero(factor)) return;
  for (const auto& [key, c] : other) add_term(m, key, S(c * factor));
}

template <class K, class S>
bool is_zero_element(const std::map<K, S>& m) {
  return m.empty();
}

template <class K, class S>
bool equal_elements(const std::map<K, S>& a, const std::map<K, S>& b) {
  std::map<K, S> diff = a;
  for (const auto& [key, c] : b) add_term(diff, key, S(-c));
  return diff.empty();
}

// The element must be homogeneous; returns its content.
template <class S>
MultiDegree homogeneous_content(const Lin<S>& x, int rank) {
  if (x.empty()) throw NonHomogeneousInput("zero element has no degree");
  MultiDegree nu = content(x.begin()->first, rank);
  for (const auto& [w, c] : x)
    if (content(w, rank) != nu)
      throw NonHomogeneousInput("element is not homogeneous");
  return nu;
}

}  // namespace qsh
