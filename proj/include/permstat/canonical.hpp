#ifndef PERMSTAT_CANONICAL_HPP
#define PERMSTAT_CANONICAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// Factor j of an S canonical word: s_j s_{j-1} ... s_r with 1 <= r <= j, or the
// identity when r == 0.
struct SFactor {
  int j = 1;
  int r = 0;

  bool empty() const { return r == 0; }
  int length() const { return empty() ? 0 : j - r + 1; }
  bool contains(int k) const { return !empty() && r <= k && k <= j; }
  friend bool operator==(const SFactor&, const SFactor&) = default;
};

enum class ALast { none, a1, a1_inverse };

// Factor j of an A canonical word: a_j a_{j-1} ... a_r. When r == 1 the final
// letter is a_1 or a_1^{-1} as given by `last`; otherwise last == none.
// r == 0 is the identity.
struct AFactor {
  int j = 1;
  int r = 0;
  ALast last = ALast::none;

  bool empty() const { return r == 0; }
  int length() const { return empty() ? 0 : j - r + 1; }
  // a_k occurs in the factor; a_1 and a_1^{-1} are pooled.
  bool contains(int k) const { return !empty() && r <= k && k <= j; }
  friend bool operator==(const AFactor&, const AFactor&) = default;
};

// w = w_1 ... w_{n-1}, w_j in R^S_j. factors[j-1] is w_j.
struct SCanonicalWord {
  int n = 1;
  std::vector<SFactor> factors;

  int length() const;
  friend bool operator==(const SCanonicalWord&, const SCanonicalWord&) = default;
};

// v = v_1 ... v_{m-2} in A_m, v_j in R^A_j. factors[j-1] is v_j.
struct ACanonicalWord {
  int m = 1;
  std::vector<AFactor> factors;

  int length() const;
  friend bool operator==(const ACanonicalWord&, const ACanonicalWord&) = default;
};

// A single generator letter: s_index, a_index or (index == 1 only) a_1^{-1}.
struct Letter {
  int index = 1;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

SCanonicalWord s_canonical(const Permutation& w);
// Throws std::domain_error for odd permutations.
ACanonicalWord a_canonical(const Permutation& v);

// Throw std::invalid_argument on a structurally invalid word.
Permutation to_permutation(const SCanonicalWord& word);
Permutation to_permutation(const ACanonicalWord& word);
void validate(const SCanonicalWord& word);
void validate(const ACanonicalWord& word);

// Total occurrences of s_k (resp. a_k^{+-1}); k must lie in the generator
// range of the ambient group, else std::out_of_range.
int occurrences(const SCanonicalWord& word, int k);
int occurrences(const ACanonicalWord& word, int k);

// epsilon_j = 1 iff s_1 (resp. a_1^{+-1}) occurs in factor j.
std::vector<int> epsilon_s(const Permutation& w);
std::vector<int> epsilon_a(const Permutation& v);
std::vector<int> epsilon(const SCanonicalWord& word);
std::vector<int> epsilon(const ACanonicalWord& word);

// (t_2(w), ..., t_n(w)) where t_j counts the i < j standing right of j.
std::vector<int> t_vector(const Permutation& w);

// The group elements making up R^S_j inside S_n and R^A_j inside A_m, in
// factor form, identity first.
std::vector<SFactor> staircase_s(int j);
std::vector<AFactor> staircase_a(int j);

Permutation factor_permutation(const SFactor& f, int n);
Permutation factor_permutation(const AFactor& f, int m);

// Flat letter sequences, factor by factor.
std::vector<Letter> letters(const SFactor& f);
std::vector<Letter> letters(const AFactor& f);
std::vector<Letter> letters(const SCanonicalWord& word);
std::vector<Letter> letters(const ACanonicalWord& word);

// "s1 | 1 | s3 s2 | s4 s3 s2" and "a1 | a2 a1^-1 | a3 a2 a1".
std::string to_string(const SCanonicalWord& word);
std::string to_string(const ACanonicalWord& word);
// "(s_1)(1)(s_3s_2)(s_4s_3s_2)" and "(a_1)(a_2a_1^{-1})(a_3a_2a_1)".
std::string to_subscript_string(const SCanonicalWord& word);
std::string to_subscript_string(const ACanonicalWord& word);

// Evaluates a flat word such as "s1 s2 s1" or "a1^-1 a2 a1". Factor bars and
// "1" tokens are ignored. The degree defaults to the smallest group holding
// every letter; pass `degree` to embed in a larger one.
Permutation evaluate_s_word(std::string_view text, int degree = 0);
Permutation evaluate_a_word(std::string_view text, int degree = 0);

}  // namespace permstat

#endif  // PERMSTAT_CANONICAL_HPP
