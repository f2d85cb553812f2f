#ifndef PERMSTAT_COVERING_HPP
#define PERMSTAT_COVERING_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permstat/canonical.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

// f : A_{n+1} -> S_n. The A canonical word of v is mapped letterwise
// (a_1^{+-1} -> s_1, a_i -> s_i) and the resulting S canonical word evaluated.
Permutation f_map(const Permutation& v);
SCanonicalWord f_map(const ACanonicalWord& word);

// f^{-1}(w) inside A_{n+1}, obtained by choosing a_1 or a_1^{-1} for every s_1
// of the canonical word of w. Sorted lexicographically; 2^{del_S(w)} elements.
std::vector<Permutation> fiber(const Permutation& w);
// Streaming form of fiber(). Bit b of the branch counter selects a_1^{-1} for
// the b-th s_1 occurrence, so members arrive in branch order, not sorted.
void for_each_in_fiber(const Permutation& w, const std::function<void(const Permutation&)>& fn);

// A statistic on S_n paired with one on A_{n+1}.
struct FPairSpec {
  std::string name;
  std::string s_stat;
  std::string a_stat;
};

struct FPairReport {
  FPairSpec spec;
  int n = 0;
  bool pass = true;
  long long elements_checked = 0;
  // First v in A_{n+1} with a_stat(v) != s_stat(f(v)).
  std::optional<Permutation> counterexample;
  long long a_value = 0;
  long long s_value = 0;
};

// The five f-pairs (length, des, maj, rmaj, del).
std::vector<FPairSpec> standard_f_pairs();

// Exhaustive over A_{n+1}. Unknown statistic names throw std::invalid_argument.
FPairReport verify_f_pair(const FPairSpec& spec, int n);

}  // namespace permstat

#endif  // PERMSTAT_COVERING_HPP
