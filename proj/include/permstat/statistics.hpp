#ifndef PERMSTAT_STATISTICS_HPP
#define PERMSTAT_STATISTICS_HPP

#include <span>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// --- descent statistics on arbitrary integer sequences (letters may repeat) ---

std::vector<int> descent_set(std::span<const int> seq);
int maj(std::span<const int> seq);
// Sum of (n - i) over descents i. Throws std::invalid_argument when a descent
// i >= n.
int rmaj(std::span<const int> seq, int n);

// --- S statistics ---

int length_s(const Permutation& pi);
std::vector<int> des_set_s(const Permutation& pi);
int des_s(const Permutation& pi);
int maj_s(const Permutation& pi);
// rmaj_{S_n}; n is explicit because the statistic depends on the ambient group.
int rmaj_s(const Permutation& pi, int n);
inline int rmaj_s(const Permutation& pi) { return rmaj_s(pi, pi.degree()); }

// Minima with an exclusion rule. Level k admits positions i with at most k
// earlier smaller entries; level 0 are left-to-right minima, level 1 almost
// left-to-right minima, level 2 almost-almost ones.
struct MinVariant {
  enum class Kind { exclude_first_positions, exclude_smallest_values };
  Kind kind = Kind::exclude_first_positions;
  int level = 0;
};

// Qualifying positions, ascending. Positions 1..k+1 (or values 1..k+1) are
// excluded according to kind.
std::vector<int> ltr_minima(const Permutation& pi, MinVariant variant = {});

int del_s(const Permutation& pi);
std::vector<int> del_set_s(const Permutation& pi);

// --- A statistics, v in A_{n+1} (n = degree - 1). Odd input throws
// std::domain_error. ---

int length_a(const Permutation& v);
std::vector<int> des_set_a(const Permutation& v);
// {1 <= i <= n-1 | l_A(v) >= l_A(v a_i)}, evaluated literally.
std::vector<int> des_set_a_by_length(const Permutation& v);
int des_a(const Permutation& v);
int maj_a(const Permutation& v);
// rmaj_{A_{n+1}} with ambient parameter n.
int rmaj_a(const Permutation& v, int n);
inline int rmaj_a(const Permutation& v) { return rmaj_a(v, v.degree() - 1); }
int del_a(const Permutation& v);
std::vector<int> del_set_a(const Permutation& v);

// --- hatted statistics ---

// s_i * pi if i is a descent of pi^{-1}, otherwise pi. 1 <= i < n.
Permutation h_map(const Permutation& pi, int i);
int hat_ell(const Permutation& pi, int i);
int hat_maj(const Permutation& pi, int i);

// --- profiles ---

enum class Group { S, A };

struct StatProfile {
  Group group = Group::S;
  int n = 0;  // S_n, or A_{n+1}
  Permutation perm = Permutation::identity(1);
  int length = 0;
  std::vector<int> des_set;
  int des = 0;
  int maj = 0;
  int rmaj = 0;
  int del = 0;
  std::vector<int> del_set;
  std::vector<int> epsilon;
};

StatProfile profile_s(const Permutation& pi);
StatProfile profile_a(const Permutation& v);

// Statistic lookup by name: "length", "des", "maj", "rmaj", "del".
// Throws std::invalid_argument for other names.
long long statistic_s(const std::string& name, const Permutation& pi);
long long statistic_a(const std::string& name, const Permutation& v);

}  // namespace permstat

#endif  // PERMSTAT_STATISTICS_HPP
