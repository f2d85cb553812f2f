#ifndef PERMSTAT_SHUFFLES_HPP
#define PERMSTAT_SHUFFLES_HPP

#include <functional>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {

// B = {i_1 < ... < i_k} inside [n-1]; cuts {1..n} into consecutive blocks
// [i_{j}+1, i_{j+1}] with i_0 = 0, i_{k+1} = n.
struct ShuffleSet {
  int n = 1;
  std::vector<int> cuts;

  // Sorts and deduplicates; throws std::invalid_argument unless cuts lie in [1, n-1].
  ShuffleSet(int n, std::vector<int> cuts);
  std::vector<int> block_sizes() const;
};

// Within every block the letters appear left to right in increasing order.
bool is_b_shuffle(const Permutation& pi, const ShuffleSet& b);

// All B-shuffles in lexicographic order, built block by block from position
// sets (multinomial many, no filtering of S_n).
std::vector<Permutation> enumerate_b_shuffles(const ShuffleSet& b);
void for_each_b_shuffle(const ShuffleSet& b, const std::function<void(const Permutation&)>& fn);

// pi = tau_1 ... tau_k with tau_j an {i_j}-shuffle of S_{i_{j+1}}.
struct ShuffleFactor {
  int cut = 1;      // i_j
  Permutation tau;  // degree i_{j+1}
};

// Throws std::invalid_argument if pi is not a B-shuffle. Blocks are peeled
// right to left.
std::vector<ShuffleFactor> decompose(const Permutation& pi, const ShuffleSet& b);
// Product of the factors embedded in S_n.
Permutation recompose(const std::vector<ShuffleFactor>& factors, int n);

// g_i : S_n -> S_{n-1}. Deletes the letter i+1 and lowers letters >= i+2 by one.
Permutation g_map(const Permutation& sigma, int i);

enum class ShuffleStat { rmaj, length };
enum class FirstLetter { any, equals_i_plus_1, equals_pi_1 };

// Sum over {i}-shuffles r of S_n with the first-letter filter applied to pi*r of
// q^{stat(pi r) - stat(pi)}. For rmaj the subtracted term is rmaj_{S_i}(pi).
// pi must satisfy supp(pi) within [i]; else std::invalid_argument.
MultiPoly shuffle_sum(const Permutation& pi, int i, ShuffleStat stat,
                      FirstLetter first = FirstLetter::any);

// Sum over {i}-shuffles r of q^{stat(sigma r)} * prod_j t_j^{eps_{S,j}(sigma r)},
// with rmaj taken in S_n.
MultiPoly marked_shuffle_sum(const Permutation& sigma, int i, ShuffleStat stat);

}  // namespace permstat

#endif  // PERMSTAT_SHUFFLES_HPP
