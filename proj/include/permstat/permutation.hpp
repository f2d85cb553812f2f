#ifndef PERMSTAT_PERMUTATION_HPP
#define PERMSTAT_PERMUTATION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

// Largest degree representable by a Permutation.
inline constexpr int kMaxDegree = 20;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bijection of {1..n} stored in one-line notation: images()[i-1] == pi(i).
// Values are immutable once constructed.
class Permutation {
 public:
  using value_type = std::uint8_t;

  // Throws std::invalid_argument unless `images` is a rearrangement of 1..n,
  // 1 <= n <= kMaxDegree.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  // The adjacent transposition s_i = (i, i+1) in S_n, 1 <= i < n.
  static Permutation adjacent(int i, int n);

  int degree() const { return static_cast<int>(images_.size()); }

  // 1-based evaluation pi(i).
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  std::span<const value_type> images() const { return images_; }
  std::vector<int> to_vector() const;

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // Right-multiplication by s_i swaps positions i and i+1.
  Permutation times_adjacent(int i) const;

  std::string to_string() const;

 private:
  Permutation() = default;
  std::vector<value_type> images_;

  friend class PermutationBuilder;
};

// Mutable scratch buffer for algorithms that permute positions in place.
// Produces a validated Permutation on finish().
class PermutationBuilder {
 public:
  explicit PermutationBuilder(const Permutation& p);
  explicit PermutationBuilder(int n);  // identity

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  int position_of(int value) const;

  // Right-multiply by s_i.
  void swap_positions(int i);
  // Move the entry at position `from` to position `to`, shifting the entries
  // in between by one. Equivalent to a run of adjacent swaps.
  void move_entry(int from, int to);

  Permutation finish() &&;

 private:
  std::vector<Permutation::value_type> images_;
};

// (alpha * beta)(k) = alpha(beta(k)). With this convention sigma * s_i swaps
// positions i, i+1 of sigma's one-line word.
Permutation compose(const Permutation& alpha, const Permutation& beta);
Permutation operator*(const Permutation& alpha, const Permutation& beta);

Permutation inverse(const Permutation& pi);

// Accepts "[2,5,4,1,3]", "2,5,4,1,3" or whitespace separated entries.
Permutation parse_one_line(std::string_view text);

int inversions(const Permutation& pi);
int sign(const Permutation& pi);
inline bool is_even(const Permutation& pi) { return sign(pi) == 1; }

// Positions i with pi(i) != i, ascending.
std::vector<int> support(const Permutation& pi);

// Number of cycles, fixed points included.
int cycle_count(const Permutation& pi);

// rho_n = (1,n)(2,n-1)..., the reversal [n, n-1, ..., 1].
Permutation rho(int n);
// nu_k = (1,k+1)(2,k+2)...(n-k,n) multiplied out; nu_k(j) = j + k for j <= n-k.
Permutation nu(int k, int n);
// rho_n * sigma * rho_n.
Permutation hat(const Permutation& sigma);

// Views a permutation of {1..m} as an element of S_n (n >= m) fixing m+1..n.
Permutation embed(const Permutation& pi, int n);

// Shifts a permutation of {1..m} onto the letters {offset+1..offset+m} inside
// S_n, fixing everything else.
Permutation shift_into(const Permutation& pi, int offset, int n);

// Calls fn on every permutation of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
// Same, restricted to even permutations.
void for_each_even_permutation(int n, const std::function<void(const Permutation&)>& fn);

std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> all_even_permutations(int n);

// n!, throwing std::overflow_error beyond 64 bits.
std::int64_t factorial(int n);

}  // namespace permstat

#endif  // PERMSTAT_PERMUTATION_HPP
