#include "permstat/shuffles.hpp"

#include <algorithm>
#include <stdexcept>

#include "permstat/canonical.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

ShuffleSet::ShuffleSet(int n_, std::vector<int> cuts_) : n(n_), cuts(std::move(cuts_)) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("shuffle degree out of range");
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (int c : cuts)
    if (c < 1 || c > n - 1)
      throw std::invalid_argument("cut " + std::to_string(c) + " outside [1, " +
                                  std::to_string(n - 1) + "]");
}

std::vector<int> ShuffleSet::block_sizes() const {
  std::vector<int> sizes;
  int prev = 0;
  for (int c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  return sizes;
}

bool is_b_shuffle(const Permutation& pi, const ShuffleSet& b) {
  if (pi.degree() != b.n) throw std::invalid_argument("degree mismatch with shuffle set");
  const Permutation pinv = inverse(pi);
  std::vector<bool> is_cut(static_cast<std::size_t>(b.n) + 1, false);
  for (int c : b.cuts) is_cut[static_cast<std::size_t>(c)] = true;
  for (int a = 1; a < b.n; ++a) {
    if (is_cut[static_cast<std::size_t>(a)]) continue;
    if (pinv(a) > pinv(a + 1)) return false;
  }
  return true;
}

namespace {

// Assign block `block` to a subset of the still-free positions.
void place_blocks(const std::vector<int>& sizes, std::size_t block, int first_letter,
                  std::vector<int>& image, const std::function<void(const Permutation&)>& fn) {
  if (block == sizes.size()) {
    fn(Permutation(image));
    return;
  }
  std::vector<int> free_positions;
  for (std::size_t p = 0; p < image.size(); ++p)
    if (image[p] == 0) free_positions.push_back(static_cast<int>(p));
  const int size = sizes[block];
  const int m = static_cast<int>(free_positions.size());
  std::vector<bool> choose(static_cast<std::size_t>(m), false);
  std::fill(choose.begin(), choose.begin() + size, true);
  do {
    int letter = first_letter;
    for (int k = 0; k < m; ++k)
      if (choose[static_cast<std::size_t>(k)])
        image[static_cast<std::size_t>(free_positions[static_cast<std::size_t>(k)])] = letter++;
    place_blocks(sizes, block + 1, first_letter + size, image, fn);
    for (int k = 0; k < m; ++k)
      if (choose[static_cast<std::size_t>(k)])
        image[static_cast<std::size_t>(free_positions[static_cast<std::size_t>(k)])] = 0;
  } while (std::prev_permutation(choose.begin(), choose.end()));
}

void require_support_within(const Permutation& pi, int i) {
  for (int p : support(pi))
    if (p > i)
      throw std::invalid_argument("supp(" + pi.to_string() + ") is not contained in [" +
                                  std::to_string(i) + "]");
}

}  // namespace

void for_each_b_shuffle(const ShuffleSet& b, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> image(static_cast<std::size_t>(b.n), 0);
  place_blocks(b.block_sizes(), 0, 1, image, fn);
}

std::vector<Permutation> enumerate_b_shuffles(const ShuffleSet& b) {
  std::vector<Permutation> out;
  for_each_b_shuffle(b, [&](const Permutation& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ShuffleFactor> decompose(const Permutation& pi, const ShuffleSet& b) {
  if (!is_b_shuffle(pi, b))
    throw std::invalid_argument(pi.to_string() + " is not a B-shuffle for the given cuts");
  std::vector<ShuffleFactor> factors(b.cuts.size(), ShuffleFactor{1, Permutation::identity(1)});
  std::vector<int> current = pi.to_vector();
  for (std::size_t idx = b.cuts.size(); idx-- > 0;) {
    const int cut = b.cuts[idx];
    // tau keeps the large letters in place and lists 1..cut in order on the
    // remaining positions; the leftover is the sequence of small letters.
    std::vector<int> tau(current.size());
    std::vector<int> rest;
    int rank = 0;
    for (std::size_t p = 0; p < current.size(); ++p) {
      if (current[p] > cut) {
        tau[p] = current[p];
      } else {
        tau[p] = ++rank;
        rest.push_back(current[p]);
      }
    }
    factors[idx] = {cut, Permutation(std::move(tau))};
    current = std::move(rest);
  }
  return factors;
}

Permutation recompose(const std::vector<ShuffleFactor>& factors, int n) {
  Permutation out = Permutation::identity(n);
  for (const auto& f : factors) out = out * embed(f.tau, n);
  return out;
}

Permutation g_map(const Permutation& sigma, int i) {
  const int n = sigma.degree();
  if (i < 1 || i > n - 1)
    throw std::out_of_range("g_" + std::to_string(i) + " undefined on S_" + std::to_string(n));
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int p = 1; p <= n; ++p) {
    const int a = sigma(p);
    if (a == i + 1) continue;
    out.push_back(a >= i + 2 ? a - 1 : a);
  }
  return Permutation(std::move(out));
}

MultiPoly shuffle_sum(const Permutation& pi, int i, ShuffleStat stat, FirstLetter first) {
  const int n = pi.degree();
  if (i < 1 || i > n - 1) throw std::out_of_range("shuffle cut outside [1, n-1]");
  require_support_within(pi, i);
  const int base = stat == ShuffleStat::rmaj ? rmaj_s(pi, i) : length_s(pi);
  MultiPoly sum;
  for_each_b_shuffle(ShuffleSet(n, {i}), [&](const Permutation& r) {
    const Permutation pr = pi * r;
    if (first == FirstLetter::equals_i_plus_1 && pr(1) != i + 1) return;
    if (first == FirstLetter::equals_pi_1 && pr(1) != pi(1)) return;
    const int value = stat == ShuffleStat::rmaj ? rmaj_s(pr, n) : length_s(pr);
    if (value < base) throw std::logic_error("negative exponent in shuffle sum");
    sum.add_term(exponents(value - base), 1);
  });
  return sum;
}

MultiPoly marked_shuffle_sum(const Permutation& sigma, int i, ShuffleStat stat) {
  const int n = sigma.degree();
  if (i < 1 || i > n - 1) throw std::out_of_range("shuffle cut outside [1, n-1]");
  require_support_within(sigma, i);
  MultiPoly sum(n - 1);
  for_each_b_shuffle(ShuffleSet(n, {i}), [&](const Permutation& r) {
    const Permutation sr = sigma * r;
    const int value = stat == ShuffleStat::rmaj ? rmaj_s(sr, n) : length_s(sr);
    sum.add_term(exponents(value, 0, epsilon_s(sr)), 1);
  });
  return sum;
}

}  // namespace permstat
