// Small shared fixtures for the unit tests.
#ifndef PERMSTAT_TEST_HELPERS_HPP
#define PERMSTAT_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/polynomial.hpp"

namespace testing_util {

inline permstat::Permutation P(const std::string& s) { return permstat::parse_one_line(s); }

inline permstat::Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return permstat::Permutation(v);
}

// Polynomial in q from a coefficient list, lowest degree first.
inline permstat::MultiPoly qpoly(const std::vector<long long>& coeffs) {
  permstat::MultiPoly p;
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    if (coeffs[e]) p.add_term(permstat::exponents(static_cast<int>(e)), coeffs[e]);
  return p;
}

}  // namespace testing_util

#endif
