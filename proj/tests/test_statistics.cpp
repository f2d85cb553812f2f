#include "doctest.h"
#include "helpers.hpp"
#include "permstat/canonical.hpp"
#include "permstat/covering.hpp"
#include "permstat/statistics.hpp"

using namespace permstat;
using testing_util::P;
using Kind = MinVariant::Kind;

namespace {

// Inversion count by the quadratic definition.
int inversions_oracle(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.degree(); ++i)
    for (int j = i + 1; j <= p.degree(); ++j) c += p(i) > p(j);
  return c;
}

}  // namespace

TEST_CASE("length, descents, maj, rmaj") {
  CHECK(length_s(Permutation::identity(5)) == 0);
  CHECK(length_s(P("[2,5,4,1,3]")) == 6);
  CHECK(length_s(rho(6)) == 15);
  CHECK(des_set_s(P("[3,2,1]")) == std::vector<int>{1, 2});
  CHECK(maj_s(P("[3,2,1]")) == 3);
  CHECK(rmaj_s(P("[3,2,1]"), 3) == 3);
  CHECK(des_set_s(Permutation::identity(3)).empty());
  CHECK(maj_s(P("[1,3,2]")) == 2);
  CHECK(rmaj_s(P("[1,3,2]"), 3) == 1);
  // sequences with repeated letters
  const std::vector<int> u{2, 2, 1, 3, 1};
  CHECK(descent_set(u) == std::vector<int>{2, 4});
  CHECK(maj(u) == 6);
  CHECK(rmaj(u, 5) == 4);
  CHECK_THROWS_AS(rmaj(u, 3), std::invalid_argument);
}

TEST_CASE("descents agree with the length comparison") {
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [n](const Permutation& p) {
      CHECK(length_s(p) == inversions_oracle(p));
      std::vector<int> by_length;
      for (int i = 1; i < n; ++i)
        if (length_s(p) > length_s(p.times_adjacent(i))) by_length.push_back(i);
      CHECK(des_set_s(p) == by_length);
      CHECK(length_s(p) == s_canonical(p).length());
    });
}

TEST_CASE("left-to-right minima") {
  const auto p = P("[3,2,7,8,4,6,1,5]");
  CHECK(ltr_minima(p, {Kind::exclude_first_positions, 0}) == std::vector<int>{2, 7});
  CHECK(ltr_minima(p, {Kind::exclude_smallest_values, 0}) == std::vector<int>{1, 2});
  for (Kind k : {Kind::exclude_first_positions, Kind::exclude_smallest_values})
    for (int level = 0; level <= 2; ++level) CHECK(ltr_minima(Permutation::identity(6), {k, level}).empty());
}

TEST_CASE("delent") {
  CHECK(del_s(evaluate_s_word("s1 s2 s1 s3")) == 2);
  CHECK(del_s(Permutation::identity(4)) == 0);
  CHECK(del_s(P("[3,5,4,2,1]")) == 2);
  CHECK(del_set_s(P("[3,5,4,2,1]")) == std::vector<int>{4, 5});
  CHECK(length_s(P("[3,5,4,2,1]")) - length_a(P("[3,5,4,2,1]")) == 2);
  CHECK(del_a(evaluate_a_word("a1^-1 a2 a1 a3 a2 a1^-1")) == 3);
  CHECK(del_a(Permutation::identity(5)) == 0);
  CHECK(del_a(P("[3,5,4,2,1]")) == 3);
}

TEST_CASE("A statistics") {
  const auto v = P("[3,5,4,2,1]");
  CHECK(length_a(v) == 6);
  CHECK(des_set_a(Permutation::identity(5)).empty());
  CHECK(des_set_a(v) == des_set_s(P("[4,3,2,1]")));
  CHECK(des_set_a_by_length(v) == des_set_a(v));
  CHECK(rmaj_a(v, 4) == rmaj_s(P("[4,3,2,1]"), 4));
  CHECK_THROWS_AS(length_a(P("[2,1,3]")), std::domain_error);
  for (int m = 3; m <= 7; ++m)
    for_each_even_permutation(m, [](const Permutation& x) {
      CHECK(des_set_a_by_length(x) == des_set_a(x));
      CHECK(length_a(x) == a_canonical(x).length());
    });
}

TEST_CASE("minima characterisations") {
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [n](const Permutation& w) {
      const auto word = s_canonical(w);
      const auto winv = inverse(w);
      CHECK(del_s(w) == del_s(winv));
      CHECK(static_cast<int>(del_set_s(w).size()) == del_s(w));
      for (Kind k : {Kind::exclude_first_positions, Kind::exclude_smallest_values}) {
        CHECK(static_cast<int>(ltr_minima(w, {k, 0}).size()) == del_s(w));
        for (int level = 1; level <= 3 && level + 1 <= n - 1; ++level)
          CHECK(static_cast<int>(ltr_minima(w, {k, level}).size()) == occurrences(word, level + 1));
      }
      std::vector<int> from_eps;
      const auto eps = epsilon_s(w);
      for (std::size_t i = 0; i < eps.size(); ++i)
        if (eps[i]) from_eps.push_back(static_cast<int>(i) + 2);
      CHECK(del_set_s(winv) == from_eps);
    });
  for (int m = 3; m <= 7; ++m)
    for_each_even_permutation(m, [](const Permutation& v) {
      CHECK(del_a(v) == del_a(inverse(v)));
      CHECK(static_cast<int>(del_set_a(v).size()) == del_a(v));
      for (Kind k : {Kind::exclude_first_positions, Kind::exclude_smallest_values})
        CHECK(static_cast<int>(ltr_minima(v, {k, 1}).size()) == del_a(v));
    });
}

TEST_CASE("hatted statistics") {
  CHECK(h_map(Permutation::identity(4), 2) == Permutation::identity(4));
  CHECK(hat_ell(Permutation::identity(4), 2) == 0);
  CHECK(h_map(P("[2,3,1]"), 1) == P("[1,3,2]"));
  CHECK(hat_ell(P("[2,3,1]"), 1) == 1);
  CHECK(h_map(P("[3,1,2]"), 1) == P("[3,1,2]"));
  CHECK(hat_ell(P("[3,1,2]"), 1) == 2);
}

TEST_CASE("profiles") {
  const auto p = profile_s(P("[2,5,4,1,3]"));
  CHECK(p.length == 6);
  CHECK(p.del == 1);
  CHECK(p.n == 5);
  const auto a = profile_a(P("[3,5,4,2,1]"));
  CHECK(a.group == Group::A);
  CHECK(a.n == 4);
  CHECK(a.length == 6);
  CHECK(a.del == 3);
  CHECK(a.epsilon == std::vector<int>{1, 1, 1});
  CHECK(statistic_s("rmaj", P("[1,3,2]")) == 1);
  CHECK_THROWS_AS(statistic_s("charge", P("[1,3,2]")), std::invalid_argument);
}
