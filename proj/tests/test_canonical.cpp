#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "permstat/canonical.hpp"
#include "permstat/covering.hpp"
#include "permstat/statistics.hpp"

using namespace permstat;
using testing_util::P;

namespace {

// Oracle: every product w_1 ... w_{n-1} of staircase factors, keyed by the
// group element it evaluates to.
std::map<Permutation, SCanonicalWord> s_products(int n) {
  std::map<Permutation, SCanonicalWord> out;
  std::vector<SFactor> chosen;
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      Permutation p = Permutation::identity(n);
      for (const auto& f : chosen) p = p * factor_permutation(f, n);
      out.emplace(p, SCanonicalWord{n, chosen});
      return;
    }
    for (const auto& f : staircase_s(j)) {
      chosen.push_back(f);
      rec(j + 1);
      chosen.pop_back();
    }
  };
  rec(1);
  return out;
}

std::map<Permutation, ACanonicalWord> a_products(int m) {
  std::map<Permutation, ACanonicalWord> out;
  std::vector<AFactor> chosen;
  std::function<void(int)> rec = [&](int j) {
    if (j == m - 1 || m < 3) {
      Permutation p = Permutation::identity(m);
      for (const auto& f : chosen) p = p * factor_permutation(f, m);
      out.emplace(p, ACanonicalWord{m, chosen});
      return;
    }
    for (const auto& f : staircase_a(j)) {
      chosen.push_back(f);
      rec(j + 1);
      chosen.pop_back();
    }
  };
  rec(1);
  return out;
}

// Rewrites an even-length S word into A letters with s_i s_j = a_{i-1}^{-1} a_{j-1}
// (a_0 = 1) and evaluates the result.
Permutation via_substitution(const std::vector<Letter>& s_letters, int m) {
  std::string text;
  for (std::size_t k = 0; k + 1 < s_letters.size(); k += 2) {
    const int i = s_letters[k].index;
    const int j = s_letters[k + 1].index;
    // a_{i-1}^{-1}: for i-1 >= 2 a involution; a_1^{-1} explicitly; a_0 dropped.
    if (i - 1 == 1) text += " a1^-1";
    if (i - 1 >= 2) text += " a" + std::to_string(i - 1);
    if (j - 1 >= 1) text += " a" + std::to_string(j - 1);
  }
  return evaluate_a_word(text, m);
}

}  // namespace

TEST_CASE("worked examples") {
  const auto w = s_canonical(P("[2,5,4,1,3]"));
  CHECK(to_string(w) == "s1 | 1 | s3 s2 | s4 s3 s2");
  CHECK(to_subscript_string(w) == "(s_1)(1)(s_3s_2)(s_4s_3s_2)");
  CHECK(to_permutation(w) == P("[2,5,4,1,3]"));
  const auto v = a_canonical(P("[3,5,4,2,1]"));
  CHECK(to_string(v) == "a1 | a2 a1^-1 | a3 a2 a1");
  CHECK(to_subscript_string(v) == "(a_1)(a_2a_1^{-1})(a_3a_2a_1)");
  CHECK(to_permutation(v) == P("[3,5,4,2,1]"));
  CHECK(to_string(s_canonical(P("[2,1,3]"))) == "s1 | 1");
  CHECK(to_string(a_canonical(P("[2,3,1]"))) == "a1");
  CHECK(to_string(a_canonical(P("[3,1,2]"))) == "a1^-1");
  for (const auto& f : s_canonical(Permutation::identity(5)).factors) CHECK(f.empty());
  for (const auto& f : a_canonical(Permutation::identity(5)).factors) CHECK(f.empty());
  CHECK(to_permutation(SCanonicalWord{5, s_canonical(Permutation::identity(5)).factors}) ==
        Permutation::identity(5));
  CHECK_THROWS_AS(a_canonical(P("[2,1,3]")), std::domain_error);
}

TEST_CASE("words evaluate letter by letter") {
  CHECK(evaluate_s_word("s1 | 1 | s3 s2 | s4 s3 s2") == P("[2,5,4,1,3]"));
  CHECK(evaluate_a_word("a1 | a2 a1^-1 | a3 a2 a1") == P("[3,5,4,2,1]"));
  CHECK(evaluate_a_word("a_2 a_1^{-1}", 4) == evaluate_a_word("a2 a1^-1", 4));
  CHECK(evaluate_s_word("s1 s2") == P("[2,3,1]"));  // = a_1
  CHECK(evaluate_a_word("a1") == P("[2,3,1]"));
  CHECK_THROWS_AS(evaluate_s_word("s1 x2"), ParseError);
  CHECK_THROWS_AS(evaluate_a_word("a2^-1 a1^2"), ParseError);
}

TEST_CASE("S canonical form agrees with the product oracle") {
  for (int n = 1; n <= 6; ++n) {
    const auto products = s_products(n);
    CHECK(static_cast<std::int64_t>(products.size()) == factorial(n));
    for (const auto& [p, word] : products) CHECK(s_canonical(p) == word);
  }
}

TEST_CASE("A canonical form agrees with the product oracle and the substitution rewrite") {
  for (int m = 1; m <= 7; ++m) {
    const auto products = a_products(m);
    CHECK(static_cast<std::int64_t>(products.size()) == (m < 2 ? 1 : factorial(m) / 2));
    for (const auto& [v, word] : products) {
      CHECK(a_canonical(v) == word);
      if (m >= 3) CHECK(via_substitution(letters(s_canonical(v)), m) == v);
    }
  }
}

TEST_CASE("staircase sets") {
  for (int j = 1; j <= 8; ++j) {
    CHECK(staircase_s(j).size() == static_cast<std::size_t>(j + 1));
    CHECK(staircase_a(j).size() == static_cast<std::size_t>(j + 2));
  }
  // R^A_1 = {1, a1, a1^-1}
  std::set<Permutation> r1;
  for (const auto& f : staircase_a(1)) r1.insert(factor_permutation(f, 3));
  CHECK(r1 == std::set<Permutation>{P("[1,2,3]"), P("[2,3,1]"), P("[3,1,2]")});
}

TEST_CASE("validate rejects malformed words") {
  CHECK_THROWS_AS(to_permutation(SCanonicalWord{3, {{1, 2}, {2, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(to_permutation(SCanonicalWord{3, {{1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(to_permutation(ACanonicalWord{4, {{1, 1, ALast::none}, {2, 0, ALast::none}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(to_permutation(ACanonicalWord{4, {{1, 0, ALast::none}, {2, 2, ALast::a1}}}),
                  std::invalid_argument);
}

TEST_CASE("occurrence counts") {
  const auto w = s_canonical(evaluate_s_word("s1 s2 s1 s3"));
  CHECK(occurrences(w, 1) == 2);
  const auto v = a_canonical(evaluate_a_word("a1^-1 a2 a1 a3 a2 a1^-1"));
  CHECK(occurrences(v, 1) == 3);
  CHECK(occurrences(s_canonical(Permutation::identity(4)), 2) == 0);
  CHECK_THROWS_AS(occurrences(w, 4), std::out_of_range);
  // occurrences are inversion-invariant
  for (int n = 2; n <= 7; ++n)
    for_each_permutation(n, [n](const Permutation& p) {
      const auto a = s_canonical(p);
      const auto b = s_canonical(inverse(p));
      for (int k = 1; k <= n - 1; ++k) CHECK(occurrences(a, k) == occurrences(b, k));
    });
  for (int m = 3; m <= 7; ++m)
    for_each_even_permutation(m, [m](const Permutation& v) {
      const auto a = a_canonical(v);
      const auto b = a_canonical(inverse(v));
      for (int k = 1; k <= m - 2; ++k) CHECK(occurrences(a, k) == occurrences(b, k));
    });
}

TEST_CASE("epsilon and t vectors") {
  CHECK(epsilon_s(P("[2,5,4,1,3]")) == std::vector<int>{1, 0, 0, 0});
  CHECK(epsilon_s(Permutation::identity(4)) == std::vector<int>{0, 0, 0});
  CHECK(epsilon_a(P("[3,5,4,2,1]")) == std::vector<int>{1, 1, 1});
  CHECK(t_vector(Permutation::identity(4)) == std::vector<int>{0, 0, 0});
  CHECK(t_vector(P("[2,5,4,1,3]")) == std::vector<int>{1, 0, 2, 3});
  CHECK(t_vector(P("[2,1]")) == std::vector<int>{1});
  // factor lengths are the t-values; a full factor carries s_1
  for (int n = 2; n <= 7; ++n)
    for_each_permutation(n, [n](const Permutation& p) {
      const auto word = s_canonical(p);
      const auto t = t_vector(p);
      const auto eps = epsilon_s(p);
      for (int j = 1; j <= n - 1; ++j) {
        const auto& f = word.factors[static_cast<std::size_t>(j - 1)];
        CHECK(f.length() == t[static_cast<std::size_t>(j - 1)]);
        CHECK((t[static_cast<std::size_t>(j - 1)] == j) == (eps[static_cast<std::size_t>(j - 1)] == 1));
      }
    });
}

TEST_CASE("A factor lengths drop by one exactly where the S factor is full") {
  for (int m = 3; m <= 8; ++m)
    for_each_even_permutation(m, [m](const Permutation& v) {
      const auto a = a_canonical(v);
      const auto s = s_canonical(v);
      for (int i = 1; i <= m - 2; ++i) {
        const auto& wf = s.factors[static_cast<std::size_t>(i)];  // w_{i+1}
        const int expected = wf.length() - (wf.contains(1) ? 1 : 0);
        CHECK(a.factors[static_cast<std::size_t>(i - 1)].length() == expected);
      }
      CHECK(length_a(v) == length_s(v) - del_s(v));
    });
}
