#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "permstat/canonical.hpp"
#include "permstat/covering.hpp"
#include "permstat/statistics.hpp"

using namespace permstat;
using testing_util::P;

TEST_CASE("f on examples") {
  CHECK(f_map(Permutation::identity(5)) == Permutation::identity(4));
  CHECK(f_map(P("[2,3,1]")) == P("[2,1]"));
  CHECK(f_map(P("[3,1,2]")) == P("[2,1]"));
  CHECK(f_map(P("[3,5,4,2,1]")) == evaluate_s_word("s1 s2 s1 s3 s2 s1"));
  // s1 . s2 s1 . s3 s2 s1 multiplies out to the reversal; its length 6 matches length_A(v).
  CHECK(f_map(P("[3,5,4,2,1]")) == P("[4,3,2,1]"));
}

TEST_CASE("fibers") {
  CHECK(fiber(Permutation::identity(4)) == std::vector<Permutation>{Permutation::identity(5)});
  CHECK(fiber(P("[2,1]")) == std::vector<Permutation>{P("[2,3,1]"), P("[3,1,2]")});
  CHECK(fiber(P("[2,5,4,1,3]")).size() == 2);
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> seen;
    std::int64_t total = 0;
    for_each_permutation(n, [&](const Permutation& w) {
      const auto members = fiber(w);
      CHECK(members.size() == (std::size_t{1} << del_s(w)));
      for (const auto& v : members) {
        CHECK(is_even(v));
        CHECK(f_map(v) == w);
        seen.insert(v);
      }
      total += static_cast<std::int64_t>(members.size());
    });
    const std::int64_t order = n + 1 >= 2 ? factorial(n + 1) / 2 : 1;
    CHECK(total == order);
    CHECK(static_cast<std::int64_t>(seen.size()) == order);
  }
}

TEST_CASE("f-pairs") {
  for (const auto& spec : standard_f_pairs())
    for (int n = 1; n <= 6; ++n) CHECK_MESSAGE(verify_f_pair(spec, n).pass, spec.name << " n=" << n);
  const auto bad = verify_f_pair({"mismatch", "length", "del"}, 3);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.counterexample.has_value());
  CHECK(statistic_a("del", *bad.counterexample) != statistic_s("length", f_map(*bad.counterexample)));
  CHECK_THROWS_AS(verify_f_pair({"x", "nope", "length"}, 3), std::invalid_argument);
}
