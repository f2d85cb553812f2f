#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "identity_internal.hpp"
#include "permstat/identities.hpp"
#include "permstat/statistics.hpp"

using namespace permstat;
using testing_util::qpoly;

namespace {

int cap_of(const std::string& name) {
  for (const auto& info : list_identities())
    if (info.name == name) return info.cap;
  throw std::invalid_argument("no entry " + name);
}

IdentityReport run(const std::string& name, int n, std::optional<int> i = {}, std::optional<int> k = {},
                   int jobs = 1) {
  VerifyOptions o;
  o.n = n;
  o.i = i;
  o.k = k;
  o.jobs = jobs;
  return verify(name, o);
}

}  // namespace

TEST_CASE("registry catalogue") {
  std::set<std::string> names;
  for (const auto& info : list_identities()) {
    CHECK(names.insert(info.name).second);
    CHECK(info.min_n >= 1);
    CHECK(info.cap >= info.min_n);
    CHECK_FALSE(info.statement.empty());
  }
  for (const char* required :
       {"macmahon", "fs-fixed-descent", "fs-rmaj", "thm61-s", "thm61-a", "thm62-s", "thm62-a", "prop56",
        "prop57-stirling-s", "prop57-stirling-a", "prop510-multivar-s", "prop510-multivar-a",
        "prop511-multivar", "prop712-sk-occurrences", "lemma63", "lemma64", "lemma65", "remark66", "prop67",
        "prop81", "lemma86", "lemma87", "lemma93", "garsia-gessel", "main-s", "main-a", "cor92-s", "cor92-a",
        "fiber-size", "appendix-hat"})
    CHECK_MESSAGE(names.count(required) == 1, required);
  CHECK(identity_info("appendix-hat").takes_i);
  CHECK_THROWS_AS(identity_info("nope"), std::invalid_argument);
}

TEST_CASE("small instances") {
  const auto s = run("thm61-s", 3);
  CHECK(s.pass);
  CHECK(s.lhs == MultiPoly::constant(1) + MultiPoly::q_power(1) + MultiPoly::monomial(1, 1, 1) +
                     MultiPoly::monomial(2, 2, 1) + MultiPoly::monomial(1, 3, 2));
  const auto a = run("thm61-a", 2);
  CHECK(a.pass);
  CHECK(a.lhs.to_string() == "1 + 2*q*t");
  const auto h = run("appendix-hat", 3, 1);
  CHECK(h.pass);
  CHECK(h.lhs == qpoly({1, 1, 1}));
  CHECK(h.params() == "n=3,i=1");
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(run("nope", 3), std::invalid_argument);
  CHECK_THROWS_AS(run("thm61-a", 1), std::invalid_argument);
  CHECK_THROWS_AS(run("macmahon", 21), std::invalid_argument);
  CHECK_THROWS_AS(run("macmahon", cap_of("macmahon") + 1), CapExceeded);
  CHECK_THROWS_AS(run("macmahon", 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(run("prop81", 4, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(run("prop81", 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(run("garsia-gessel", 4, {}, 0), std::invalid_argument);
  VerifyOptions forced;
  // Forcing skips the cap check; the bad i is rejected without scanning.
  forced.n = cap_of("macmahon") + 1;
  forced.i = 1;
  CHECK_THROWS_AS(verify("macmahon", forced), CapExceeded);
  forced.force = true;
  CHECK_THROWS_WITH_AS(verify("macmahon", forced), "macmahon takes no i parameter", std::invalid_argument);
}

TEST_CASE("every entry passes through n = 5, and pass matches lhs == rhs") {
  for (const auto& r : verify_all(5)) {
    CHECK_MESSAGE(r.pass, r.name << " " << r.params());
    CHECK(r.pass == (r.lhs == r.rhs));
    CHECK(r.failures.empty());
  }
}

TEST_CASE("parallel scans give identical reports") {
  for (const char* name : {"thm61-s", "thm61-a", "main-s", "cor92-a", "prop510-multivar-a"}) {
    const auto one = run(name, 6, {}, {}, 1);
    const auto many = run(name, 6, {}, {}, 4);
    CHECK(one.pass);
    CHECK(one.lhs == many.lhs);
    CHECK(one.rhs == many.rhs);
    CHECK(one.points == many.points);
    CHECK(one.elements_scanned == many.elements_scanned);
  }
}

TEST_CASE("checker reports the first failing point") {
  detail::Checker c;
  c.compare("a", qpoly({1}), qpoly({1}));
  c.compare("b", qpoly({1, 1}), qpoly({1, 2}));
  c.compare("c", qpoly({3}), qpoly({4}));
  IdentityReport r;
  c.finish(r);
  CHECK_FALSE(r.pass);
  CHECK(r.points == 3);
  CHECK(r.lhs == qpoly({1, 1}));
  CHECK(r.rhs == qpoly({1, 2}));
  REQUIRE(r.failures.size() == 2);
  CHECK(r.failures[0].rfind("b:", 0) == 0);
}

TEST_CASE("checker reports structural failures as counts") {
  detail::Checker c;
  c.compare("a", qpoly({1}), qpoly({1}));
  for (int k = 0; k < 10; ++k) c.expect(k != 3, [] { return std::string("bad element"); });
  IdentityReport r;
  c.finish(r);
  CHECK_FALSE(r.pass);
  CHECK(r.lhs == MultiPoly::constant(9));
  CHECK(r.rhs == MultiPoly::constant(10));
  CHECK(r.failures == std::vector<std::string>{"bad element"});
}

TEST_CASE("failure list is capped") {
  detail::Checker c;
  for (int k = 0; k < 20; ++k) c.compare(std::to_string(k), qpoly({k}), qpoly({k + 1}));
  IdentityReport r;
  c.finish(r);
  CHECK(r.failures.size() == IdentityReport::kMaxFailures);
}

TEST_CASE("maj_A cannot replace rmaj_A in the bivariate identity") {
  // Negative control: the same scan with maj_A must disagree with the product.
  const int n = 4;
  MultiPoly with_maj, rhs = MultiPoly::constant(1);
  for_each_even_permutation(n + 1, [&](const Permutation& v) {
    with_maj.add_term(exponents(maj_a(v), del_a(v)), 1);
  });
  for (int j = 1; j <= n - 1; ++j) rhs *= detail::staircase_factor(j, 2, 0);
  CHECK_FALSE(with_maj == rhs);
  CHECK(run("thm61-a", n).rhs == rhs);
}
