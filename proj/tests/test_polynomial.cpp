#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "permstat/polynomial.hpp"

using namespace permstat;
using testing_util::qpoly;

namespace {

MultiPoly random_poly(std::mt19937& rng, int arity) {
  std::uniform_int_distribution<int> e(0, 3), c(-5, 5), count(0, 5);
  MultiPoly p(arity);
  for (int k = count(rng); k > 0; --k) {
    std::vector<int> tj(static_cast<std::size_t>(arity));
    for (auto& x : tj) x = e(rng);
    p.add_term(exponents(e(rng), e(rng), tj), c(rng));
  }
  return p;
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(qpoly({1, 1}) + MultiPoly::q_power(1) == qpoly({1, 2}));
  const MultiPoly qt = MultiPoly::monomial(1, 1, 1);
  const MultiPoly lhs = (MultiPoly::constant(1) + qt) *
                        (qpoly({1, 1}) + MultiPoly::monomial(1, 2, 1));
  CHECK(lhs.to_string() == "1 + q + q*t + 2*q^2*t + q^3*t^2");
  const std::array<std::int64_t, 1> three{3};
  CHECK(qpoly({1, 2}).eval(three) == 7);
  CHECK((MultiPoly::constant(1) + MultiPoly::monomial(2, 1, 1)).to_string() == "1 + 2*q*t");
  CHECK(MultiPoly().to_string() == "0");
  CHECK((qpoly({1, 1}) - qpoly({1, 1})).is_zero());
  const int tj[] = {0, 2};
  CHECK(MultiPoly::monomial(-3, 1, 0, tj).to_string() == "-3*q*t2^2");
}

TEST_CASE("q-analogues") {
  CHECK(q_factorial(3) == qpoly({1, 2, 2, 1}));
  CHECK(q_factorial(0) == MultiPoly::constant(1));
  CHECK(q_binomial(4, 2) == qpoly({1, 1, 2, 1, 1}));
  CHECK(q_integer(0).is_zero());
  CHECK(q_binomial(3, 5).is_zero());
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, 0) == MultiPoly::constant(1));
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
      const std::array<std::int64_t, 1> one{1};
      CHECK(q_binomial(n, k).eval(one) == binomial(n, k));
      if (n >= 1 && k >= 1)
        CHECK(q_binomial(n, k) == q_binomial(n - 1, k - 1) + MultiPoly::q_power(k) * q_binomial(n - 1, k));
    }
  const int parts[] = {2, 1, 2};
  CHECK(q_multinomial(5, parts) * q_factorial(2) * q_factorial(2) == q_factorial(5));
  const int bad_parts[] = {2, 2};
  CHECK_THROWS_AS(q_multinomial(5, bad_parts), std::invalid_argument);
  CHECK_THROWS_AS(divide_exact_in_q(qpoly({1, 0, 1}), qpoly({1, 1})), std::logic_error);
  CHECK(divide_exact_in_q(qpoly({1, 0, -1}), qpoly({1, 1})) == qpoly({1, -1}));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int arity = trial % 3;
    const auto a = random_poly(rng, arity), b = random_poly(rng, arity), c = random_poly(rng, arity);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
  }
}

TEST_CASE("no stored zeros and canonical order") {
  MultiPoly p;
  p.add_term(exponents(2), 3);
  p.add_term(exponents(0, 1), 1);
  p.add_term(exponents(1), 2);
  p.add_term(exponents(2), -3);
  CHECK(p.term_count() == 2);
  CHECK(p.to_string() == "t + 2*q");
  CHECK(p.t_coefficient(1) == MultiPoly::constant(1));
  CHECK(p.max_exponent(0) == 1);
}

TEST_CASE("overflow is detected") {
  const MultiPoly big = MultiPoly::constant(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * MultiPoly::constant(4), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
}
