#ifndef PERMSTAT_POLYNOMIAL_HPP
#define PERMSTAT_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace permstat {

// Sparse polynomial with exact int64 coefficients in the variables
// q, t, t_1, ..., t_arity. Arithmetic that would overflow throws
// std::overflow_error instead of wrapping.
class MultiPoly {
 public:
  static constexpr int kMaxVariables = 24;  // q, t, t_1 .. t_22
  static constexpr int kMaxArity = kMaxVariables - 2;
  using Exponents = std::array<std::uint16_t, kMaxVariables>;
  using Coefficient = std::int64_t;

  // Total degree first, then exponent vectors lexicographically.
  struct CanonicalOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Coefficient, CanonicalOrder>;

  MultiPoly() = default;
  explicit MultiPoly(int arity);

  static MultiPoly constant(Coefficient c, int arity = 0);
  // coeff * q^qe * t^te * prod t_j^{tj[j-1]}
  static MultiPoly monomial(Coefficient coeff, int qe, int te = 0, std::span<const int> tj = {});
  static MultiPoly q_power(int e) { return monomial(1, e); }
  static MultiPoly t_power(int e) { return monomial(1, 0, e); }
  // t_j, 1 <= j <= kMaxArity.
  static MultiPoly t_var(int j);

  // Number of t_j variables. Operations on mixed arity lift the smaller
  // operand by zero padding; equality ignores arity.
  int arity() const { return arity_; }
  void set_arity(int arity);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, Coefficient c);
  Coefficient coefficient(const Exponents& e) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(Coefficient c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  // Substitutes integers for (q, t, t_1, ...); missing entries count as 0.
  Coefficient eval(std::span<const Coefficient> assignment) const;

  // The polynomial in the remaining variables multiplying t^k.
  MultiPoly t_coefficient(int k) const;
  int max_exponent(int variable) const;

  // Canonical text: "1 + 2*q*t + q^3*t^2". Zero prints as "0".
  std::string to_string() const;

 private:
  int arity_ = 0;
  Terms terms_;
};

std::string variable_name(int index);

// Exponent-vector builder.
MultiPoly::Exponents exponents(int qe, int te = 0, std::span<const int> tj = {});

// 1 + q + ... + q^{m-1}; [0]_q = 0.
MultiPoly q_integer(int m);
MultiPoly q_factorial(int n);
MultiPoly q_binomial(int n, int k);
// [n]!_q / ([n_1]!_q ... [n_r]!_q) by iterated exact division.
MultiPoly q_multinomial(int n, std::span<const int> parts);

// Exact division of polynomials in q alone. Throws std::logic_error when the
// divisor does not divide, std::invalid_argument when another variable occurs.
MultiPoly divide_exact_in_q(const MultiPoly& numerator, const MultiPoly& denominator);

// Checked integer helpers shared with the enumerators.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace permstat

#endif  // PERMSTAT_POLYNOMIAL_HPP
