#include "permstat/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace permstat {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in multiplication");
  return out;
}

namespace {

int total_degree(const MultiPoly::Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

std::uint16_t to_exponent(int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e > 0xFFFF) throw std::overflow_error("exponent exceeds 65535");
  return static_cast<std::uint16_t>(e);
}

int highest_variable(const MultiPoly::Exponents& e) {
  for (int v = MultiPoly::kMaxVariables - 1; v >= 0; --v)
    if (e[static_cast<std::size_t>(v)] != 0) return v;
  return -1;
}

}  // namespace

bool MultiPoly::CanonicalOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(int arity) { set_arity(arity); }

void MultiPoly::set_arity(int arity) {
  if (arity < 0 || arity > kMaxArity)
    throw std::invalid_argument("arity " + std::to_string(arity) + " outside [0, " +
                                std::to_string(kMaxArity) + "]");
  for (const auto& [e, c] : terms_)
    if (highest_variable(e) - 1 > arity)
      throw std::invalid_argument("arity too small for existing terms");
  arity_ = arity;
}

MultiPoly MultiPoly::constant(Coefficient c, int arity) {
  MultiPoly p(arity);
  p.add_term(Exponents{}, c);
  return p;
}

MultiPoly MultiPoly::monomial(Coefficient coeff, int qe, int te, std::span<const int> tj) {
  MultiPoly p(static_cast<int>(tj.size()));
  p.add_term(exponents(qe, te, tj), coeff);
  return p;
}

MultiPoly MultiPoly::t_var(int j) {
  if (j < 1 || j > kMaxArity) throw std::invalid_argument("t_" + std::to_string(j) + " unsupported");
  std::vector<int> tj(static_cast<std::size_t>(j), 0);
  tj.back() = 1;
  return monomial(1, 0, 0, tj);
}

MultiPoly::Exponents exponents(int qe, int te, std::span<const int> tj) {
  if (static_cast<int>(tj.size()) > MultiPoly::kMaxArity)
    throw std::invalid_argument("too many t_j variables");
  MultiPoly::Exponents e{};
  e[0] = to_exponent(qe);
  e[1] = to_exponent(te);
  for (std::size_t j = 0; j < tj.size(); ++j) e[j + 2] = to_exponent(tj[j]);
  return e;
}

void MultiPoly::add_term(const Exponents& e, Coefficient c) {
  if (c == 0) return;
  arity_ = std::max(arity_, highest_variable(e) - 1);
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly::Coefficient MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  arity_ = std::max(arity_, other.arity_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  arity_ = std::max(arity_, other.arity_);
  for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(std::max(a.arity_, b.arity_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e{};
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = to_exponent(int{ea[v]} + int{eb[v]});
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly MultiPoly::scaled(Coefficient c) const {
  MultiPoly out(arity_);
  for (const auto& [e, coeff] : terms_) out.add_term(e, checked_mul(coeff, c));
  return out;
}

MultiPoly::Coefficient MultiPoly::eval(std::span<const Coefficient> assignment) const {
  Coefficient total = 0;
  for (const auto& [e, c] : terms_) {
    Coefficient term = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      const Coefficient x = v < assignment.size() ? assignment[v] : 0;
      for (int k = 0; k < e[v]; ++k) term = checked_mul(term, x);
    }
    total = checked_add(total, term);
  }
  return total;
}

MultiPoly MultiPoly::t_coefficient(int k) const {
  MultiPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[1] != k) continue;
    Exponents rest = e;
    rest[1] = 0;
    out.add_term(rest, c);
  }
  return out;
}

int MultiPoly::max_exponent(int variable) const {
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, int{e[static_cast<std::size_t>(variable)]});
  return best;
}

std::string variable_name(int index) {
  if (index == 0) return "q";
  if (index == 1) return "t";
  return "t" + std::to_string(index - 1);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    // |c| without overflowing on INT64_MIN
    const std::uint64_t magnitude =
        negative ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    std::string factors;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += variable_name(static_cast<int>(v));
      if (e[v] > 1) factors += '^' + std::to_string(e[v]);
    }
    std::string term;
    if (factors.empty())
      term = std::to_string(magnitude);
    else if (magnitude == 1)
      term = factors;
    else
      term = std::to_string(magnitude) + '*' + factors;
    if (first)
      out += negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

MultiPoly q_integer(int m) {
  if (m < 0) throw std::invalid_argument("negative q-integer");
  MultiPoly p;
  for (int e = 0; e < m; ++e) p.add_term(exponents(e), 1);
  return p;
}

MultiPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("negative q-factorial");
  MultiPoly p = MultiPoly::constant(1);
  for (int i = 2; i <= n; ++i) p *= q_integer(i);
  return p;
}

MultiPoly q_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("negative q-binomial");
  if (k < 0 || k > n) return MultiPoly();
  const int parts[] = {k, n - k};
  return q_multinomial(n, parts);
}

MultiPoly q_multinomial(int n, std::span<const int> parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative multinomial part");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial parts do not sum to n");
  MultiPoly result = q_factorial(n);
  for (int p : parts) result = divide_exact_in_q(result, q_factorial(p));
  return result;
}

MultiPoly divide_exact_in_q(const MultiPoly& numerator, const MultiPoly& denominator) {
  auto dense = [](const MultiPoly& p) {
    std::vector<std::int64_t> d(static_cast<std::size_t>(p.max_exponent(0)) + 1, 0);
    for (const auto& [e, c] : p.terms()) {
      if (highest_variable(e) > 0)
        throw std::invalid_argument("exact division is only defined for polynomials in q");
      d[e[0]] = c;
    }
    return d;
  };
  if (denominator.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<std::int64_t> num = dense(numerator);
  const std::vector<std::int64_t> den = dense(denominator);
  if (numerator.is_zero()) return MultiPoly();
  const std::int64_t lead = den.back();
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw std::logic_error("inexact q-division");
  std::vector<std::int64_t> quot(num.size() - dd, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::int64_t top = num[k + dd];
    if (top % lead != 0) throw std::logic_error("inexact q-division");
    const std::int64_t c = top / lead;
    quot[k] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k + i] = checked_add(num[k + i], -checked_mul(c, den[i]));
  }
  for (auto r : num)
    if (r != 0) throw std::logic_error("inexact q-division");
  MultiPoly out;
  for (std::size_t e = 0; e < quot.size(); ++e) out.add_term(exponents(static_cast<int>(e)), quot[e]);
  return out;
}

}  // namespace permstat
