#include "permstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace permstat {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("degree " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxDegree) + "]");
}

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
}

}  // namespace

Permutation::Permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  images_.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > n)
      throw std::invalid_argument("image " + std::to_string(v) + " outside [1, " +
                                  std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("duplicate image " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
    images_.push_back(static_cast<value_type>(v));
  }
}

Permutation Permutation::identity(int n) {
  check_degree(n);
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  std::iota(p.images_.begin(), p.images_.end(), value_type{1});
  return p;
}

Permutation Permutation::adjacent(int i, int n) {
  if (i < 1 || i >= n)
    throw std::out_of_range("s_" + std::to_string(i) + " not defined in S_" + std::to_string(n));
  return identity(n).times_adjacent(i);
}

std::vector<int> Permutation::to_vector() const {
  return {images_.begin(), images_.end()};
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::times_adjacent(int i) const {
  if (i < 1 || i >= degree())
    throw std::out_of_range("s_" + std::to_string(i) + " not defined in S_" +
                            std::to_string(degree()));
  Permutation p = *this;
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

PermutationBuilder::PermutationBuilder(const Permutation& p)
    : images_(p.images().begin(), p.images().end()) {}

PermutationBuilder::PermutationBuilder(int n) : images_(Permutation::identity(n).images_) {}

int PermutationBuilder::position_of(int value) const {
  auto it = std::find(images_.begin(), images_.end(), static_cast<Permutation::value_type>(value));
  if (it == images_.end()) throw std::out_of_range("value not present");
  return static_cast<int>(it - images_.begin()) + 1;
}

void PermutationBuilder::swap_positions(int i) {
  std::swap(images_[static_cast<std::size_t>(i - 1)], images_[static_cast<std::size_t>(i)]);
}

void PermutationBuilder::move_entry(int from, int to) {
  auto first = images_.begin();
  if (from < to)
    std::rotate(first + (from - 1), first + from, first + to);
  else if (from > to)
    std::rotate(first + (to - 1), first + (from - 1), first + from);
}

Permutation PermutationBuilder::finish() && {
  Permutation p;
  p.images_ = std::move(images_);
  return p;
}

Permutation compose(const Permutation& alpha, const Permutation& beta) {
  require_same_degree(alpha, beta);
  std::vector<int> v(static_cast<std::size_t>(alpha.degree()));
  for (int k = 1; k <= alpha.degree(); ++k) v[static_cast<std::size_t>(k - 1)] = alpha(beta(k));
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& alpha, const Permutation& beta) {
  return compose(alpha, beta);
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> v(static_cast<std::size_t>(pi.degree()));
  for (int i = 1; i <= pi.degree(); ++i) v[static_cast<std::size_t>(pi(i) - 1)] = i;
  return Permutation(std::move(v));
}

Permutation parse_one_line(std::string_view text) {
  std::string body(text);
  auto strip = [](std::string& s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  };
  strip(body);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced bracket in \"" + std::string(text) + "\"");
    body = body.substr(1, body.size() - 2);
  }
  for (char& c : body)
    if (c == ',') c = ' ';

  std::vector<int> images;
  std::istringstream in(body);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed entry \"" + token + "\"");
    }
    if (used != token.size()) throw ParseError("malformed entry \"" + token + "\"");
    images.push_back(value);
  }
  if (images.empty()) throw ParseError("empty permutation");
  if (static_cast<int>(images.size()) > kMaxDegree)
    throw ParseError("degree " + std::to_string(images.size()) + " exceeds " +
                     std::to_string(kMaxDegree));
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()))
      throw ParseError("image " + std::to_string(v) + " outside [1, " +
                       std::to_string(images.size()) + "]");
    if (seen[static_cast<std::size_t>(v)]) throw ParseError("duplicate image " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(images));
}

int inversions(const Permutation& pi) {
  int count = 0;
  const auto w = pi.images();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

int sign(const Permutation& pi) {
  // parity of n - #cycles
  return ((pi.degree() - cycle_count(pi)) % 2 == 0) ? 1 : -1;
}

std::vector<int> support(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 1; i <= pi.degree(); ++i)
    if (pi(i) != i) out.push_back(i);
  return out;
}

int cycle_count(const Permutation& pi) {
  std::vector<bool> seen(static_cast<std::size_t>(pi.degree()) + 1, false);
  int cycles = 0;
  for (int start = 1; start <= pi.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = pi(i))
      seen[static_cast<std::size_t>(i)] = true;
  }
  return cycles;
}

Permutation rho(int n) {
  check_degree(n);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return Permutation(std::move(v));
}

Permutation nu(int k, int n) {
  if (k < 1 || k > n - 1)
    throw std::out_of_range("nu_" + std::to_string(k) + " requires 1 <= k <= n-1 (n = " +
                            std::to_string(n) + ")");
  Permutation result = Permutation::identity(n);
  for (int j = 1; j <= n - k; ++j) {
    std::vector<int> t = Permutation::identity(n).to_vector();
    std::swap(t[static_cast<std::size_t>(j - 1)], t[static_cast<std::size_t>(j + k - 1)]);
    result = result * Permutation(std::move(t));
  }
  return result;
}

Permutation hat(const Permutation& sigma) {
  const Permutation r = rho(sigma.degree());
  return r * sigma * r;
}

Permutation embed(const Permutation& pi, int n) {
  return shift_into(pi, 0, n);
}

Permutation shift_into(const Permutation& pi, int offset, int n) {
  if (offset < 0 || offset + pi.degree() > n)
    throw std::invalid_argument("cannot place S_" + std::to_string(pi.degree()) + " at offset " +
                                std::to_string(offset) + " inside S_" + std::to_string(n));
  std::vector<int> v = Permutation::identity(n).to_vector();
  for (int i = 1; i <= pi.degree(); ++i) v[static_cast<std::size_t>(offset + i - 1)] = offset + pi(i);
  return Permutation(std::move(v));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> v = Permutation::identity(n).to_vector();
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

void for_each_even_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  for_each_permutation(n, [&](const Permutation& p) {
    if (is_even(p)) fn(p);
  });
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<Permutation> all_even_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n >= 2 ? factorial(n) / 2 : 1));
  for_each_even_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::int64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("negative factorial");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i)
    if (__builtin_mul_overflow(f, static_cast<std::int64_t>(i), &f))
      throw std::overflow_error(std::to_string(n) + "! exceeds 64 bits");
  return f;
}

}  // namespace permstat
