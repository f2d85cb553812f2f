#include "permstat/statistics.hpp"

#include <numeric>
#include <stdexcept>

#include "permstat/canonical.hpp"
#include "permstat/covering.hpp"

namespace permstat {

namespace {

std::vector<int> to_ints(const Permutation& pi) { return pi.to_vector(); }

int sum_of(const std::vector<int>& xs) { return std::accumulate(xs.begin(), xs.end(), 0); }

int reverse_sum(const std::vector<int>& des, int n) {
  int total = 0;
  for (int i : des) {
    if (i >= n)
      throw std::invalid_argument("descent " + std::to_string(i) + " not below n = " +
                                  std::to_string(n));
    total += n - i;
  }
  return total;
}

void require_even(const Permutation& v) {
  if (!is_even(v)) throw std::domain_error(v.to_string() + " is not an even permutation");
  if (v.degree() < 2) throw std::domain_error("A statistics need degree >= 2");
}

}  // namespace

std::vector<int> descent_set(std::span<const int> seq) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i] > seq[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

int maj(std::span<const int> seq) { return sum_of(descent_set(seq)); }

int rmaj(std::span<const int> seq, int n) { return reverse_sum(descent_set(seq), n); }

int length_s(const Permutation& pi) { return inversions(pi); }

std::vector<int> des_set_s(const Permutation& pi) {
  const auto v = to_ints(pi);
  return descent_set(v);
}

int des_s(const Permutation& pi) { return static_cast<int>(des_set_s(pi).size()); }

int maj_s(const Permutation& pi) { return sum_of(des_set_s(pi)); }

int rmaj_s(const Permutation& pi, int n) { return reverse_sum(des_set_s(pi), n); }

std::vector<int> ltr_minima(const Permutation& pi, MinVariant variant) {
  if (variant.level < 0) throw std::invalid_argument("negative minima level");
  const int k = variant.level;
  std::vector<int> out;
  for (int i = 1; i <= pi.degree(); ++i) {
    int smaller_before = 0;
    for (int j = 1; j < i; ++j)
      if (pi(j) < pi(i)) ++smaller_before;
    if (smaller_before > k) continue;
    if (variant.kind == MinVariant::Kind::exclude_first_positions ? i <= k + 1 : pi(i) <= k + 1)
      continue;
    out.push_back(i);
  }
  return out;
}

int del_s(const Permutation& pi) {
  if (pi.degree() < 2) return 0;
  return occurrences(s_canonical(pi), 1);
}

std::vector<int> del_set_s(const Permutation& pi) { return ltr_minima(pi, {}); }

int length_a(const Permutation& v) { return a_canonical(v).length(); }

std::vector<int> des_set_a(const Permutation& v) {
  require_even(v);
  return des_set_s(f_map(v));
}

std::vector<int> des_set_a_by_length(const Permutation& v) {
  require_even(v);
  const int n = v.degree() - 1;
  const int len = length_a(v);
  std::vector<int> out;
  for (int i = 1; i <= n - 1; ++i) {
    const Permutation va = v.times_adjacent(1).times_adjacent(i + 1);
    if (len >= length_a(va)) out.push_back(i);
  }
  return out;
}

int des_a(const Permutation& v) { return static_cast<int>(des_set_a(v).size()); }

int maj_a(const Permutation& v) { return sum_of(des_set_a(v)); }

int rmaj_a(const Permutation& v, int n) { return reverse_sum(des_set_a(v), n); }

int del_a(const Permutation& v) {
  require_even(v);
  if (v.degree() < 3) return 0;
  return occurrences(a_canonical(v), 1);
}

std::vector<int> del_set_a(const Permutation& v) {
  require_even(v);
  return ltr_minima(v, {MinVariant::Kind::exclude_first_positions, 1});
}

Permutation h_map(const Permutation& pi, int i) {
  if (i < 1 || i >= pi.degree())
    throw std::out_of_range("h_" + std::to_string(i) + " undefined on S_" +
                            std::to_string(pi.degree()));
  // i in Des(pi^{-1}) iff the value i+1 stands left of i.
  const Permutation pinv = inverse(pi);
  if (pinv(i) > pinv(i + 1)) return Permutation::adjacent(i, pi.degree()) * pi;
  return pi;
}

int hat_ell(const Permutation& pi, int i) { return length_s(h_map(pi, i)); }

int hat_maj(const Permutation& pi, int i) { return maj_s(h_map(pi, i)); }

StatProfile profile_s(const Permutation& pi) {
  StatProfile p;
  p.group = Group::S;
  p.n = pi.degree();
  p.perm = pi;
  const auto word = s_canonical(pi);
  p.length = word.length();
  p.des_set = des_set_s(pi);
  p.des = static_cast<int>(p.des_set.size());
  p.maj = sum_of(p.des_set);
  p.rmaj = reverse_sum(p.des_set, p.n);
  p.epsilon = epsilon(word);
  p.del = sum_of(p.epsilon);
  p.del_set = del_set_s(pi);
  return p;
}

StatProfile profile_a(const Permutation& v) {
  require_even(v);
  StatProfile p;
  p.group = Group::A;
  p.n = v.degree() - 1;
  p.perm = v;
  const auto word = a_canonical(v);
  p.length = word.length();
  p.des_set = des_set_s(to_permutation(f_map(word)));
  p.des = static_cast<int>(p.des_set.size());
  p.maj = sum_of(p.des_set);
  p.rmaj = reverse_sum(p.des_set, p.n);
  p.epsilon = epsilon(word);
  p.del = sum_of(p.epsilon);
  p.del_set = del_set_a(v);
  return p;
}

long long statistic_s(const std::string& name, const Permutation& pi) {
  if (name == "length" || name == "inv") return length_s(pi);
  if (name == "des") return des_s(pi);
  if (name == "maj") return maj_s(pi);
  if (name == "rmaj") return rmaj_s(pi);
  if (name == "del") return del_s(pi);
  throw std::invalid_argument("unknown S statistic \"" + name + "\"");
}

long long statistic_a(const std::string& name, const Permutation& v) {
  if (name == "length") return length_a(v);
  if (name == "des") return des_a(v);
  if (name == "maj") return maj_a(v);
  if (name == "rmaj") return rmaj_a(v);
  if (name == "del") return del_a(v);
  throw std::invalid_argument("unknown A statistic \"" + name + "\"");
}

}  // namespace permstat
