#include "permstat/covering.hpp"

#include <algorithm>
#include <stdexcept>

#include "permstat/statistics.hpp"

namespace permstat {

SCanonicalWord f_map(const ACanonicalWord& word) {
  validate(word);
  if (word.m < 2) throw std::domain_error("f is defined on A_{n+1} with n >= 1");
  SCanonicalWord out{word.m - 1, {}};
  out.factors.reserve(word.factors.size());
  for (const auto& f : word.factors) out.factors.push_back({f.j, f.r});
  return out;
}

Permutation f_map(const Permutation& v) { return to_permutation(f_map(a_canonical(v))); }

void for_each_in_fiber(const Permutation& w, const std::function<void(const Permutation&)>& fn) {
  const SCanonicalWord sword = s_canonical(w);
  ACanonicalWord aword{w.degree() + 1, {}};
  std::vector<std::size_t> branch_points;
  for (const auto& f : sword.factors) {
    aword.factors.push_back({f.j, f.r, f.r == 1 ? ALast::a1 : ALast::none});
    if (f.r == 1) branch_points.push_back(aword.factors.size() - 1);
  }
  const std::size_t count = std::size_t{1} << branch_points.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (std::size_t b = 0; b < branch_points.size(); ++b)
      aword.factors[branch_points[b]].last = (mask >> b) & 1U ? ALast::a1_inverse : ALast::a1;
    fn(to_permutation(aword));
  }
}

std::vector<Permutation> fiber(const Permutation& w) {
  std::vector<Permutation> out;
  for_each_in_fiber(w, [&](const Permutation& v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FPairSpec> standard_f_pairs() {
  return {
      {"length", "length", "length"},
      {"des", "des", "des"},
      {"maj", "maj", "maj"},
      {"rmaj", "rmaj", "rmaj"},
      {"del", "del", "del"},
  };
}

FPairReport verify_f_pair(const FPairSpec& spec, int n) {
  // Reject unknown names before scanning.
  const Permutation probe_s = Permutation::identity(std::max(n, 1));
  statistic_s(spec.s_stat, probe_s);
  statistic_a(spec.a_stat, Permutation::identity(n + 1));

  FPairReport report{spec, n, true, 0, std::nullopt, 0, 0};
  for_each_even_permutation(n + 1, [&](const Permutation& v) {
    ++report.elements_checked;
    if (!report.pass) return;
    const long long a = statistic_a(spec.a_stat, v);
    const long long s = statistic_s(spec.s_stat, f_map(v));
    if (a != s) {
      report.pass = false;
      report.counterexample = v;
      report.a_value = a;
      report.s_value = s;
    }
  });
  return report;
}

}  // namespace permstat
