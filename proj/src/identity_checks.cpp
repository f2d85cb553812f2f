// The identity registry. Every entry computes its two sides along separate
// paths: a statistic scan against a closed form, or two different scans.
#include <array>
#include <map>
#include <set>

#include "identity_internal.hpp"
#include "permstat/canonical.hpp"
#include "permstat/covering.hpp"
#include "permstat/shuffles.hpp"
#include "permstat/statistics.hpp"

namespace permstat::detail {

namespace {

using Exps = MultiPoly::Exponents;
using MinKind = MinVariant::Kind;
constexpr std::array<MinKind, 2> kBothKinds{MinKind::exclude_first_positions,
                                            MinKind::exclude_smallest_values};

std::vector<int> i_values(const VerifyOptions& o, int lo, int hi) {
  if (o.i) {
    if (*o.i < lo || *o.i > hi)
      throw std::invalid_argument("i must lie in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "] for n=" + std::to_string(o.n));
    return {*o.i};
  }
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<int> k_values(const VerifyOptions& o, int lo, int hi) {
  if (o.k) {
    if (*o.k < lo || *o.k > hi)
      throw std::invalid_argument("k must lie in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "] for n=" + std::to_string(o.n));
    return {*o.k};
  }
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

std::string at(const std::string& label, const Permutation& p) { return label + " at " + describe(p); }

MultiPoly staircase_product(int n, int coeff, bool multivariate) {
  MultiPoly p = MultiPoly::constant(1);
  for (int j = 1; j <= n - 1; ++j) p *= staircase_factor(j, coeff, multivariate ? j : 0);
  return p;
}

// prod_{j=1}^{n-1} (coeff * T_j + j), T_j = t or t_j.
MultiPoly rising_product(int n, int coeff, bool multivariate) {
  MultiPoly p = MultiPoly::constant(1);
  for (int j = 1; j <= n - 1; ++j)
    p *= poly_t(multivariate ? j : 0).scaled(coeff) + MultiPoly::constant(j);
  return p;
}

// Sign-less Stirling numbers of the first kind by counting cycles of S_m.
std::vector<std::int64_t> stirling_by_cycles(int m, int jobs) {
  Tally t = scan_group(m, false, jobs, 1, [](const Permutation& p, Tally& acc) {
    acc.add(0, exponents(0, cycle_count(p)));
  });
  std::vector<std::int64_t> c(static_cast<std::size_t>(m) + 1, 0);
  for (int k = 0; k <= m; ++k) c[static_cast<std::size_t>(k)] = t.sums[0].coefficient(exponents(0, k));
  return c;
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out = checked_mul(out, base);
  return out;
}

Exps eps_exps(int qe, int te, const std::vector<int>& eps) { return exponents(qe, te, eps); }

// ---------------------------------------------------------------- classics

void run_macmahon(const VerifyOptions& o, Checker& c) {
  Tally t = scan_group(o.n, false, o.jobs, 2, [](const Permutation& p, Tally& acc) {
    acc.add(0, exponents(inversions(p)));
    acc.add(1, exponents(maj_s(p)));
  });
  c.add_scanned(t.scanned);
  const MultiPoly rhs = q_factorial(o.n);
  c.compare("inv", t.sums[0], rhs);
  c.compare("maj", t.sums[1], rhs);
}

unsigned inverse_descent_mask(const Permutation& p) { return mask_of(des_set_s(inverse(p)), 1); }

void run_fs_fixed_descent(const VerifyOptions& o, Checker& c) {
  const std::size_t subsets = std::size_t{1} << (o.n - 1);
  Tally t = scan_group(o.n, false, o.jobs, 2 * subsets, [](const Permutation& p, Tally& acc) {
    const std::size_t b = inverse_descent_mask(p);
    acc.add(2 * b, exponents(inversions(p)));
    acc.add(2 * b + 1, exponents(maj_s(p)));
  });
  c.add_scanned(t.scanned);
  for (std::size_t b = 0; b < subsets; ++b)
    c.compare("B=" + mask_string(static_cast<unsigned>(b), 1), t.sums[2 * b], t.sums[2 * b + 1]);
}

void run_fs_rmaj(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const std::size_t subsets = std::size_t{1} << (n - 1);
  Tally t = scan_group(n, false, o.jobs, 3 * subsets, [n](const Permutation& p, Tally& acc) {
    const std::size_t b = inverse_descent_mask(p);
    acc.add(3 * b, exponents(maj_s(p)));
    acc.add(3 * b + 1, exponents(rmaj_s(p, n)));
    acc.add(3 * b + 2, exponents(length_s(p)));
  });
  c.add_scanned(t.scanned);
  for (std::size_t d = 0; d < subsets; ++d) {
    std::array<MultiPoly, 3> s;
    for (std::size_t b = 0; b < subsets; ++b)
      if ((b & ~d) == 0)
        for (std::size_t x = 0; x < 3; ++x) s[x] += t.sums[3 * b + x];
    const std::string label = "D1=" + mask_string(static_cast<unsigned>(d), 1);
    c.compare(label + " maj vs length", s[0], s[2]);
    c.compare(label + " rmaj vs length", s[1], s[2]);
  }
}

// ------------------------------------------------------ (q, t) bivariates

Tally scan_s_bivariate(int n, int jobs) {
  return scan_group(n, false, jobs, 2, [n](const Permutation& p, Tally& acc) {
    const int d = del_s(p);
    acc.add(0, exponents(length_s(p), d));
    acc.add(1, exponents(rmaj_s(p, n), d));
  });
}

Tally scan_a_bivariate(int n, int jobs) {
  return scan_group(n + 1, true, jobs, 2, [n](const Permutation& v, Tally& acc) {
    const int d = del_a(v);
    acc.add(0, exponents(length_a(v), d));
    acc.add(1, exponents(rmaj_a(v, n), d));
  });
}

void run_thm61_s(const VerifyOptions& o, Checker& c) {
  Tally t = scan_s_bivariate(o.n, o.jobs);
  c.add_scanned(t.scanned);
  const MultiPoly rhs = staircase_product(o.n, 1, false);
  c.compare("length,del", t.sums[0], rhs);
  c.compare("rmaj,del", t.sums[1], rhs);
}

void run_thm61_a(const VerifyOptions& o, Checker& c) {
  Tally t = scan_a_bivariate(o.n, o.jobs);
  c.add_scanned(t.scanned);
  const MultiPoly rhs = staircase_product(o.n, 2, false);
  c.compare("length,del", t.sums[0], rhs);
  c.compare("rmaj,del", t.sums[1], rhs);
}

void compare_by_del(const VerifyOptions& o, Checker& c, const Tally& t) {
  const int top = std::max(0, o.n - 1);
  MultiPoly reassembled;
  for (int k = 0; k <= top; ++k) {
    const MultiPoly by_length = t.sums[0].t_coefficient(k);
    reassembled += by_length * MultiPoly::t_power(k);
    if (o.k && *o.k != k) continue;
    c.compare("del=" + std::to_string(k), by_length, t.sums[1].t_coefficient(k));
  }
  c.compare("coefficients reassemble", reassembled, t.sums[0]);
}

void run_thm62_s(const VerifyOptions& o, Checker& c) {
  k_values(o, 0, std::max(0, o.n - 1));
  Tally t = scan_s_bivariate(o.n, o.jobs);
  c.add_scanned(t.scanned);
  compare_by_del(o, c, t);
}

void run_thm62_a(const VerifyOptions& o, Checker& c) {
  k_values(o, 0, std::max(0, o.n - 1));
  Tally t = scan_a_bivariate(o.n, o.jobs);
  c.add_scanned(t.scanned);
  compare_by_del(o, c, t);
}

void run_prop56(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  Tally s = scan_group(n, false, o.jobs, 1, [](const Permutation& p, Tally& acc) {
    acc.add(0, exponents(length_s(p), del_s(p)));
  });
  Tally a = scan_group(n + 1, true, o.jobs, 1, [](const Permutation& v, Tally& acc) {
    acc.add(0, exponents(length_a(v), del_a(v)));
  });
  c.add_scanned(s.scanned + a.scanned);
  // Products over the staircase factor sets themselves.
  MultiPoly s_product = MultiPoly::constant(1);
  MultiPoly a_product = MultiPoly::constant(1);
  for (int j = 1; j <= n - 1; ++j) {
    MultiPoly fs;
    for (const auto& f : staircase_s(j)) fs.add_term(exponents(f.length(), f.r == 1 ? 1 : 0), 1);
    MultiPoly fa;
    for (const auto& f : staircase_a(j)) fa.add_term(exponents(f.length(), f.r == 1 ? 1 : 0), 1);
    s_product *= fs;
    a_product *= fa;
  }
  c.compare("S scan vs factor sets", s.sums[0], s_product);
  c.compare("S factor sets vs closed form", s_product, staircase_product(n, 1, false));
  c.compare("A scan vs factor sets", a.sums[0], a_product);
  c.compare("A factor sets vs closed form", a_product, staircase_product(n, 2, false));
}

// Sum over A_{n+1} of q^{m_A} t^{del_A} against sum over S_n of q^{m_S} (2t)^{del_S}.
void run_fpair_lift(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const auto pairs = standard_f_pairs();
  const std::size_t k = pairs.size();
  Tally a = scan_group(n + 1, true, o.jobs, k, [&](const Permutation& v, Tally& acc) {
    const int d = del_a(v);
    for (std::size_t x = 0; x < k; ++x)
      acc.add(x, exponents(static_cast<int>(statistic_a(pairs[x].a_stat, v)), d));
  });
  Tally s = scan_group(n, false, o.jobs, k, [&](const Permutation& w, Tally& acc) {
    const int d = del_s(w);
    for (std::size_t x = 0; x < k; ++x)
      acc.add(x, exponents(static_cast<int>(statistic_s(pairs[x].s_stat, w)), d), ipow(2, d));
  });
  c.add_scanned(a.scanned + s.scanned);
  for (std::size_t x = 0; x < k; ++x) c.compare(pairs[x].name, a.sums[x], s.sums[x]);
}

// ---------------------------------------------------------------- Stirling

void run_prop57_s(const VerifyOptions& o, Checker& c) {
  Tally t = scan_group(o.n, false, o.jobs, 2, [](const Permutation& p, Tally& acc) {
    acc.add(0, exponents(0, del_s(p)));
    acc.add(1, exponents(0, cycle_count(p) - 1));
  });
  c.add_scanned(t.scanned);
  c.compare("del distribution vs cycle counts", t.sums[0], t.sums[1]);
  c.compare("del distribution vs rising product", t.sums[0], rising_product(o.n, 1, false));
}

void run_prop57_a(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  Tally a = scan_group(n + 1, true, o.jobs, 1, [](const Permutation& v, Tally& acc) {
    acc.add(0, exponents(0, del_a(v)));
  });
  c.add_scanned(a.scanned);
  const std::vector<std::int64_t> stirling = stirling_by_cycles(n, o.jobs);
  MultiPoly rhs;
  for (int l = 0; l + 1 <= n; ++l)
    rhs.add_term(exponents(0, l), checked_mul(ipow(2, l), stirling[static_cast<std::size_t>(l + 1)]));
  c.compare("del distribution vs 2^l c(n,l+1)", a.sums[0], rhs);
  c.compare("del distribution vs rising product", a.sums[0], rising_product(n, 2, false));
}

// ------------------------------------------------------------ multivariate

void run_prop510_s(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  Tally t = scan_group(n, false, o.jobs, 1, [](const Permutation& p, Tally& acc) {
    acc.add(0, eps_exps(length_s(p), 0, epsilon_s(p)));
  });
  c.add_scanned(t.scanned);
  c.compare("length,epsilon", t.sums[0], staircase_product(n, 1, true));
}

void run_prop510_a(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const auto pairs = standard_f_pairs();
  const std::size_t k = pairs.size();
  Tally a = scan_group(n + 1, true, o.jobs, k + 1, [&](const Permutation& v, Tally& acc) {
    const std::vector<int> eps = epsilon_a(v);
    acc.add(0, eps_exps(length_a(v), 0, eps));
    for (std::size_t x = 0; x < k; ++x)
      acc.add(x + 1, eps_exps(static_cast<int>(statistic_a(pairs[x].a_stat, v)), 0, eps));
  });
  // Lift through the covering map: every t_j carrying an s_1 doubles.
  Tally s = scan_group(n, false, o.jobs, k, [&](const Permutation& w, Tally& acc) {
    const std::vector<int> eps = epsilon_s(w);
    const int d = del_s(w);
    for (std::size_t x = 0; x < k; ++x)
      acc.add(x, eps_exps(static_cast<int>(statistic_s(pairs[x].s_stat, w)), 0, eps), ipow(2, d));
  });
  c.add_scanned(a.scanned + s.scanned);
  c.compare("length,epsilon", a.sums[0], staircase_product(n, 2, true));
  for (std::size_t x = 0; x < k; ++x)
    c.compare("lift " + pairs[x].name, a.sums[x + 1], s.sums[x]);
}

void run_prop511(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  Tally s = scan_group(n, false, o.jobs, 1, [](const Permutation& w, Tally& acc) {
    acc.add(0, eps_exps(0, 0, epsilon_s(w)));
  });
  Tally a = scan_group(n + 1, true, o.jobs, 1, [](const Permutation& v, Tally& acc) {
    acc.add(0, eps_exps(0, 0, epsilon_a(v)));
  });
  c.add_scanned(s.scanned + a.scanned);
  c.compare("S epsilon vectors", s.sums[0], rising_product(n, 1, true));
  c.compare("A epsilon vectors", a.sums[0], rising_product(n, 2, true));
}

void run_prop712(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const std::vector<int> ks = k_values(o, 1, n - 1);
  Tally t = scan_group(n, false, o.jobs, ks.size(), [&](const Permutation& p, Tally& acc) {
    const SCanonicalWord w = s_canonical(p);
    for (std::size_t x = 0; x < ks.size(); ++x) acc.add(x, exponents(0, occurrences(w, ks[x])));
  });
  c.add_scanned(t.scanned);
  for (std::size_t x = 0; x < ks.size(); ++x) {
    const int k = ks[x];
    const std::int64_t kf = factorial(k);
    MultiPoly product = MultiPoly::constant(kf);
    for (int m = 1; m <= n - k; ++m)
      product *= MultiPoly::t_power(1).scaled(k) + MultiPoly::constant(m);
    const std::vector<std::int64_t> stirling = stirling_by_cycles(n - k + 1, o.jobs);
    MultiPoly counted;
    for (int l = 0; l <= n - k; ++l)
      counted.add_term(exponents(0, l),
                       checked_mul(checked_mul(kf, ipow(k, l)), stirling[static_cast<std::size_t>(l + 1)]));
    const std::string label = "k=" + std::to_string(k);
    c.compare(label + " vs rising product", t.sums[x], product);
    c.compare(label + " vs k! k^l c(n-k+1,l+1)", t.sums[x], counted);
  }
}

// ------------------------------------------------------ insertion lemmas

bool same_multiset(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void run_lemma63(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const int y = n + 1;
  std::vector<int> u(static_cast<std::size_t>(n), 1);
  std::array<MultiPoly, 4> lhs;
  std::array<MultiPoly, 4> rhs;
  long long words = 0;
  while (true) {
    ++words;
    const int mu = maj(u);
    const int ru = rmaj(u, n);
    std::vector<int> maj_v;
    std::vector<int> rmaj_v;
    for (int i = 1; i <= n + 1; ++i) {
      std::vector<int> v = u;
      v.insert(v.begin() + (i - 1), y);
      maj_v.push_back(maj(v));
      rmaj_v.push_back(rmaj(v, n + 1));
    }
    std::vector<int> e_all;
    std::vector<int> e_maj5;
    std::vector<int> e_rmaj7;
    for (int e = 0; e <= n; ++e) e_all.push_back(e);
    for (int e = 1; e <= n; ++e) e_maj5.push_back(mu + e);
    for (int e = 0; e < n; ++e) e_rmaj7.push_back(ru + e);
    std::vector<int> maj_all;
    std::vector<int> rmaj_all;
    for (int e : e_all) {
      maj_all.push_back(mu + e);
      rmaj_all.push_back(ru + e);
    }
    const std::vector<int> maj_first(maj_v.begin(), maj_v.end() - 1);
    const std::vector<int> rmaj_last(rmaj_v.begin() + 1, rmaj_v.end());
    auto word = [&] {
      std::string s = "[";
      for (std::size_t x = 0; x < u.size(); ++x) s += (x ? "," : "") + std::to_string(u[x]);
      return s + "]";
    };
    c.expect(same_multiset(maj_v, maj_all), [&] { return "maj, all insertions at " + word(); });
    c.expect(same_multiset(maj_first, e_maj5), [&] { return "maj, first n insertions at " + word(); });
    c.expect(same_multiset(rmaj_v, rmaj_all), [&] { return "rmaj, all insertions at " + word(); });
    c.expect(same_multiset(rmaj_last, e_rmaj7), [&] { return "rmaj, last n insertions at " + word(); });
    for (int e : maj_v) lhs[0].add_term(exponents(e), 1);
    for (int e : maj_all) rhs[0].add_term(exponents(e), 1);
    for (int e : maj_first) lhs[1].add_term(exponents(e), 1);
    for (int e : e_maj5) rhs[1].add_term(exponents(e), 1);
    for (int e : rmaj_v) lhs[2].add_term(exponents(e), 1);
    for (int e : rmaj_all) rhs[2].add_term(exponents(e), 1);
    for (int e : rmaj_last) lhs[3].add_term(exponents(e), 1);
    for (int e : e_rmaj7) rhs[3].add_term(exponents(e), 1);
    // odometer over [n]^n
    int pos = n - 1;
    while (pos >= 0 && u[static_cast<std::size_t>(pos)] == n) u[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++u[static_cast<std::size_t>(pos)];
  }
  c.add_scanned(words);
  c.compare("maj, all insertions (summed over words)", lhs[0], rhs[0]);
  c.compare("maj, first n insertions (summed over words)", lhs[1], rhs[1]);
  c.compare("rmaj, all insertions (summed over words)", lhs[2], rhs[2]);
  c.compare("rmaj, last n insertions (summed over words)", lhs[3], rhs[3]);
}

std::vector<Permutation> coset_representatives(int n, bool drop_full) {
  std::vector<Permutation> out;
  for (const auto& f : staircase_s(n)) {
    if (drop_full && f.r == 1) continue;
    out.push_back(factor_permutation(f, n + 1));
  }
  return out;
}

void run_lemma64(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const auto reps = coset_representatives(n, false);
  MultiPoly lhs_maj, rhs_maj, lhs_rmaj, rhs_rmaj;
  long long scanned = 0;
  for_each_permutation(n, [&](const Permutation& w0) {
    ++scanned;
    const Permutation w = embed(w0, n + 1);
    std::vector<int> m, r, m_expected, r_expected;
    for (const auto& tau : reps) {
      const Permutation wt = w * tau;
      m.push_back(maj_s(wt));
      r.push_back(rmaj_s(wt, n + 1));
    }
    for (int e = 0; e <= n; ++e) {
      m_expected.push_back(maj_s(w0) + e);
      r_expected.push_back(rmaj_s(w0, n) + e);
    }
    c.expect(same_multiset(m, m_expected), [&] { return at("maj coset", w0); });
    c.expect(same_multiset(r, r_expected), [&] { return at("rmaj coset", w0); });
    for (int e : m) lhs_maj.add_term(exponents(e), 1);
    for (int e : m_expected) rhs_maj.add_term(exponents(e), 1);
    for (int e : r) lhs_rmaj.add_term(exponents(e), 1);
    for (int e : r_expected) rhs_rmaj.add_term(exponents(e), 1);
  });
  c.add_scanned(scanned);
  c.compare("maj over cosets", lhs_maj, rhs_maj);
  c.compare("rmaj over cosets", lhs_rmaj, rhs_rmaj);
}

void run_lemma65(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const auto reps = coset_representatives(n, false);
  const MultiPoly tail = q_integer(n) + MultiPoly::monomial(1, n, 1);
  MultiPoly lhs_total, rhs_total;
  long long scanned = 0;
  for_each_permutation(n, [&](const Permutation& s0) {
    ++scanned;
    const Permutation s = embed(s0, n + 1);
    MultiPoly lhs;
    for (const auto& tau : reps) {
      const Permutation st = s * tau;
      lhs.add_term(exponents(rmaj_s(st, n + 1), del_s(st)), 1);
    }
    const MultiPoly rhs = MultiPoly::monomial(1, rmaj_s(s0, n), del_s(s0)) * tail;
    c.expect(lhs == rhs, [&] { return at("coset sum", s0) + ": " + lhs.to_string(); });
    lhs_total += lhs;
    rhs_total += rhs;
  });
  c.add_scanned(scanned);
  c.compare("summed over S_n", lhs_total, rhs_total);
}

void run_remark66(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const auto reps = coset_representatives(n, true);
  MultiPoly lhs_total, rhs_total;
  long long scanned = 0;
  for_each_permutation(n, [&](const Permutation& s0) {
    ++scanned;
    const Permutation s = embed(s0, n + 1);
    MultiPoly lhs;
    for (const auto& tau : reps) lhs.add_term(exponents(rmaj_s(s * tau, n + 1)), 1);
    const MultiPoly rhs = MultiPoly::q_power(rmaj_s(s0, n)) * q_integer(n);
    c.expect(lhs == rhs, [&] { return at("truncated coset sum", s0) + ": " + lhs.to_string(); });
    lhs_total += lhs;
    rhs_total += rhs;
  });
  c.add_scanned(scanned);
  c.compare("summed over S_n", lhs_total, rhs_total);
}

void run_prop67(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  Tally direct = scan_group(n, false, o.jobs, 1, [n](const Permutation& p, Tally& acc) {
    acc.add(0, exponents(rmaj_s(p, n), del_s(p)));
  });
  c.add_scanned(direct.scanned);
  c.compare("S_n scan vs product", direct.sums[0], staircase_product(n, 1, false));
  // Build S_{n+1} as the union of cosets S_n tau.
  const auto reps = coset_representatives(n, false);
  std::vector<Permutation> built;
  MultiPoly coset_sum;
  for_each_permutation(n, [&](const Permutation& s0) {
    const Permutation s = embed(s0, n + 1);
    for (const auto& tau : reps) {
      const Permutation st = s * tau;
      coset_sum.add_term(exponents(rmaj_s(st, n + 1), del_s(st)), 1);
      built.push_back(st);
    }
  });
  c.add_scanned(static_cast<long long>(built.size()));
  std::sort(built.begin(), built.end());
  const bool distinct = std::adjacent_find(built.begin(), built.end()) == built.end();
  c.expect(distinct && static_cast<std::int64_t>(built.size()) == factorial(n + 1),
           [&] { return "cosets do not partition S_" + std::to_string(n + 1); });
  c.compare("coset union vs product", coset_sum, staircase_product(n + 1, 1, false));
}

// ------------------------------------------------------------ shuffles

// Calls fn(i, pi) for every admissible i and every pi in S_i embedded in S_n.
void for_each_small_support(const VerifyOptions& o, int i_hi,
                            const std::function<void(int, const Permutation&)>& fn) {
  for (int i : i_values(o, 1, i_hi))
    for_each_permutation(i, [&](const Permutation& p) { fn(i, embed(p, o.n)); });
}

std::string at_i(const std::string& label, int i, const Permutation& p) {
  return label + " i=" + std::to_string(i) + " pi=" + describe(p);
}

void run_prop81(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  for_each_small_support(o, n - 1, [&](int i, const Permutation& pi) {
    const MultiPoly rhs = q_binomial(n, i);
    c.add_scanned(2 * static_cast<long long>(q_binomial(n, i).eval(std::array<std::int64_t, 1>{1})));
    c.compare(at_i("rmaj", i, pi), shuffle_sum(pi, i, ShuffleStat::rmaj), rhs);
    c.compare(at_i("length", i, pi), shuffle_sum(pi, i, ShuffleStat::length), rhs);
  });
}

void run_split_lemma(const VerifyOptions& o, Checker& c, ShuffleStat stat) {
  const int n = o.n;
  for_each_small_support(o, n - 1, [&](int i, const Permutation& pi) {
    c.add_scanned(static_cast<long long>(q_binomial(n, i).eval(std::array<std::int64_t, 1>{1})));
    c.compare(at_i("first letter i+1", i, pi), shuffle_sum(pi, i, stat, FirstLetter::equals_i_plus_1),
              MultiPoly::q_power(i) * q_binomial(n - 1, i));
    c.compare(at_i("first letter pi(1)", i, pi), shuffle_sum(pi, i, stat, FirstLetter::equals_pi_1),
              q_binomial(n - 1, i - 1));
  });
}

void run_lemma86(const VerifyOptions& o, Checker& c) { run_split_lemma(o, c, ShuffleStat::rmaj); }
void run_lemma87(const VerifyOptions& o, Checker& c) { run_split_lemma(o, c, ShuffleStat::length); }

void run_lemma93(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const int arity = n - 1;
  for_each_small_support(o, n - 1, [&](int i, const Permutation& sigma) {
    c.add_scanned(2 * static_cast<long long>(q_binomial(n, i).eval(std::array<std::int64_t, 1>{1})));
    const MultiPoly bracket =
        q_binomial(n - 1, i - 1) + MultiPoly::t_var(i) * MultiPoly::q_power(i) * q_binomial(n - 1, i);
    const std::vector<int> eps = epsilon_s(sigma);
    const MultiPoly rhs_len = monomial_eps(length_s(sigma), 0, eps, arity) * bracket;
    const MultiPoly rhs_rmaj = monomial_eps(rmaj_s(sigma, i), 0, eps, arity) * bracket;
    c.compare(at_i("length", i, sigma), marked_shuffle_sum(sigma, i, ShuffleStat::length), rhs_len);
    c.compare(at_i("rmaj", i, sigma), marked_shuffle_sum(sigma, i, ShuffleStat::rmaj), rhs_rmaj);
  });
}

// Shuffles of pi1 (letters [k]) and pi2 (letters [k+1, n]); `exponent` gives
// the normalised statistic of pi1 pi2 r.
void run_two_block(const VerifyOptions& o, Checker& c,
                   const std::function<int(const Permutation&, const Permutation&, const Permutation&,
                                           int)>& exponent) {
  const int n = o.n;
  for (int k : k_values(o, 1, n - 1)) {
    const auto shuffles = enumerate_b_shuffles(ShuffleSet(n, {k}));
    const MultiPoly rhs = q_binomial(n, k);
    for_each_permutation(k, [&](const Permutation& p1) {
      for_each_permutation(n - k, [&](const Permutation& p2) {
        const Permutation pi1 = embed(p1, n);
        const Permutation pi2 = shift_into(p2, k, n);
        MultiPoly lhs;
        bool negative = false;
        for (const auto& r : shuffles) {
          const int e = exponent(pi1, pi2, r, k);
          if (e < 0)
            negative = true;
          else
            lhs.add_term(exponents(e), 1);
        }
        c.add_scanned(static_cast<long long>(shuffles.size()));
        const std::string label =
            "k=" + std::to_string(k) + " pi1=" + describe(pi1) + " pi2=" + describe(pi2);
        c.expect(!negative, [&] { return label + ": negative exponent"; });
        c.compare(label, lhs, rhs);
      });
    });
  }
}

void run_garsia_gessel(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  run_two_block(o, c, [n](const Permutation& pi1, const Permutation& pi2, const Permutation& r, int k) {
    const Permutation v = nu(k, n);
    return maj_s(pi1 * pi2 * r) - maj_s(pi1) - maj_s(inverse(v) * pi2 * v);
  });
}

void run_fact26(const VerifyOptions& o, Checker& c) {
  run_two_block(o, c, [](const Permutation& pi1, const Permutation& pi2, const Permutation& r, int) {
    return inversions(pi1 * pi2 * r) - inversions(pi1) - inversions(pi2);
  });
}

// ------------------------------------------------------------ main theorem

using KeyedSums = std::map<std::uint64_t, std::array<MultiPoly, 2>>;

void merge_keyed(KeyedSums& into, const KeyedSums& from) {
  for (const auto& [key, sums] : from) {
    auto& slot = into[key];
    slot[0] += sums[0];
    slot[1] += sums[1];
  }
}

// Both sides over every (D1, D2): D1 subsets of [n-1] (bits at offset 1),
// D2 subsets of a range of `d2_bits` positions starting at 2.
void compare_restricted(Checker& c, const KeyedSums& keyed, int n, int d2_bits) {
  const std::uint64_t d1_count = std::uint64_t{1} << (n - 1);
  const std::uint64_t d2_count = std::uint64_t{1} << d2_bits;
  std::vector<MultiPoly> lhs_grid(d1_count * d2_count);
  for (std::uint64_t d1 = 0; d1 < d1_count; ++d1) {
    for (std::uint64_t d2 = 0; d2 < d2_count; ++d2) {
      MultiPoly lhs, rhs;
      for (const auto& [key, sums] : keyed) {
        const std::uint64_t des = key & (d1_count - 1);
        const std::uint64_t del = key >> (n - 1);
        if ((des & ~d1) == 0 && (del & ~d2) == 0) {
          lhs += sums[0];
          rhs += sums[1];
        }
      }
      c.compare("D1=" + mask_string(static_cast<unsigned>(d1), 1) +
                    " D2=" + mask_string(static_cast<unsigned>(d2), 2),
                lhs, rhs);
      lhs_grid[d1 * d2_count + d2] = std::move(lhs);
    }
  }
  // Enlarging either subset can only add terms.
  auto dominated = [](const MultiPoly& small, const MultiPoly& big) {
    for (const auto& [e, coeff] : small.terms())
      if (big.coefficient(e) < coeff) return false;
    return true;
  };
  for (std::uint64_t d1 = 0; d1 < d1_count; ++d1)
    for (std::uint64_t d2 = 0; d2 < d2_count; ++d2) {
      const MultiPoly& base = lhs_grid[d1 * d2_count + d2];
      for (int b = 0; b < n - 1; ++b)
        if (!(d1 >> b & 1U))
          c.expect(dominated(base, lhs_grid[(d1 | (1ULL << b)) * d2_count + d2]),
                   [&] { return "monotonicity in D1 fails at " + mask_string(static_cast<unsigned>(d1), 1); });
      for (int b = 0; b < d2_bits; ++b)
        if (!(d2 >> b & 1U))
          c.expect(dominated(base, lhs_grid[d1 * d2_count + (d2 | (1ULL << b))]),
                   [&] { return "monotonicity in D2 fails at " + mask_string(static_cast<unsigned>(d2), 2); });
    }
}

void run_main_s(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  long long scanned = 0;
  auto chunks = scan_chunks(n, false, o.jobs, KeyedSums{}, [n](const Permutation& p, KeyedSums& acc) {
    const Permutation pinv = inverse(p);
    const std::uint64_t key = mask_of(des_set_s(pinv), 1) |
                              static_cast<std::uint64_t>(mask_of(del_set_s(pinv), 2)) << (n - 1);
    auto& slot = acc[key];
    slot[0].add_term(exponents(rmaj_s(p, n)), 1);
    slot[1].add_term(exponents(length_s(p)), 1);
  });
  KeyedSums keyed;
  for (const auto& ch : chunks) merge_keyed(keyed, ch);
  for (const auto& [key, sums] : keyed) scanned += sums[1].eval(std::array<std::int64_t, 1>{1});
  c.add_scanned(scanned);
  compare_restricted(c, keyed, n, n - 1);  // D2 within {2..n}
}

void run_main_a(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  long long scanned = 0;
  auto chunks = scan_chunks(n + 1, true, o.jobs, KeyedSums{}, [n](const Permutation& v, KeyedSums& acc) {
    const Permutation vinv = inverse(v);
    const std::uint64_t key = mask_of(des_set_a(vinv), 1) |
                              static_cast<std::uint64_t>(mask_of(del_set_a(vinv), 2)) << (n - 1);
    auto& slot = acc[key];
    slot[0].add_term(exponents(rmaj_a(v, n)), 1);
    slot[1].add_term(exponents(length_a(v)), 1);
  });
  KeyedSums keyed;
  for (const auto& ch : chunks) merge_keyed(keyed, ch);
  for (const auto& [key, sums] : keyed) scanned += sums[1].eval(std::array<std::int64_t, 1>{1});
  c.add_scanned(scanned);
  compare_restricted(c, keyed, n, n);  // D2 within {2..n+1}
}

// q, t, t1 stand for the three variables q1, q2, q3.
void run_cor92_s(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  Tally t = scan_group(n, false, o.jobs, 4, [n](const Permutation& p, Tally& acc) {
    const Permutation pinv = inverse(p);
    const int des = des_s(pinv);
    const std::vector<int> d{del_s(pinv)};
    const std::vector<int> d_alt{
        static_cast<int>(ltr_minima(p, {MinKind::exclude_smallest_values, 0}).size())};
    acc.add(0, exponents(rmaj_s(p, n), des, d));
    acc.add(1, exponents(length_s(p), des, d));
    acc.add(2, exponents(rmaj_s(p, n), des, d_alt));
    acc.add(3, exponents(length_s(p), des, d_alt));
  });
  c.add_scanned(t.scanned);
  c.compare("canonical-word delent", t.sums[0], t.sums[1]);
  c.compare("minima-based delent", t.sums[2], t.sums[3]);
  c.compare("delent readings agree", t.sums[0], t.sums[2]);
}

void run_cor92_a(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  Tally t = scan_group(n + 1, true, o.jobs, 4, [n](const Permutation& v, Tally& acc) {
    const Permutation vinv = inverse(v);
    const int des = des_a(vinv);
    const std::vector<int> d{del_a(vinv)};
    const std::vector<int> d_alt{
        static_cast<int>(ltr_minima(v, {MinKind::exclude_smallest_values, 1}).size())};
    acc.add(0, exponents(rmaj_a(v, n), des, d));
    acc.add(1, exponents(length_a(v), des, d));
    acc.add(2, exponents(rmaj_a(v, n), des, d_alt));
    acc.add(3, exponents(length_a(v), des, d_alt));
  });
  c.add_scanned(t.scanned);
  c.compare("canonical-word delent", t.sums[0], t.sums[1]);
  c.compare("minima-based delent", t.sums[2], t.sums[3]);
  c.compare("delent readings agree", t.sums[0], t.sums[2]);
}

// ------------------------------------------------------------ covering map

void run_fiber_size(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  MultiPoly by_fiber, by_formula;
  std::vector<Permutation> members;
  long long scanned = 0;
  for_each_permutation(n, [&](const Permutation& w) {
    ++scanned;
    const int d = del_s(w);
    std::int64_t size = 0;
    bool maps_back = true;
    for_each_in_fiber(w, [&](const Permutation& v) {
      ++size;
      members.push_back(v);
      if (!is_even(v) || f_map(v) != w) maps_back = false;
    });
    c.expect(size == ipow(2, d), [&] { return at("fiber size", w); });
    c.expect(maps_back, [&] { return at("fiber member not over", w); });
    by_fiber.add_term(exponents(0, d), size);
    by_formula.add_term(exponents(0, d), ipow(2, d));
  });
  std::sort(members.begin(), members.end());
  const bool disjoint = std::adjacent_find(members.begin(), members.end()) == members.end();
  c.expect(disjoint && static_cast<std::int64_t>(members.size()) == factorial(n + 1) / 2,
           [&] { return "fibers do not partition A_" + std::to_string(n + 1); });
  Tally a = scan_group(n + 1, true, o.jobs, 1, [](const Permutation& v, Tally& acc) {
    acc.add(0, exponents(0, del_a(v)));
  });
  c.add_scanned(scanned + a.scanned);
  c.compare("fiber sizes vs 2^del", by_fiber, by_formula);
  c.compare("fiber sizes vs A delent scan", by_fiber, a.sums[0]);
}

void run_prop55_fpairs(const VerifyOptions& o, Checker& c) {
  for (const auto& spec : standard_f_pairs()) {
    const FPairReport r = verify_f_pair(spec, o.n);
    c.add_scanned(r.elements_checked);
    c.expect(r.pass, [&] {
      return spec.name + " fails at " + (r.counterexample ? describe(*r.counterexample) : "?") + " (" +
             std::to_string(r.a_value) + " vs " + std::to_string(r.s_value) + ")";
    });
  }
  // Descent set from the length comparison against the covering-map shortcut.
  Tally a = scan_group(o.n + 1, true, o.jobs, 0, [](const Permutation& v, Tally& acc) {
    acc.expect(des_set_a_by_length(v) == des_set_a(v), [&] { return at("A descent set", v); });
  });
  c.add_scanned(a.scanned);
  c.absorb(a.checks, a.passed, a.failures);
}

// ------------------------------------------------------------ appendix

void run_appendix_hat(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const std::vector<int> is = i_values(o, 1, n - 1);
  Tally t = scan_group(n, true, o.jobs, 2 * is.size(), [&](const Permutation& p, Tally& acc) {
    for (std::size_t x = 0; x < is.size(); ++x) {
      acc.add(2 * x, exponents(hat_ell(p, is[x])));
      acc.add(2 * x + 1, exponents(hat_maj(p, is[x])));
    }
  });
  c.add_scanned(t.scanned);
  MultiPoly rhs = MultiPoly::constant(1);
  for (int j = 3; j <= n; ++j) rhs *= q_integer(j);
  for (std::size_t x = 0; x < is.size(); ++x) {
    const std::string label = "i=" + std::to_string(is[x]);
    c.compare(label + " hat length", t.sums[2 * x], rhs);
    c.compare(label + " hat maj", t.sums[2 * x + 1], rhs);
  }
}

// ------------------------------------------------------ structural checks

void run_fact24(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const unsigned subsets = 1U << (n - 1);
  Tally t = scan_group(n, false, o.jobs, 0, [&](const Permutation& p, Tally& acc) {
    const unsigned des = inverse_descent_mask(p);
    for (unsigned b = 0; b < subsets; ++b) {
      std::vector<int> cuts;
      for (int x = 0; x < n - 1; ++x)
        if (b >> x & 1U) cuts.push_back(x + 1);
      const bool shuffle = is_b_shuffle(p, ShuffleSet(n, cuts));
      acc.expect(shuffle == ((des & ~b) == 0), [&] { return at("B=" + mask_string(b, 1), p); });
    }
  });
  c.add_scanned(t.scanned);
  c.absorb(t.checks, t.passed, t.failures);
  for (unsigned b = 0; b < subsets; ++b) {
    std::vector<int> cuts;
    for (int x = 0; x < n - 1; ++x)
      if (b >> x & 1U) cuts.push_back(x + 1);
    const ShuffleSet set(n, cuts);
    const auto list = enumerate_b_shuffles(set);
    std::int64_t expected = factorial(n);
    for (int size : set.block_sizes()) expected /= factorial(size);
    const bool sorted = std::adjacent_find(list.begin(), list.end(), std::greater_equal<>()) == list.end();
    bool members_ok = true;
    for (const auto& p : list) members_ok = members_ok && is_b_shuffle(p, set);
    c.expect(sorted && members_ok && static_cast<std::int64_t>(list.size()) == expected,
             [&] { return "enumeration for B=" + mask_string(b, 1); });
  }
}

void run_note82(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  for_each_small_support(o, n - 1, [&](int i, const Permutation& pi) {
    for (const auto& r : i_shuffles(n, i)) {
      const int first = (pi * r)(1);
      c.add_scanned(1);
      c.expect(first == pi(1) || first == i + 1, [&] { return at_i("first letter", i, pi) + " r=" + describe(r); });
    }
  });
}

void run_fact84(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  for (int i : i_values(o, 1, n - 1)) {
    std::vector<Permutation> image;
    for (const auto& r : i_shuffles(n, i))
      if (r(1) == i + 1) image.push_back(g_map(r, i));
    std::sort(image.begin(), image.end());
    c.add_scanned(static_cast<long long>(image.size()));
    c.expect(image == i_shuffles(n - 1, i), [&] { return "g_" + std::to_string(i) + " is not a bijection"; });
    // Equivariance: g_i(pi sigma) = pi g_i(sigma) for supp(pi) within [i].
    for_each_permutation(i, [&](const Permutation& p0) {
      const Permutation pi = embed(p0, n);
      const Permutation pi_small = embed(p0, n - 1);
      for_each_permutation(n, [&](const Permutation& sigma) {
        c.add_scanned(1);
        c.expect(g_map(pi * sigma, i) == pi_small * g_map(sigma, i),
                 [&] { return at_i("equivariance", i, pi) + " sigma=" + describe(sigma); });
      });
    });
  }
}

void run_lemma85(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  if (!o.i && n < 3) return;
  for_each_small_support(o, n - 2, [&](int i, const Permutation& pi) {
    const Permutation pi_small = g_map(pi, i);
    for (const auto& r : i_shuffles(n, i)) {
      if (r(1) != i + 1) continue;
      c.add_scanned(1);
      const Permutation r_small = g_map(r, i);
      const Permutation pr = pi * r;
      const int small_rmaj = rmaj_s(pi_small * r_small, n - 1);
      auto where = [&] { return at_i("", i, pi) + " r=" + describe(r); };
      if (r(2) == i + 2)
        c.expect(rmaj_s(pr, n) == small_rmaj, [&] { return "rmaj, r(2)=i+2:" + where(); });
      else if (r(2) == 1)
        c.expect(rmaj_s(pr, n) == n - 1 + small_rmaj, [&] { return "rmaj, r(2)=1:" + where(); });
      else
        c.expect(false, [&] { return "second letter outside {1, i+2}:" + where(); });
      c.expect(length_s(pr) == i + length_s(pi_small * r_small), [&] { return "length drop:" + where(); });
    }
  });
}

void run_obs88(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  for (int i : i_values(o, 1, n - 1)) {
    for (const auto& r : i_shuffles(n, i)) {
      c.add_scanned(1);
      const SCanonicalWord w = s_canonical(r);
      bool ok = true;
      for (int j = 1; j <= n - 1; ++j) {
        const SFactor& f = w.factors[static_cast<std::size_t>(j - 1)];
        if (j < i && !f.empty()) ok = false;
        if (j >= i && j + 1 <= n - 1 && f.length() < w.factors[static_cast<std::size_t>(j)].length()) ok = false;
      }
      c.expect(ok, [&] { return at("factor shape i=" + std::to_string(i), r); });
    }
  }
}

void run_cor89(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  for (int i : i_values(o, 1, n - 1)) {
    for (const auto& r : i_shuffles(n, i)) {
      c.add_scanned(1);
      const bool lead = r(1) == i + 1;
      std::vector<int> expected(static_cast<std::size_t>(n - 1), 0);
      if (lead) expected[static_cast<std::size_t>(i - 1)] = 1;
      c.expect(del_s(r) == (lead ? 1 : 0), [&] { return at("delent i=" + std::to_string(i), r); });
      c.expect(epsilon_s(r) == expected, [&] { return at("epsilon i=" + std::to_string(i), r); });
    }
  }
}

void run_rem810(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  for_each_small_support(o, n - 1, [&](int i, const Permutation& pi) {
    const std::vector<int> ep = epsilon_s(pi);
    for (const auto& r : i_shuffles(n, i)) {
      c.add_scanned(1);
      const Permutation pr = pi * r;
      std::vector<int> sum = epsilon_s(r);
      for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += ep[x];
      c.expect(epsilon_s(pr) == sum, [&] { return at_i("epsilon additivity", i, pi) + " r=" + describe(r); });
      c.expect(length_s(pr) == length_s(pi) + length_s(r),
               [&] { return at_i("length additivity", i, pi) + " r=" + describe(r); });
    }
  });
}

void run_remark28(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  const unsigned subsets = 1U << (n - 1);
  Tally t = scan_group(n, false, o.jobs, 0, [&](const Permutation& s, Tally& acc) {
    const Permutation h = hat(s);
    acc.expect(maj_s(h) == rmaj_s(s, n), [&] { return at("maj of hat", s); });
    acc.expect(inversions(h) == inversions(s), [&] { return at("inv of hat", s); });
    const unsigned ds = inverse_descent_mask(s);
    const unsigned dh = inverse_descent_mask(h);
    for (unsigned b = 0; b < subsets; ++b) {
      unsigned reflected = 0;
      for (int x = 0; x < n - 1; ++x)
        if (b >> x & 1U) reflected |= 1U << (n - (x + 1) - 1);  // i -> n-i
      acc.expect(((ds & ~b) == 0) == ((dh & ~reflected) == 0),
                 [&] { return at("shuffle reflection B=" + mask_string(b, 1), s); });
    }
  });
  c.add_scanned(t.scanned);
  c.absorb(t.checks, t.passed, t.failures);
}

void run_prop72(const VerifyOptions& o, Checker& c) {
  Tally t = scan_group(o.n, false, o.jobs, 0, [](const Permutation& w, Tally& acc) {
    const int d = del_s(w);
    const Permutation winv = inverse(w);
    acc.expect(static_cast<int>(del_set_s(w).size()) == d, [&] { return at("|Del|", w); });
    acc.expect(del_s(winv) == d, [&] { return at("inverse delent", w); });
    for (MinKind kind : kBothKinds) {
      acc.expect(static_cast<int>(ltr_minima(winv, {kind, 0}).size()) == d, [&] { return at("minima of inverse", w); });
      acc.expect(static_cast<int>(ltr_minima(w, {kind, 0}).size()) == d, [&] { return at("minima", w); });
    }
  });
  c.add_scanned(t.scanned);
  c.absorb(t.checks, t.passed, t.failures);
}

void run_prop79(const VerifyOptions& o, Checker& c) {
  const int n = o.n;
  Tally t = scan_group(n, false, o.jobs, 0, [n](const Permutation& w, Tally& acc) {
    const SCanonicalWord word = s_canonical(w);
    const Permutation winv = inverse(w);
    for (int level = 1; level <= 3 && level + 1 <= n - 1; ++level) {
      const int occ = occurrences(word, level + 1);
      for (MinKind kind : kBothKinds) {
        acc.expect(static_cast<int>(ltr_minima(winv, {kind, level}).size()) == occ,
                   [&] { return at("level " + std::to_string(level) + " minima of inverse", w); });
        acc.expect(static_cast<int>(ltr_minima(w, {kind, level}).size()) == occ,
                   [&] { return at("level " + std::to_string(level) + " minima", w); });
      }
    }
  });
  c.add_scanned(t.scanned);
  c.absorb(t.checks, t.passed, t.failures);
}

void run_prop710(const VerifyOptions& o, Checker& c) {
  Tally t = scan_group(o.n + 1, true, o.jobs, 0, [](const Permutation& v, Tally& acc) {
    const int d = del_a(v);
    const Permutation vinv = inverse(v);
    acc.expect(static_cast<int>(del_set_a(v).size()) == d, [&] { return at("|Del_A|", v); });
    acc.expect(del_a(vinv) == d, [&] { return at("inverse delent", v); });
    for (MinKind kind : kBothKinds) {
      acc.expect(static_cast<int>(ltr_minima(vinv, {kind, 1}).size()) == d, [&] { return at("minima of inverse", v); });
      acc.expect(static_cast<int>(ltr_minima(v, {kind, 1}).size()) == d, [&] { return at("minima", v); });
    }
  });
  c.add_scanned(t.scanned);
  c.absorb(t.checks, t.passed, t.failures);
}

void run_remark73(const VerifyOptions& o, Checker& c) {
  Tally t = scan_group(o.n, false, o.jobs, 0, [](const Permutation& w, Tally& acc) {
    const std::vector<int> eps = epsilon_s(w);
    std::vector<int> expected;
    for (std::size_t x = 0; x < eps.size(); ++x)
      if (eps[x] == 1) expected.push_back(static_cast<int>(x) + 2);
    acc.expect(del_set_s(inverse(w)) == expected, [&] { return at("Del of inverse", w); });
  });
  c.add_scanned(t.scanned);
  c.absorb(t.checks, t.passed, t.failures);
}

Entry entry(std::string name, std::string statement, int min_n, int cap, EntryFn fn,
            bool takes_i = false, bool takes_k = false) {
  IdentityInfo info;
  info.name = std::move(name);
  info.statement = std::move(statement);
  info.params = takes_i ? "n[,i]" : takes_k ? "n[,k]" : "n";
  info.min_n = min_n;
  info.cap = cap;
  info.takes_i = takes_i;
  info.takes_k = takes_k;
  return {std::move(info), fn};
}

}  // namespace

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      entry("macmahon", "sum_{S_n} q^inv = sum_{S_n} q^maj = [n]!_q", 1, 11, run_macmahon),
      entry("fs-fixed-descent", "for every B: sum over Des(pi^-1) = B of q^inv equals q^maj", 1, 11,
            run_fs_fixed_descent),
      entry("fs-rmaj", "for every D1: q^maj, q^rmaj and q^length agree over Des(pi^-1) within D1", 1, 11,
            run_fs_rmaj),
      entry("thm61-s", "sum_{S_n} q^length t^del = sum q^rmaj t^del = prod (1+...+q^{j-1}+q^j t)", 1, 11,
            run_thm61_s),
      entry("thm61-a", "sum_{A_{n+1}} q^length t^del = sum q^rmaj t^del = prod (1+...+q^{j-1}+2q^j t)", 2,
            10, run_thm61_a),
      entry("thm62-s", "for each k: length and rmaj agree over {del_S = k}", 1, 11, run_thm62_s, false, true),
      entry("thm62-a", "for each k: length and rmaj agree over {v in A_{n+1} : del_A = k}", 2, 10,
            run_thm62_a, false, true),
      entry("prop56", "(length, del) generating functions as products over staircase factor sets", 2, 10,
            run_prop56),
      entry("fpair-lift", "sum_{A_{n+1}} q^{m_A} t^{del_A} = sum_{S_n} q^{m_S} (2t)^{del_S} per f-pair", 2,
            10, run_fpair_lift),
      entry("prop57-stirling-s", "w_S(n,l) = c(n,l+1); sum_l w_S(n,l) t^l = (t+1)...(t+n-1)", 1, 11,
            run_prop57_s),
      entry("prop57-stirling-a", "w_A(n+1,l) = 2^l c(n,l+1); sum = (2t+1)...(2t+n-1)", 2, 10, run_prop57_a),
      entry("prop510-multivar-s", "sum_{S_n} q^length t^eps = prod (1+...+q^{j-1}+q^j t_j)", 1, 11,
            run_prop510_s),
      entry("prop510-multivar-a",
            "sum_{A_{n+1}} q^length t^eps = prod (1+...+2q^j t_j); epsilon lift of every f-pair", 2, 10,
            run_prop510_a),
      entry("prop511-multivar", "sum t^eps = prod (t_j + j) on S_n, prod (2t_j + j) on A_{n+1}", 2, 10,
            run_prop511),
      entry("prop712-sk-occurrences", "sum_l w_S(n,l,k) t^l = k!(kt+1)...(kt+n-k) = sum k! k^l c(n-k+1,l+1) t^l",
            2, 11, run_prop712, false, true),
      entry("lemma63", "inserting a larger letter into a word shifts maj/rmaj by 0..n", 1, 7, run_lemma63),
      entry("lemma64", "sum over the top staircase coset of q^maj (q^rmaj) = q^{stat(w)} [n+1]_q", 1, 10,
            run_lemma64),
      entry("lemma65", "coset sum of q^rmaj t^del = q^rmaj t^del (1+...+q^{n-1}+t q^n)", 1, 10, run_lemma65),
      entry("remark66", "truncated coset sum of q^rmaj = q^rmaj (1+...+q^{n-1})", 1, 10, run_remark66),
      entry("prop67", "S_{n+1} as a union of staircase cosets; (rmaj, del) product formula", 1, 10, run_prop67),
      entry("prop81", "sum over {i}-shuffles r of q^{rmaj(pi r)-rmaj(pi)} = q^{length(pi r)-length(pi)} = [n choose i]_q",
            2, 9, run_prop81, true),
      entry("lemma86", "rmaj shuffle sum split by the first letter: q^i [n-1 choose i]_q and [n-1 choose i-1]_q", 2, 9,
            run_lemma86, true),
      entry("lemma87", "length shuffle sum split by the first letter", 2, 9, run_lemma87, true),
      entry("lemma93", "marked shuffle sums: q^stat t^eps ([n-1 choose i-1]_q + t_i q^i [n-1 choose i]_q)", 2, 9,
            run_lemma93, true),
      entry("garsia-gessel", "maj over shuffles of pi1 and pi2, normalised via nu_k conjugation = [n choose k]_q", 2,
            10, run_garsia_gessel, false, true),
      entry("fact26", "inv over shuffles of pi1 and pi2, normalised = [n choose k]_q", 2, 10, run_fact26, false,
            true),
      entry("main-s", "for all D1, D2: rmaj and length agree over Des(pi^-1) in D1, Del(pi^-1) in D2", 1, 9,
            run_main_s),
      entry("main-a", "for all D1, D2: rmaj_A and length_A agree over Des_A(v^-1) in D1, Del_A(v^-1) in D2", 2, 9,
            run_main_a),
      entry("cor92-s", "(rmaj, des(pi^-1), del(pi^-1)) and (length, des(pi^-1), del(pi^-1)) agree; q,t,t1 = q1,q2,q3",
            1, 11, run_cor92_s),
      entry("cor92-a", "A_{n+1} analogue of the trivariate equality", 2, 10, run_cor92_a),
      entry("fiber-size", "|f^-1(w)| = 2^{del_S(w)} and the fibers partition A_{n+1}", 1, 10, run_fiber_size),
      entry("appendix-hat", "sum_{A_n} q^{hat length_i} = sum q^{hat maj_i} = prod_{j=3}^n [j]_q", 2, 10,
            run_appendix_hat, true),
      entry("fact24", "B-shuffles are exactly the pi with Des(pi^-1) within B", 1, 9, run_fact24),
      entry("note82", "pi r (1) lies in {pi(1), i+1} for every {i}-shuffle r", 2, 11, run_note82, true),
      entry("fact84", "g_i is a bijection onto the {i}-shuffles of S_{n-1} and commutes with pi", 2, 7,
            run_fact84, true),
      entry("lemma85", "rmaj(pi r) = rmaj(pi' r') (+ n-1 when r(2)=1); length(pi r) = i + length(pi' r')", 2, 11,
            run_lemma85, true),
      entry("obs88", "{i}-shuffles have canonical factors w_i..w_{n-1} of weakly decreasing length", 2, 20,
            run_obs88, true),
      entry("cor89", "{i}-shuffles have del_S = [w(1) = i+1] and epsilon = e_i or 0", 2, 20, run_cor89, true),
      entry("rem810", "epsilon(pi r) = epsilon(pi) + epsilon(r)", 2, 11, run_rem810, true),
      entry("remark28", "maj(hat sigma) = rmaj(sigma), inv(hat sigma) = inv(sigma), shuffle reflection", 1, 10,
            run_remark28),
      entry("prop55-fpairs", "length, des, maj, rmaj, del are f-pairs; Des_A by length comparison", 2, 9,
            run_prop55_fpairs),
      entry("prop72", "|Del_S(w)| = del_S(w) = del_S(w^-1) = number of minima, both kinds", 1, 11, run_prop72),
      entry("prop79", "level-k minima count the occurrences of s_{k+1}, k = 1..3, both kinds", 1, 11, run_prop79),
      entry("prop710", "|Del_A(v)| = del_A(v) = del_A(v^-1) = almost-minima count, both kinds", 2, 10,
            run_prop710),
      entry("remark73", "Del_S(w^-1) = {i+1 : eps_i(w) = 1}", 1, 11, run_remark73),
  };
  return entries;
}

}  // namespace permstat::detail
