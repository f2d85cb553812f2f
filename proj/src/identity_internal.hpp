// Shared machinery for the identity checks; not installed.
#ifndef PERMSTAT_IDENTITY_INTERNAL_HPP
#define PERMSTAT_IDENTITY_INTERNAL_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "permstat/identities.hpp"
#include "permstat/permutation.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/shuffles.hpp"

namespace permstat::detail {

int resolve_jobs(int jobs);

// Collects the outcome of one entry: polynomial points plus structural checks.
class Checker {
 public:
  void compare(const std::string& point, const MultiPoly& lhs, const MultiPoly& rhs);
  void expect(bool ok, const std::function<std::string()>& what);
  void add_scanned(long long count) { scanned_ += count; }
  // Merges failures and counts recorded elsewhere (chunk tallies).
  void absorb(long long checks, long long passed, const std::vector<std::string>& failures);
  void finish(IdentityReport& report) const;

 private:
  void note_failure(std::string text);

  long long points_ = 0;
  long long scanned_ = 0;
  long long checks_ = 0;
  long long passed_ = 0;
  bool have_point_ = false;
  bool failed_ = false;
  MultiPoly lhs_;
  MultiPoly rhs_;
  std::vector<std::string> failures_;
};

// Per-chunk accumulator for group scans.
struct Tally {
  std::vector<MultiPoly> sums;
  long long scanned = 0;
  long long checks = 0;
  long long passed = 0;
  std::vector<std::string> failures;

  explicit Tally(std::size_t count = 0) : sums(count) {}
  void add(std::size_t slot, const MultiPoly::Exponents& e, MultiPoly::Coefficient c = 1) {
    sums[slot].add_term(e, c);
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok)
      ++passed;
    else if (failures.size() < IdentityReport::kMaxFailures)
      failures.push_back(what());
  }
  void merge(const Tally& other);
};

// Prefixes (pi(1), pi(2)) split S_m into m(m-1) lexicographic chunks.
std::vector<std::vector<int>> chunk_prefixes(int degree);

// Visits S_degree (or its even part) chunk by chunk on `jobs` threads. Each
// chunk owns one accumulator; the result lists them in lexicographic chunk
// order, so merging them front to back is deterministic.
template <class Acc, class Visit>
std::vector<Acc> scan_chunks(int degree, bool even_only, int jobs, const Acc& prototype,
                             Visit visit) {
  const std::vector<std::vector<int>> prefixes = chunk_prefixes(degree);
  std::vector<Acc> out(prefixes.size(), prototype);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < prefixes.size(); c = next++) {
      std::vector<int> v = prefixes[c];
      std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
      for (int a : v) used[static_cast<std::size_t>(a)] = true;
      const std::size_t fixed = v.size();
      for (int a = 1; a <= degree; ++a)
        if (!used[static_cast<std::size_t>(a)]) v.push_back(a);
      do {
        Permutation p(v);
        if (even_only && !is_even(p)) continue;
        visit(p, out[c]);
      } while (std::next_permutation(v.begin() + static_cast<std::ptrdiff_t>(fixed), v.end()));
    }
  };
  const int threads = std::min<int>(resolve_jobs(jobs), static_cast<int>(prefixes.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

// Tally-valued scan merged in chunk order.
Tally scan_group(int degree, bool even_only, int jobs, std::size_t slots,
                 const std::function<void(const Permutation&, Tally&)>& visit);

// --- polynomial building blocks ---
MultiPoly poly_t(int j);  // j == 0: t, else t_j
// [j]_q + coeff * q^j * T, T = t or t_j.
MultiPoly staircase_factor(int j, int coeff, int tj);
MultiPoly monomial_eps(int qe, int te, const std::vector<int>& eps, int arity);
std::string describe(const Permutation& p);
std::string mask_string(unsigned mask, int offset);
unsigned mask_of(const std::vector<int>& positions, int offset);

// All {i}-shuffles of S_m; {id} when i >= m.
std::vector<Permutation> i_shuffles(int m, int i);

// --- entry implementations (identity_checks.cpp) ---
using EntryFn = void (*)(const VerifyOptions&, Checker&);
struct Entry {
  IdentityInfo info;
  EntryFn run;
};
const std::vector<Entry>& registry();

}  // namespace permstat::detail

#endif  // PERMSTAT_IDENTITY_INTERNAL_HPP
