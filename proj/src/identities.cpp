#include "permstat/identities.hpp"

#include <chrono>

#include "identity_internal.hpp"

namespace permstat {

namespace detail {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void Checker::note_failure(std::string text) {
  if (failures_.size() < IdentityReport::kMaxFailures) failures_.push_back(std::move(text));
}

void Checker::compare(const std::string& point, const MultiPoly& lhs, const MultiPoly& rhs) {
  ++points_;
  const bool ok = lhs == rhs;
  if (!failed_) {
    lhs_ = lhs;
    rhs_ = rhs;
    have_point_ = true;
  }
  if (!ok) {
    failed_ = true;
    note_failure(point + ": lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
  }
}

void Checker::expect(bool ok, const std::function<std::string()>& what) {
  ++checks_;
  if (ok)
    ++passed_;
  else
    note_failure(what());
}

void Checker::absorb(long long checks, long long passed, const std::vector<std::string>& failures) {
  checks_ += checks;
  passed_ += passed;
  for (const auto& f : failures) note_failure(f);
}

void Checker::finish(IdentityReport& report) const {
  report.points = points_;
  report.elements_scanned = scanned_;
  report.failures = failures_;
  report.lhs = lhs_;
  report.rhs = rhs_;
  report.pass = !failed_;
  if (checks_ > 0) {
    // Structural checks are summarised as satisfied-count against total.
    report.points += checks_;
    if (passed_ != checks_ && !failed_) {
      report.lhs = MultiPoly::constant(passed_);
      report.rhs = MultiPoly::constant(checks_);
    } else if (!have_point_) {
      report.lhs = MultiPoly::constant(passed_);
      report.rhs = MultiPoly::constant(checks_);
    }
    if (passed_ != checks_) report.pass = false;
  }
}

void Tally::merge(const Tally& other) {
  if (sums.size() < other.sums.size()) sums.resize(other.sums.size());
  for (std::size_t s = 0; s < other.sums.size(); ++s) sums[s] += other.sums[s];
  scanned += other.scanned;
  checks += other.checks;
  passed += other.passed;
  for (const auto& f : other.failures)
    if (failures.size() < IdentityReport::kMaxFailures) failures.push_back(f);
}

std::vector<std::vector<int>> chunk_prefixes(int degree) {
  std::vector<std::vector<int>> out;
  if (degree < 3) {
    out.emplace_back();
    return out;
  }
  for (int a = 1; a <= degree; ++a)
    for (int b = 1; b <= degree; ++b)
      if (a != b) out.push_back({a, b});
  return out;
}

Tally scan_group(int degree, bool even_only, int jobs, std::size_t slots,
                 const std::function<void(const Permutation&, Tally&)>& visit) {
  auto chunks = scan_chunks(degree, even_only, jobs, Tally(slots),
                            [&](const Permutation& p, Tally& t) {
                              ++t.scanned;
                              visit(p, t);
                            });
  Tally total(slots);
  for (const auto& c : chunks) total.merge(c);
  return total;
}

MultiPoly poly_t(int j) { return j == 0 ? MultiPoly::t_power(1) : MultiPoly::t_var(j); }

MultiPoly staircase_factor(int j, int coeff, int tj) {
  return q_integer(j) + MultiPoly::q_power(j).scaled(coeff) * poly_t(tj);
}

MultiPoly monomial_eps(int qe, int te, const std::vector<int>& eps, int arity) {
  MultiPoly p(arity);
  p.add_term(exponents(qe, te, eps), 1);
  return p;
}

std::string describe(const Permutation& p) { return p.to_string(); }

std::string mask_string(unsigned mask, int offset) {
  std::string out = "{";
  bool first = true;
  for (int b = 0; b < 32; ++b) {
    if (!(mask >> b & 1U)) continue;
    if (!first) out += ',';
    out += std::to_string(b + offset);
    first = false;
  }
  return out + "}";
}

unsigned mask_of(const std::vector<int>& positions, int offset) {
  unsigned m = 0;
  for (int p : positions) m |= 1U << (p - offset);
  return m;
}

std::vector<Permutation> i_shuffles(int m, int i) {
  if (i >= m) return {Permutation::identity(m)};
  return enumerate_b_shuffles(ShuffleSet(m, {i}));
}

}  // namespace detail

std::string IdentityReport::params() const {
  std::string out = "n=" + std::to_string(n);
  if (i) out += ",i=" + std::to_string(*i);
  if (k) out += ",k=" + std::to_string(*k);
  return out;
}

const std::vector<IdentityInfo>& list_identities() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : detail::registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const IdentityInfo& identity_info(const std::string& name) {
  for (const auto& info : list_identities())
    if (info.name == name) return info;
  throw std::invalid_argument("unknown identity '" + name + "' (see `list`)");
}

IdentityReport verify(const std::string& name, const VerifyOptions& options) {
  const detail::Entry* entry = nullptr;
  for (const auto& e : detail::registry())
    if (e.info.name == name) entry = &e;
  if (entry == nullptr) throw std::invalid_argument("unknown identity '" + name + "' (see `list`)");
  const IdentityInfo& info = entry->info;
  if (options.n < info.min_n || options.n > kMaxDegree)
    throw std::invalid_argument(name + " needs " + std::to_string(info.min_n) +
                                " <= n <= " + std::to_string(kMaxDegree));
  if (options.n > info.cap && !options.force)
    throw CapExceeded(name + ": n=" + std::to_string(options.n) + " exceeds the enumeration cap " +
                      std::to_string(info.cap) + " (use --force)");
  if (options.i && !info.takes_i) throw std::invalid_argument(name + " takes no i parameter");
  if (options.k && !info.takes_k) throw std::invalid_argument(name + " takes no k parameter");

  IdentityReport report;
  report.name = name;
  report.n = options.n;
  report.i = options.i;
  report.k = options.k;
  detail::Checker checker;
  const auto start = std::chrono::steady_clock::now();
  entry->run(options, checker);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  checker.finish(report);
  return report;
}

std::vector<IdentityReport> verify_all(int n_max, int jobs) {
  std::vector<IdentityReport> out;
  for (const auto& info : list_identities()) {
    for (int n = info.min_n; n <= std::min(n_max, info.cap); ++n) {
      VerifyOptions o;
      o.n = n;
      o.jobs = jobs;
      out.push_back(verify(info.name, o));
    }
  }
  return out;
}

}  // namespace permstat
