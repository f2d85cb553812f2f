#ifndef PERMSTAT_IDENTITIES_HPP
#define PERMSTAT_IDENTITIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permstat/polynomial.hpp"

namespace permstat {

// Requested parameters beyond the enumeration cap of an entry without force.
class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IdentityInfo {
  std::string name;
  std::string statement;
  std::string params;  // "n", "n[,i]", "n[,k]"
  int min_n = 1;
  int cap = 1;          // largest n accepted without force
  bool takes_i = false;
  bool takes_k = false;
};

struct VerifyOptions {
  int n = 1;
  std::optional<int> i;  // absent: every admissible i
  std::optional<int> k;  // absent: every admissible k
  bool force = false;
  int jobs = 1;          // 0 = hardware concurrency
};

struct IdentityReport {
  std::string name;
  int n = 0;
  std::optional<int> i;
  std::optional<int> k;
  // Representative sides: the first failing point, else the last point checked.
  MultiPoly lhs;
  MultiPoly rhs;
  bool pass = true;
  long long points = 0;            // parameter points compared
  long long elements_scanned = 0;  // group elements / words / shuffles visited
  std::vector<std::string> failures;  // at most kMaxFailures, deterministic order
  double elapsed_seconds = 0;

  static constexpr std::size_t kMaxFailures = 5;
  std::string params() const;  // "n=5" or "n=5,i=2"
};

const std::vector<IdentityInfo>& list_identities();
// Throws std::invalid_argument for an unknown name.
const IdentityInfo& identity_info(const std::string& name);

// Exhaustive check of one entry. Throws std::invalid_argument for unknown names
// or out-of-range parameters, CapExceeded past the cap unless force is set.
IdentityReport verify(const std::string& name, const VerifyOptions& options);

// Every entry at every n in [min_n, min(n_max, cap)].
std::vector<IdentityReport> verify_all(int n_max, int jobs = 1);

}  // namespace permstat

#endif  // PERMSTAT_IDENTITIES_HPP
