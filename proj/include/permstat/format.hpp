#ifndef PERMSTAT_FORMAT_HPP
#define PERMSTAT_FORMAT_HPP

#include <string>
#include <vector>

#include "permstat/canonical.hpp"
#include "permstat/identities.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

enum class Format { json, csv, pretty };

// Throws std::invalid_argument for anything but "json", "csv", "pretty".
Format parse_format(const std::string& text);

// All renderers are deterministic and end without a trailing newline.
std::string format_profile(const StatProfile& profile, Format mode);

// JSON: {"text": ..., "terms": [{"coeff": c, "exps": [...]}, ...]}.
std::string format_polynomial(const MultiPoly& p, Format mode);
// The JSON term list alone.
std::string polynomial_terms_json(const MultiPoly& p);

// Pretty: "s1 | 1 | s3 s2 | s4 s3 s2". JSON lists the non-empty factors as
// {"j", "r"} (plus "last" for A words) and carries the pretty text.
std::string format_word(const SCanonicalWord& word, const Permutation& perm, Format mode);
std::string format_word(const ACanonicalWord& word, const Permutation& perm, Format mode);

// Elapsed time is reported only when `timing` is set, which keeps the
// default output byte-identical across runs.
std::string format_report(const IdentityReport& report, Format mode, bool timing);
// A single report prints as an object, several as an array (JSON) or rows
// under one header (CSV).
std::string format_reports(const std::vector<IdentityReport>& reports, Format mode, bool timing);

std::string format_identity_list(const std::vector<IdentityInfo>& infos, Format mode);

}  // namespace permstat

#endif  // PERMSTAT_FORMAT_HPP
