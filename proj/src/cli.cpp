#include "permstat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "permstat/canonical.hpp"
#include "permstat/covering.hpp"
#include "permstat/format.hpp"
#include "permstat/identities.hpp"
#include "permstat/shuffles.hpp"
#include "permstat/statistics.hpp"

namespace permstat::cli {

namespace {

// Enumeration caps without --force.
constexpr int kGenfunCapS = 11;
constexpr int kGenfunCapA = 10;
constexpr int kShufflesCap = 10;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Group parse_group(const std::string& g) {
  if (g == "S") return Group::S;
  if (g == "A") return Group::A;
  throw UsageError("--group must be S or A");
}

std::vector<int> parse_cuts(const std::string& text) {
  std::vector<int> cuts;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed cut '" + tok + "' in --b");
    }
    if (used != tok.size()) throw UsageError("malformed cut '" + tok + "' in --b");
    cuts.push_back(v);
  }
  return cuts;
}

MultiPoly generating_function(Group group, int n, const std::string& q_stat, bool with_del,
                              bool multivar) {
  MultiPoly sum(multivar ? n - 1 : 0);
  auto visit = [&](const Permutation& p) {
    const bool is_s = group == Group::S;
    const int qe = static_cast<int>(is_s ? (q_stat == "rmaj" ? rmaj_s(p, n) : statistic_s(q_stat, p))
                                         : (q_stat == "rmaj" ? rmaj_a(p, n) : statistic_a(q_stat, p)));
    const int te = with_del ? (is_s ? del_s(p) : del_a(p)) : 0;
    std::vector<int> eps;
    if (multivar) eps = is_s ? epsilon_s(p) : epsilon_a(p);
    sum.add_term(exponents(qe, te, eps), 1);
  };
  if (group == Group::S)
    for_each_permutation(n, visit);
  else
    for_each_even_permutation(n + 1, visit);
  return sum;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation statistics on S_n and A_{n+1}: canonical words, generating "
               "functions and an exhaustive identity verifier.",
               "permstat"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_text = "json";
  std::string out_path;
  bool timing = false;
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write results to this file instead of standard output");
  app.add_flag("--timing", timing, "Include elapsed time in verify reports");

  std::string group_text;
  std::string perm_text;

  auto* stat = app.add_subcommand("stat", "All statistics of one permutation");
  stat->add_option("--group", group_text, "S or A")->required();
  stat->add_option("perm", perm_text, "One-line notation, e.g. \"[2,5,4,1,3]\"")->required();

  auto* canon = app.add_subcommand("canon", "Canonical presentation");
  canon->add_option("--group", group_text, "S or A")->required();
  canon->add_option("perm", perm_text, "One-line notation")->required();

  auto* fib = app.add_subcommand("fiber", "Preimage of w in S_n under the covering map");
  fib->add_option("perm", perm_text, "One-line notation of w in S_n")->required();

  int n = 0;
  std::string cuts_text;
  bool force = false;
  auto* shuf = app.add_subcommand("shuffles", "Enumerate B-shuffles as JSON lines");
  shuf->add_option("--n", n, "Degree")->required();
  shuf->add_option("--b", cuts_text, "Cut points i1,i2,...")->required();
  shuf->add_flag("--force", force, "Lift the degree cap");

  std::string q_stat = "length";
  std::string t_stat = "del";
  bool multivar = false;
  auto* gen = app.add_subcommand("genfun", "Generating polynomial over S_n or A_{n+1}");
  gen->add_option("--group", group_text, "S or A")->required();
  gen->add_option("--n", n, "S_n, or A_{n+1}")->required();
  gen->add_option("--q-stat", q_stat, "Statistic on q")
      ->check(CLI::IsMember({"length", "maj", "rmaj"}))
      ->capture_default_str();
  gen->add_option("--t-stat", t_stat, "Statistic on t")
      ->check(CLI::IsMember({"del", "none"}))
      ->capture_default_str();
  gen->add_flag("--multivar", multivar, "Track epsilon with t1, t2, ...");
  gen->add_flag("--force", force, "Lift the degree cap");

  std::string name;
  bool all = false;
  std::optional<int> n_opt;
  int n_max = 5;
  std::optional<int> i_opt;
  std::optional<int> k_opt;
  int jobs = 0;
  auto* ver = app.add_subcommand("verify", "Exhaustively check an identity");
  ver->add_option("name", name, "Registry name (see list)");
  ver->add_flag("--all", all, "Every identity at every n up to --n-max");
  ver->add_option("--n", n_opt, "Degree parameter");
  ver->add_option("--n-max", n_max, "Largest n for --all")->capture_default_str();
  ver->add_option("--i", i_opt, "Shuffle cut (entries taking i)");
  ver->add_option("--k", k_opt, "Second parameter (entries taking k)");
  ver->add_flag("--force", force, "Lift the enumeration cap");
  ver->add_option("--jobs", jobs, "Worker threads; 0 = available parallelism")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* lst = app.add_subcommand("list", "List the identity registry");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "permstat: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }

  std::string result;
  int code = kExitOk;
  try {
    const Format mode = parse_format(format_text);
    if (stat->parsed()) {
      const Group g = parse_group(group_text);
      const Permutation p = parse_one_line(perm_text);
      result = format_profile(g == Group::S ? profile_s(p) : profile_a(p), mode);
    } else if (canon->parsed()) {
      const Group g = parse_group(group_text);
      const Permutation p = parse_one_line(perm_text);
      result = g == Group::S ? format_word(s_canonical(p), p, mode) : format_word(a_canonical(p), p, mode);
    } else if (fib->parsed()) {
      const Permutation w = parse_one_line(perm_text);
      if (w.degree() + 1 > kMaxDegree) throw UsageError("fiber needs n+1 <= " + std::to_string(kMaxDegree));
      const auto members = fiber(w);
      std::ostringstream s;
      if (mode == Format::json) {
        s << "{\"w\":" << "[";
        const auto img = w.to_vector();
        for (std::size_t x = 0; x < img.size(); ++x) s << (x ? "," : "") << img[x];
        s << "],\"del\":" << del_s(w) << ",\"size\":" << members.size() << ",\"members\":[";
        for (std::size_t m = 0; m < members.size(); ++m) {
          const auto v = members[m].to_vector();
          s << (m ? "," : "") << "[";
          for (std::size_t x = 0; x < v.size(); ++x) s << (x ? "," : "") << v[x];
          s << "]";
        }
        s << "]}";
      } else {
        if (mode == Format::csv) s << "member";
        for (std::size_t m = 0; m < members.size(); ++m) {
          if (m || mode == Format::csv) s << "\n";
          s << (mode == Format::csv ? "\"" + members[m].to_string() + "\"" : members[m].to_string());
        }
      }
      result = s.str();
    } else if (shuf->parsed()) {
      if (n < 1 || n > kMaxDegree) throw UsageError("--n must lie in [1, " + std::to_string(kMaxDegree) + "]");
      if (n > kShufflesCap && !force)
        throw UsageError("shuffles: n=" + std::to_string(n) + " exceeds the enumeration cap " +
                         std::to_string(kShufflesCap) + " (use --force)");
      const ShuffleSet set(n, parse_cuts(cuts_text));
      std::string lines;
      for (const auto& p : enumerate_b_shuffles(set)) {
        const auto v = p.to_vector();
        lines += "[";
        for (std::size_t x = 0; x < v.size(); ++x) lines += (x ? "," : "") + std::to_string(v[x]);
        lines += "]\n";
      }
      if (!lines.empty()) lines.pop_back();
      result = lines;
    } else if (gen->parsed()) {
      const Group g = parse_group(group_text);
      const int cap = g == Group::S ? kGenfunCapS : kGenfunCapA;
      const int degree = g == Group::S ? n : n + 1;
      if (n < 1 || degree > kMaxDegree) throw UsageError("--n out of range");
      if (n > cap && !force)
        throw UsageError("genfun: n=" + std::to_string(n) + " exceeds the enumeration cap " +
                         std::to_string(cap) + " (use --force)");
      if (multivar && n - 1 > MultiPoly::kMaxArity) throw UsageError("--multivar supports n <= 23");
      result = format_polynomial(generating_function(g, n, q_stat, t_stat == "del", multivar), mode);
    } else if (ver->parsed()) {
      std::vector<IdentityReport> reports;
      if (all) {
        if (!name.empty() || n_opt || i_opt || k_opt)
          throw UsageError("--all takes only --n-max and --jobs");
        if (n_max < 1 || n_max > kMaxDegree) throw UsageError("--n-max out of range");
        reports = verify_all(n_max, jobs);
      } else {
        if (name.empty()) throw UsageError("verify needs an identity name or --all");
        if (!n_opt) throw UsageError("verify " + name + " needs --n");
        VerifyOptions o;
        o.n = *n_opt;
        o.i = i_opt;
        o.k = k_opt;
        o.force = force;
        o.jobs = jobs;
        reports.push_back(verify(name, o));
      }
      for (const auto& r : reports)
        if (!r.pass) code = kExitFailure;
      result = format_reports(reports, mode, timing);
    } else if (lst->parsed()) {
      result = format_identity_list(list_identities(), mode);
    }
  } catch (const std::overflow_error& e) {
    err << "permstat: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    // Malformed input, out-of-range parameters, caps, odd permutations for A.
    err << "permstat: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "permstat: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    file << result << "\n";
  } else {
    out << result << "\n";
  }
  return code;
}

}  // namespace permstat::cli
