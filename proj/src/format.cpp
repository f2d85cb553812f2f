#include "permstat/format.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace permstat {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

// CSV cells never need quoting except free text.
std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

json terms_json(const MultiPoly& p) {
  const std::size_t width = 2 + static_cast<std::size_t>(p.arity());
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> exps(width);
    for (std::size_t i = 0; i < width; ++i) exps[i] = e[i];
    terms.push_back(json{{"coeff", c}, {"exps", exps}});
  }
  return terms;
}

json profile_json(const StatProfile& p) {
  return json{{"length", p.length},   {"maj", p.maj},
              {"rmaj", p.rmaj},       {"del", p.del},
              {"des_set", p.des_set}, {"des", p.des},
              {"del_set", p.del_set}, {"epsilon", p.epsilon},
              {"group", p.group == Group::S ? "S" : "A"},
              {"n", p.n},             {"perm", p.perm.to_vector()}};
}

json report_json(const IdentityReport& r, bool timing) {
  json j{{"name", r.name}, {"n", r.n}};
  if (r.i) j["i"] = *r.i;
  if (r.k) j["k"] = *r.k;
  j["params"] = r.params();
  j["pass"] = r.pass;
  j["points"] = r.points;
  j["elements_scanned"] = r.elements_scanned;
  j["lhs"] = r.lhs.to_string();
  j["rhs"] = r.rhs.to_string();
  j["failures"] = r.failures;
  if (timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

std::string report_row(const IdentityReport& r, bool timing) {
  std::string row = r.name + "," + csv_quote(r.params()) + "," + (r.pass ? "true" : "false");
  if (timing) row += "," + seconds(r.elapsed_seconds);
  return row;
}

std::string report_line(const IdentityReport& r, bool timing) {
  std::string out = std::string(r.pass ? "PASS" : "FAIL") + "  " + r.name + "  " + r.params() +
                    "  points=" + std::to_string(r.points) +
                    " scanned=" + std::to_string(r.elements_scanned);
  if (timing) out += " elapsed=" + seconds(r.elapsed_seconds) + "s";
  for (const auto& f : r.failures) out += "\n    " + f;
  if (!r.pass) out += "\n    lhs: " + r.lhs.to_string() + "\n    rhs: " + r.rhs.to_string();
  return out;
}

const char* last_name(ALast last) {
  return last == ALast::a1 ? "a1" : "a1inv";
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "pretty") return Format::pretty;
  throw std::invalid_argument("unknown format '" + text + "' (json, csv, pretty)");
}

std::string format_profile(const StatProfile& p, Format mode) {
  switch (mode) {
    case Format::json:
      return profile_json(p).dump();
    case Format::csv:
      return "group,n,perm,length,des_set,des,maj,rmaj,del,del_set,epsilon\n" +
             std::string(p.group == Group::S ? "S" : "A") + "," + std::to_string(p.n) + "," +
             join(p.perm.to_vector(), " ") + "," + std::to_string(p.length) + "," +
             join(p.des_set, " ") + "," + std::to_string(p.des) + "," + std::to_string(p.maj) + "," +
             std::to_string(p.rmaj) + "," + std::to_string(p.del) + "," + join(p.del_set, " ") + "," +
             join(p.epsilon, " ");
    case Format::pretty: {
      const std::string group = p.group == Group::S ? "S_" + std::to_string(p.n)
                                                    : "A_" + std::to_string(p.n + 1);
      return p.perm.to_string() + " in " + group + "\n  length  " + std::to_string(p.length) +
             "\n  des_set {" + join(p.des_set, ",") + "}\n  des     " + std::to_string(p.des) +
             "\n  maj     " + std::to_string(p.maj) + "\n  rmaj    " + std::to_string(p.rmaj) +
             "\n  del     " + std::to_string(p.del) + "\n  del_set {" + join(p.del_set, ",") +
             "}\n  epsilon (" + join(p.epsilon, ",") + ")";
    }
  }
  return {};
}

std::string polynomial_terms_json(const MultiPoly& p) { return terms_json(p).dump(); }

std::string format_polynomial(const MultiPoly& p, Format mode) {
  switch (mode) {
    case Format::json:
      return json{{"text", p.to_string()}, {"terms", terms_json(p)}}.dump();
    case Format::csv: {
      std::string out = "coeff";
      for (int v = 0; v < 2 + p.arity(); ++v) out += "," + variable_name(v);
      for (const auto& [e, c] : p.terms()) {
        out += "\n" + std::to_string(c);
        for (int v = 0; v < 2 + p.arity(); ++v) out += "," + std::to_string(e[static_cast<std::size_t>(v)]);
      }
      return out;
    }
    case Format::pretty:
      return p.to_string();
  }
  return {};
}

std::string format_word(const SCanonicalWord& word, const Permutation& perm, Format mode) {
  const std::string text = to_string(word);
  switch (mode) {
    case Format::json: {
      json factors = json::array();
      for (const auto& f : word.factors)
        if (!f.empty()) factors.push_back(json{{"j", f.j}, {"r", f.r}});
      return json{{"group", "S"}, {"n", word.n}, {"perm", perm.to_vector()}, {"factors", factors},
                  {"text", text}}
          .dump();
    }
    case Format::csv: {
      std::string out = "j,r";
      for (const auto& f : word.factors)
        if (!f.empty()) out += "\n" + std::to_string(f.j) + "," + std::to_string(f.r);
      return out;
    }
    case Format::pretty:
      return text;
  }
  return {};
}

std::string format_word(const ACanonicalWord& word, const Permutation& perm, Format mode) {
  const std::string text = to_string(word);
  switch (mode) {
    case Format::json: {
      json factors = json::array();
      for (const auto& f : word.factors) {
        if (f.empty()) continue;
        json jf{{"j", f.j}, {"r", f.r}};
        if (f.last == ALast::none)
          jf["last"] = nullptr;
        else
          jf["last"] = last_name(f.last);
        factors.push_back(jf);
      }
      return json{{"group", "A"}, {"n", word.m - 1}, {"perm", perm.to_vector()}, {"factors", factors},
                  {"text", text}}
          .dump();
    }
    case Format::csv: {
      std::string out = "j,r,last";
      for (const auto& f : word.factors)
        if (!f.empty())
          out += "\n" + std::to_string(f.j) + "," + std::to_string(f.r) + "," +
                 (f.last == ALast::none ? "" : last_name(f.last));
      return out;
    }
    case Format::pretty:
      return text;
  }
  return {};
}

std::string format_report(const IdentityReport& r, Format mode, bool timing) {
  switch (mode) {
    case Format::json:
      return report_json(r, timing).dump();
    case Format::csv:
      return report_row(r, timing);
    case Format::pretty:
      return report_line(r, timing);
  }
  return {};
}

std::string format_reports(const std::vector<IdentityReport>& reports, Format mode, bool timing) {
  if (reports.size() == 1 && mode != Format::csv) return format_report(reports.front(), mode, timing);
  switch (mode) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_json(r, timing));
      return arr.dump();
    }
    case Format::csv: {
      std::string out = timing ? "name,params,pass,elapsed" : "name,params,pass";
      for (const auto& r : reports) out += "\n" + report_row(r, timing);
      return out;
    }
    case Format::pretty: {
      std::string out;
      long long failed = 0;
      for (const auto& r : reports) {
        out += report_line(r, timing) + "\n";
        failed += r.pass ? 0 : 1;
      }
      return out + std::to_string(reports.size() - static_cast<std::size_t>(failed)) + "/" +
             std::to_string(reports.size()) + " checks passed";
    }
  }
  return {};
}

std::string format_identity_list(const std::vector<IdentityInfo>& infos, Format mode) {
  switch (mode) {
    case Format::json: {
      json arr = json::array();
      for (const auto& i : infos)
        arr.push_back(json{{"name", i.name},
                           {"params", i.params},
                           {"min_n", i.min_n},
                           {"cap", i.cap},
                           {"statement", i.statement}});
      return arr.dump();
    }
    case Format::csv: {
      std::string out = "name,params,min_n,cap,statement";
      for (const auto& i : infos)
        out += "\n" + i.name + "," + csv_quote(i.params) + "," + std::to_string(i.min_n) + "," +
               std::to_string(i.cap) + "," + csv_quote(i.statement);
      return out;
    }
    case Format::pretty: {
      std::size_t width = 0;
      for (const auto& i : infos) width = std::max(width, i.name.size());
      std::string out;
      for (std::size_t k = 0; k < infos.size(); ++k) {
        const auto& i = infos[k];
        if (k) out += "\n";
        out += i.name + std::string(width + 2 - i.name.size(), ' ') + i.params + "  [" +
               std::to_string(i.min_n) + ".." + std::to_string(i.cap) + "]  " + i.statement;
      }
      return out;
    }
  }
  return {};
}

}  // namespace permstat
