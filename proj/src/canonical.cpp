#include "permstat/canonical.hpp"

#include <sstream>
#include <stdexcept>

namespace permstat {

namespace {

void apply_letter_s(PermutationBuilder& b, int i) { b.swap_positions(i); }

// a_i = s_1 s_{i+1}; a_1^{-1} = s_2 s_1.
void apply_letter_a(PermutationBuilder& b, const Letter& l) {
  if (l.index == 1 && l.inverse) {
    b.swap_positions(2);
    b.swap_positions(1);
  } else {
    b.swap_positions(1);
    b.swap_positions(l.index + 1);
  }
}

}  // namespace

int SCanonicalWord::length() const {
  int total = 0;
  for (const auto& f : factors) total += f.length();
  return total;
}

int ACanonicalWord::length() const {
  int total = 0;
  for (const auto& f : factors) total += f.length();
  return total;
}

// S-procedure: for j = n-1 down to 1, pull the value j+1 right to position j+1.
// If it sat at position r the factor is s_j ... s_r.
SCanonicalWord s_canonical(const Permutation& w) {
  const int n = w.degree();
  SCanonicalWord word{n, std::vector<SFactor>(static_cast<std::size_t>(n - 1))};
  PermutationBuilder b(w);
  for (int j = n - 1; j >= 1; --j) {
    const int r = b.position_of(j + 1);
    word.factors[static_cast<std::size_t>(j - 1)] = {j, r <= j ? r : 0};
    b.move_entry(r, j + 1);
  }
  return word;
}

// A-procedure on A_m, m = n+1: for j = m-2 down to 1 pull j+2 right to position
// j+2; an odd number of adjacent moves is fixed by a trailing s_1. Position
// r >= 3 gives a_j ... a_{r-1}; r == 2 ends in a_1 and r == 1 in a_1^{-1}.
ACanonicalWord a_canonical(const Permutation& v) {
  if (!is_even(v)) throw std::domain_error(v.to_string() + " is not an even permutation");
  const int m = v.degree();
  ACanonicalWord word{m, std::vector<AFactor>(static_cast<std::size_t>(m >= 2 ? m - 2 : 0))};
  PermutationBuilder b(v);
  for (int j = m - 2; j >= 1; --j) {
    const int r = b.position_of(j + 2);
    AFactor f{j, 0, ALast::none};
    if (r <= j + 1) {
      b.move_entry(r, j + 2);
      if ((j + 2 - r) % 2 == 1) b.swap_positions(1);
      if (r >= 3)
        f.r = r - 1;
      else
        f = {j, 1, r == 2 ? ALast::a1 : ALast::a1_inverse};
    }
    word.factors[static_cast<std::size_t>(j - 1)] = f;
  }
  return word;
}

void validate(const SCanonicalWord& word) {
  if (word.n < 1 || word.n > kMaxDegree) throw std::invalid_argument("S word degree out of range");
  if (static_cast<int>(word.factors.size()) != word.n - 1)
    throw std::invalid_argument("S word over S_" + std::to_string(word.n) + " needs " +
                                std::to_string(word.n - 1) + " factors");
  for (std::size_t idx = 0; idx < word.factors.size(); ++idx) {
    const auto& f = word.factors[idx];
    const int j = static_cast<int>(idx) + 1;
    if (f.j != j) throw std::invalid_argument("factor " + std::to_string(j) + " labelled " +
                                              std::to_string(f.j));
    if (f.r < 0 || f.r > j)
      throw std::invalid_argument("factor " + std::to_string(j) + " has tail index " +
                                  std::to_string(f.r));
  }
}

void validate(const ACanonicalWord& word) {
  if (word.m < 1 || word.m > kMaxDegree) throw std::invalid_argument("A word degree out of range");
  const int count = word.m >= 2 ? word.m - 2 : 0;
  if (static_cast<int>(word.factors.size()) != count)
    throw std::invalid_argument("A word over A_" + std::to_string(word.m) + " needs " +
                                std::to_string(count) + " factors");
  for (std::size_t idx = 0; idx < word.factors.size(); ++idx) {
    const auto& f = word.factors[idx];
    const int j = static_cast<int>(idx) + 1;
    if (f.j != j) throw std::invalid_argument("factor " + std::to_string(j) + " labelled " +
                                              std::to_string(f.j));
    if (f.r < 0 || f.r > j)
      throw std::invalid_argument("factor " + std::to_string(j) + " has tail index " +
                                  std::to_string(f.r));
    if ((f.r == 1) != (f.last != ALast::none))
      throw std::invalid_argument("factor " + std::to_string(j) +
                                  ": a final a_1^{+-1} letter is required exactly when r == 1");
  }
}

Permutation to_permutation(const SCanonicalWord& word) {
  validate(word);
  PermutationBuilder b(word.n);
  for (const auto& f : word.factors)
    if (!f.empty()) b.move_entry(f.j + 1, f.r);
  return std::move(b).finish();
}

Permutation to_permutation(const ACanonicalWord& word) {
  validate(word);
  PermutationBuilder b(word.m);
  for (const auto& f : word.factors)
    for (const auto& l : letters(f)) apply_letter_a(b, l);
  return std::move(b).finish();
}

int occurrences(const SCanonicalWord& word, int k) {
  if (k < 1 || k > word.n - 1)
    throw std::out_of_range("s_" + std::to_string(k) + " is not a generator of S_" +
                            std::to_string(word.n));
  int count = 0;
  for (const auto& f : word.factors) count += f.contains(k) ? 1 : 0;
  return count;
}

int occurrences(const ACanonicalWord& word, int k) {
  if (k < 1 || k > word.m - 2)
    throw std::out_of_range("a_" + std::to_string(k) + " is not a generator of A_" +
                            std::to_string(word.m));
  int count = 0;
  for (const auto& f : word.factors) count += f.contains(k) ? 1 : 0;
  return count;
}

std::vector<int> epsilon(const SCanonicalWord& word) {
  std::vector<int> e;
  e.reserve(word.factors.size());
  for (const auto& f : word.factors) e.push_back(f.contains(1) ? 1 : 0);
  return e;
}

std::vector<int> epsilon(const ACanonicalWord& word) {
  std::vector<int> e;
  e.reserve(word.factors.size());
  for (const auto& f : word.factors) e.push_back(f.contains(1) ? 1 : 0);
  return e;
}

std::vector<int> epsilon_s(const Permutation& w) { return epsilon(s_canonical(w)); }
std::vector<int> epsilon_a(const Permutation& v) { return epsilon(a_canonical(v)); }

std::vector<int> t_vector(const Permutation& w) {
  const int n = w.degree();
  const Permutation winv = inverse(w);
  std::vector<int> t;
  for (int j = 2; j <= n; ++j) {
    int count = 0;
    for (int i = 1; i < j; ++i)
      if (winv(i) > winv(j)) ++count;
    t.push_back(count);
  }
  return t;
}

std::vector<SFactor> staircase_s(int j) {
  std::vector<SFactor> out{{j, 0}};
  for (int r = j; r >= 1; --r) out.push_back({j, r});
  return out;
}

std::vector<AFactor> staircase_a(int j) {
  std::vector<AFactor> out{{j, 0, ALast::none}};
  for (int r = j; r >= 2; --r) out.push_back({j, r, ALast::none});
  out.push_back({j, 1, ALast::a1});
  out.push_back({j, 1, ALast::a1_inverse});
  return out;
}

Permutation factor_permutation(const SFactor& f, int n) {
  if (f.j >= n) throw std::out_of_range("factor index exceeds S_" + std::to_string(n));
  PermutationBuilder b(n);
  for (const auto& l : letters(f)) apply_letter_s(b, l.index);
  return std::move(b).finish();
}

Permutation factor_permutation(const AFactor& f, int m) {
  if (f.j > m - 2) throw std::out_of_range("factor index exceeds A_" + std::to_string(m));
  PermutationBuilder b(m);
  for (const auto& l : letters(f)) apply_letter_a(b, l);
  return std::move(b).finish();
}

std::vector<Letter> letters(const SFactor& f) {
  std::vector<Letter> out;
  if (f.empty()) return out;
  for (int i = f.j; i >= f.r; --i) out.push_back({i, false});
  return out;
}

std::vector<Letter> letters(const AFactor& f) {
  std::vector<Letter> out;
  if (f.empty()) return out;
  for (int i = f.j; i >= f.r; --i) out.push_back({i, false});
  if (f.last == ALast::a1_inverse) out.back().inverse = true;
  return out;
}

std::vector<Letter> letters(const SCanonicalWord& word) {
  std::vector<Letter> out;
  for (const auto& f : word.factors)
    for (const auto& l : letters(f)) out.push_back(l);
  return out;
}

std::vector<Letter> letters(const ACanonicalWord& word) {
  std::vector<Letter> out;
  for (const auto& f : word.factors)
    for (const auto& l : letters(f)) out.push_back(l);
  return out;
}

namespace {

template <class Factor>
std::string factors_to_string(const std::vector<Factor>& factors, char prefix) {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t idx = 0; idx < factors.size(); ++idx) {
    if (idx) out += " | ";
    const auto ls = letters(factors[idx]);
    if (ls.empty()) {
      out += '1';
      continue;
    }
    for (std::size_t k = 0; k < ls.size(); ++k) {
      if (k) out += ' ';
      out += prefix;
      out += std::to_string(ls[k].index);
      if (ls[k].inverse) out += "^-1";
    }
  }
  return out;
}

template <class Factor>
std::string factors_to_subscript_string(const std::vector<Factor>& factors, char prefix) {
  std::string out;
  for (const auto& f : factors) {
    out += '(';
    const auto ls = letters(f);
    if (ls.empty()) out += '1';
    for (const auto& l : ls) {
      out += prefix;
      out += '_';
      out += std::to_string(l.index);
      if (l.inverse) out += "^{-1}";
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

std::vector<Letter> parse_letters(std::string_view text, char prefix) {
  std::string body(text);
  for (char& c : body)
    if (c == '|' || c == '(' || c == ')' || c == ',' || c == '*') c = ' ';
  std::istringstream in(body);
  std::string token;
  std::vector<Letter> out;
  while (in >> token) {
    if (token == "1") continue;
    Letter l;
    std::string rest = token;
    if (rest.size() < 2 || rest[0] != prefix)
      throw ParseError("unexpected letter \"" + token + "\"");
    rest = rest.substr(1);
    if (rest[0] == '_') rest = rest.substr(1);
    const auto caret = rest.find('^');
    std::string exponent;
    if (caret != std::string::npos) {
      exponent = rest.substr(caret + 1);
      rest = rest.substr(0, caret);
      if (!exponent.empty() && exponent.front() == '{' && exponent.back() == '}')
        exponent = exponent.substr(1, exponent.size() - 2);
    }
    std::size_t used = 0;
    try {
      l.index = std::stoi(rest, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed letter \"" + token + "\"");
    }
    if (used != rest.size() || l.index < 1) throw ParseError("malformed letter \"" + token + "\"");
    if (!exponent.empty()) {
      if (exponent != "-1" && exponent != "1")
        throw ParseError("unsupported exponent in \"" + token + "\"");
      l.inverse = exponent == "-1";
    }
    out.push_back(l);
  }
  return out;
}

}  // namespace

std::string to_string(const SCanonicalWord& word) { return factors_to_string(word.factors, 's'); }
std::string to_string(const ACanonicalWord& word) { return factors_to_string(word.factors, 'a'); }
std::string to_subscript_string(const SCanonicalWord& word) {
  return factors_to_subscript_string(word.factors, 's');
}
std::string to_subscript_string(const ACanonicalWord& word) {
  return factors_to_subscript_string(word.factors, 'a');
}

Permutation evaluate_s_word(std::string_view text, int degree) {
  const auto ls = parse_letters(text, 's');
  int needed = 1;
  for (const auto& l : ls) needed = std::max(needed, l.index + 1);
  const int n = degree == 0 ? needed : degree;
  if (n < needed)
    throw ParseError("degree " + std::to_string(n) + " too small for the letters given");
  PermutationBuilder b(n);
  // s_i is an involution, so s_i^{-1} = s_i.
  for (const auto& l : ls) apply_letter_s(b, l.index);
  return std::move(b).finish();
}

Permutation evaluate_a_word(std::string_view text, int degree) {
  const auto ls = parse_letters(text, 'a');
  int needed = 3;
  for (const auto& l : ls) needed = std::max(needed, l.index + 2);
  const int m = degree == 0 ? needed : degree;
  if (m < needed)
    throw ParseError("degree " + std::to_string(m) + " too small for the letters given");
  PermutationBuilder b(m);
  for (const auto& l : ls) {
    // a_i is an involution for i >= 2.
    apply_letter_a(b, {l.index, l.index == 1 && l.inverse});
  }
  return std::move(b).finish();
}

}  // namespace permstat
