#include "tropid/word.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tropid {

namespace {
constexpr std::uint32_t kSubscriptLimit = 1000;  // subscripts 0..999
}

Variable::Variable(char letter, int subscript) {
  if (letter < 'a' || letter > 'z')
    throw std::invalid_argument("variable letter must be in [a-z]");
  if (subscript < 0 || subscript >= static_cast<int>(kSubscriptLimit))
    throw std::invalid_argument("variable subscript out of range");
  code_ = static_cast<std::uint32_t>(letter - 'a') * kSubscriptLimit +
          static_cast<std::uint32_t>(subscript);
}

char Variable::letter() const { return static_cast<char>('a' + code_ / kSubscriptLimit); }

int Variable::subscript() const { return static_cast<int>(code_ % kSubscriptLimit); }

std::string Variable::name() const {
  std::string s(1, letter());
  if (subscript() > 0) s += std::to_string(subscript());
  return s;
}

Word::Word(std::vector<Run> runs) {
  for (const Run& r : runs) {
    if (r.exp <= 0) continue;
    if (!runs_.empty() && runs_.back().var == r.var)
      runs_.back().exp += r.exp;
    else
      runs_.push_back(r);
  }
}

Word Word::letter(Variable v, long exp) {
  if (exp <= 0) return Word();
  return Word({Run{v, exp}});
}

Word Word::from_letters(const std::vector<Variable>& letters) {
  std::vector<Run> runs;
  runs.reserve(letters.size());
  for (Variable v : letters) runs.push_back(Run{v, 1});
  return Word(std::move(runs));
}

Word Word::parse(const std::string& raw) {
  std::string text;
  text.reserve(raw.size());
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;

  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c < 'a' || c > 'z')
      throw std::invalid_argument("bad word: expected letter at '" + text.substr(i) + "'");
    ++i;
    int subscript = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      subscript = subscript * 10 + (text[i] - '0');
      if (subscript >= 1000) throw std::invalid_argument("bad word: subscript too large");
      ++i;
    }
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad word: missing exponent after '^'");
      exp = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        if (exp > 1000000) throw std::invalid_argument("bad word: exponent too large");
        ++i;
      }
      if (exp == 0) throw std::invalid_argument("bad word: zero exponent");
    }
    runs.push_back(Run{Variable(c, subscript), exp});
  }
  if (runs.empty()) throw std::invalid_argument("bad word: empty input");
  return Word(std::move(runs));
}

long Word::length() const {
  long n = 0;
  for (const Run& r : runs_) n += r.exp;
  return n;
}

std::vector<Variable> Word::content() const {
  std::vector<Variable> vars;
  for (const Run& r : runs_) vars.push_back(r.var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::vector<Variable> Word::letters() const {
  std::vector<Variable> seq;
  seq.reserve(static_cast<std::size_t>(length()));
  for (const Run& r : runs_)
    for (long k = 0; k < r.exp; ++k) seq.push_back(r.var);
  return seq;
}

std::string Word::str() const {
  if (runs_.empty()) return "e";
  std::string s;
  for (const Run& r : runs_) {
    s += r.var.name();
    if (r.exp > 1) s += "^" + std::to_string(r.exp);
  }
  return s;
}

bool Word::operator<(const Word& o) const {
  const auto a = letters();
  const auto b = o.letters();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word concat(const Word& u, const Word& v) {
  std::vector<Run> runs = u.runs();
  runs.insert(runs.end(), v.runs().begin(), v.runs().end());
  return Word(std::move(runs));
}

long kappa(const Word& w, Variable x) {
  long n = 0;
  for (const Run& r : w.runs())
    if (r.var == x) n += r.exp;
  return n;
}

std::set<long> exponent_set(const Word& w) {
  std::set<long> exps;
  for (const Run& r : w.runs()) exps.insert(r.exp);
  return exps;
}

bool is_k_uniform(const Word& w, long k) {
  for (Variable x : w.content())
    if (kappa(w, x) != k) return false;
  return true;
}

bool is_factor(const Word& u, const Word& w) {
  if (u.empty()) throw std::invalid_argument("is_factor: empty pattern");
  const auto needle = u.letters();
  const auto hay = w.letters();
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

bool is_subword(const Word& u, const Word& v) {
  const auto a = u.letters();
  const auto b = v.letters();
  std::size_t i = 0;
  for (std::size_t j = 0; i < a.size() && j < b.size(); ++j)
    if (a[i] == b[j]) ++i;
  return i == a.size();
}

long pre_run(const Word& w, Variable x) {
  if (w.empty() || w.runs().front().var != x) return 0;
  return w.runs().front().exp;
}

long suf_run(const Word& w, Variable x) {
  if (w.empty() || w.runs().back().var != x) return 0;
  return w.runs().back().exp;
}

Word substitute(const Word& w, const std::map<Variable, Word>& images) {
  std::vector<Run> runs;
  for (const Run& r : w.runs()) {
    auto it = images.find(r.var);
    if (it == images.end())
      throw std::invalid_argument("substitute: no image for " + r.var.name());
    if (it->second.empty())
      throw std::invalid_argument("substitute: empty image for " + r.var.name());
    for (long k = 0; k < r.exp; ++k)
      runs.insert(runs.end(), it->second.runs().begin(), it->second.runs().end());
  }
  return Word(std::move(runs));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace tropid
