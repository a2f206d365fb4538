#include "tropid/word_classes.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropid {

WordClassSpec::WordClassSpec(std::vector<Variable> alphabet_, int max_exp_, int length_)
    : alphabet(std::move(alphabet_)), max_exp(max_exp_), length(length_) {
  if (alphabet.empty()) throw std::invalid_argument("word class: empty alphabet");
  std::vector<Variable> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("word class: repeated variable");
  if (max_exp < 1) throw std::invalid_argument("word class: max_exp must be >= 1");
  if (length < max_exp)
    throw std::invalid_argument("word class: length must be >= max_exp");
}

std::vector<Word> enumerate_class(const WordClassSpec& spec) {
  std::vector<Word> out;
  std::vector<Variable> current;
  current.reserve(static_cast<std::size_t>(spec.length));

  auto run_at_end = [&]() {
    int run = 0;
    for (auto it = current.rbegin(); it != current.rend() && *it == current.back(); ++it)
      ++run;
    return run;
  };

  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == spec.length) {
      out.push_back(Word::from_letters(current));
      return;
    }
    for (Variable v : spec.alphabet) {
      if (!current.empty() && current.back() == v && run_at_end() >= spec.max_exp)
        continue;
      current.push_back(v);
      self(self);
      current.pop_back();
    }
  };
  rec(rec);
  return out;
}

bool is_power_word(const Word& w, const WordClassSpec& spec) {
  for (const Run& r : w.runs()) {
    if (r.exp > spec.max_exp) return false;
    if (std::find(spec.alphabet.begin(), spec.alphabet.end(), r.var) ==
        spec.alphabet.end())
      return false;
  }
  if (w.empty()) return false;
  for (const Word& u : enumerate_class(spec))
    if (!is_factor(u, w)) return false;
  return true;
}

bool is_faithful(const Word& w, const WordClassSpec& spec) {
  if (!is_power_word(w, spec))
    throw std::invalid_argument("is_faithful: not a power word for the spec");
  std::vector<Variable> c = spec.alphabet;
  std::sort(c.begin(), c.end());
  if (w.content() != c) return false;
  std::set<long> want;
  for (long t = 1; t <= spec.max_exp; ++t) want.insert(t);
  return exponent_set(w) == want;
}

}  // namespace tropid
