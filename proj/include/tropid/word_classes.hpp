#pragma once

#include "tropid/word.hpp"

namespace tropid {

// The class W_n[C, P]: words over the ordered alphabet C of length n whose
// run exponents stay within P = {1, ..., max_exp}. P is kept down-closed by
// construction, and n >= max_exp.
struct WordClassSpec {
  std::vector<Variable> alphabet;  // C, declared order drives enumeration
  int max_exp;                     // m, P = {1..m}
  int length;                      // n

  WordClassSpec(std::vector<Variable> alphabet_, int max_exp_, int length_);

  // {x, y} with P = {1,2}, the configuration the matrix identities use.
  static WordClassSpec xy(int length_) {
    return WordClassSpec({Variable('x'), Variable('y')}, 2, length_);
  }
};

// All members of W_n[C, P] in lexicographic order of the flattened letter
// sequence under C's declared ordering.
std::vector<Word> enumerate_class(const WordClassSpec& spec);

// Every member of the class is a factor of w, cont(w) is within C and every
// run exponent of w is within P.
bool is_power_word(const Word& w, const WordClassSpec& spec);

// Power word whose content is exactly C and exponent set exactly P.
// Requires is_power_word(w, spec).
bool is_faithful(const Word& w, const WordClassSpec& spec);

}  // namespace tropid
