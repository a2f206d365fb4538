#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tropid {

// Variable of the free semigroup: a lowercase letter with an optional numeric
// subscript (x, y, a, b, y1, y2, ...). Identity is the packed code, so equal
// names are the same variable everywhere.
class Variable {
 public:
  explicit Variable(char letter, int subscript = 0);

  char letter() const;
  int subscript() const;  // 0 means none
  std::string name() const;

  std::uint32_t id() const { return code_; }
  auto operator<=>(const Variable&) const = default;

 private:
  std::uint32_t code_;
};

struct Run {
  Variable var;
  long exp;  // >= 1 in canonical form
  bool operator==(const Run&) const = default;
};

// Run-length encoded word of the free semigroup. Canonical form: adjacent
// runs carry distinct variables and every exponent is positive; the empty
// sequence is the empty word e.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Run> runs);  // canonicalizes

  static Word letter(Variable v, long exp = 1);
  static Word from_letters(const std::vector<Variable>& letters);

  // Grammar: (letter subscript? ('^' exponent)?)+, whitespace ignored.
  // "x^2y^2x" == "xxyyx"; "y1y2^2y1" is y1 y2^2 y1.
  static Word parse(const std::string& text);

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  long length() const;
  std::vector<Variable> content() const;  // distinct variables, sorted
  std::vector<Variable> letters() const;  // flattened sequence
  std::string str() const;

  bool operator==(const Word&) const = default;
  // Lexicographic on the flattened letter sequence, shorter prefix first.
  bool operator<(const Word& o) const;

 private:
  std::vector<Run> runs_;
};

Word concat(const Word& u, const Word& v);

// Total number of occurrences of x in w.
long kappa(const Word& w, Variable x);

std::set<long> exponent_set(const Word& w);

bool is_k_uniform(const Word& w, long k);

// u occurs as a contiguous block of w's letter sequence; u must be nonempty.
bool is_factor(const Word& u, const Word& w);

// u's letter sequence is a scattered subsequence of v's.
bool is_subword(const Word& u, const Word& v);

// Exponent of the maximal prefix (suffix) power of x; 0 when w does not
// start (end) with x.
long pre_run(const Word& w, Variable x);
long suf_run(const Word& w, Variable x);

// Homomorphic image; every variable of cont(w) must have a nonempty image.
Word substitute(const Word& w, const std::map<Variable, Word>& images);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace tropid
