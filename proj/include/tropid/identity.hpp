#pragma once

#include "tropid/word_classes.hpp"

namespace tropid {

// Semigroup identity u = v between two distinct words.
class Identity {
 public:
  Identity(Word lhs, Word rhs);  // rejects the trivial case lhs == rhs

  const Word& lhs() const { return lhs_; }
  const Word& rhs() const { return rhs_; }

  long length() const;                     // max of the side lengths
  std::vector<Variable> content() const;   // union of both sides, sorted
  std::set<long> exponent_set() const;     // union of both sides

  bool operator==(const Identity&) const = default;
  std::string str() const;

 private:
  Word lhs_;
  Word rhs_;
};

// Every variable occurs equally often on both sides.
bool is_balanced(const Identity& id);
// Balanced, and both sides are k-uniform for a common k.
bool is_uniformly_balanced(const Identity& id);

// Concatenates the class members in enumeration order, inserting a single
// separator letter wherever direct concatenation would push a run past
// max(P). The result is a faithful power word. Requires |C| >= 2.
Word construct_power_word(const WordClassSpec& spec);

// Guard words placed around a power word before it is used in an identity:
// SingleLetter inserts one letter, MinBlock inserts the block
// x_1^{t_min}...x_m^{t_min} (or its reverse), which keeps a uniform power
// word uniform.
enum class ExtensionRule { SingleLetter, MinBlock };

// w1 w w2 with w1/w2 chosen by comparing the boundary runs of w against
// d = max(P) - min(P); still a power word. Requires is_power_word(w, spec).
Word extend_for_identity(const Word& w, const WordClassSpec& spec,
                         ExtensionRule rule = ExtensionRule::SingleLetter);

enum class IdentityForm { General, SingleLetter };

// General:       w' z1 w' = w' z2 w'  with z1 = x_1...x_m, z2 reversed
//                (needs |C| > 1, |P| > 1, max(P) >= 2 min(P));
// SingleLetter:  w' x w' = w' y w'    (needs |C| = 2, P = {1,2}).
// The base power word is the canonical witness for the spec; pass one
// explicitly via construct_identity_from to override.
Identity construct_identity(const WordClassSpec& spec, IdentityForm form,
                            ExtensionRule rule = ExtensionRule::SingleLetter);
Identity construct_identity_from(const Word& base, const WordClassSpec& spec,
                                 IdentityForm form,
                                 ExtensionRule rule = ExtensionRule::SingleLetter);

// Power word backing the identity for dim x dim triangular matrices (word
// length dim - 1; dim 2 uses the short 1-power word xy).
Word power_word_for_dim(int dim);
Identity identity_for_dim(int dim, IdentityForm form);

// Substitutes y1 y2 for the variables of c1 and y2 y1 for those of c2,
// producing a 2-variable identity with exponents within {1, 2}. The parts
// must be nonempty, disjoint, and cover the identity's content.
Identity refine_two_variable(const Identity& id, const std::vector<Variable>& c1,
                             const std::vector<Variable>& c2);

// Substitutes a b for the first variable and b a for the second, turning an
// unbalanced 2-variable identity into a balanced one over {a, b}.
Identity balance_substitute(const Identity& id);

std::ostream& operator<<(std::ostream& os, const Identity& id);

}  // namespace tropid
