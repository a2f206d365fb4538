#include "tropid/identity.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tropid {

Identity::Identity(Word lhs, Word rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  if (lhs_ == rhs_) throw std::invalid_argument("identity: sides must differ");
  if (lhs_.empty() || rhs_.empty())
    throw std::invalid_argument("identity: sides must be nonempty words");
}

long Identity::length() const { return std::max(lhs_.length(), rhs_.length()); }

std::vector<Variable> Identity::content() const {
  std::vector<Variable> vars = lhs_.content();
  for (Variable v : rhs_.content()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::set<long> Identity::exponent_set() const {
  std::set<long> exps = tropid::exponent_set(lhs_);
  exps.merge(tropid::exponent_set(rhs_));
  return exps;
}

std::string Identity::str() const { return lhs_.str() + " = " + rhs_.str(); }

bool is_balanced(const Identity& id) {
  for (Variable v : id.content())
    if (kappa(id.lhs(), v) != kappa(id.rhs(), v)) return false;
  return true;
}

bool is_uniformly_balanced(const Identity& id) {
  if (!is_balanced(id)) return false;
  const auto vars = id.lhs().content();
  if (vars.empty()) return false;
  const long k = kappa(id.lhs(), vars.front());
  return is_k_uniform(id.lhs(), k) && is_k_uniform(id.rhs(), k);
}

namespace {

Variable separator_for(const WordClassSpec& spec, Variable boundary) {
  for (Variable v : spec.alphabet)
    if (v != boundary) return v;
  throw std::logic_error("separator_for: single-letter alphabet");
}

// x_1^{t_min} ... x_m^{t_min} in alphabet order (t_min = 1 for down-closed P).
Word min_block(const WordClassSpec& spec, bool reversed) {
  std::vector<Run> runs;
  for (Variable v : spec.alphabet) runs.push_back(Run{v, 1});
  if (reversed) std::reverse(runs.begin(), runs.end());
  return Word(std::move(runs));
}

}  // namespace

Word construct_power_word(const WordClassSpec& spec) {
  if (spec.alphabet.size() < 2)
    throw std::invalid_argument("construct_power_word: need at least two variables");
  const std::vector<Word> members = enumerate_class(spec);
  Word w = members.front();
  for (std::size_t i = 1; i < members.size(); ++i) {
    const Word& next = members[i];
    const Variable last = w.runs().back().var;
    const Variable first = next.runs().front().var;
    if (last == first && suf_run(w, last) + pre_run(next, first) > spec.max_exp)
      w = concat(w, Word::letter(separator_for(spec, last)));
    w = concat(w, next);
  }
  return w;
}

Word extend_for_identity(const Word& w, const WordClassSpec& spec, ExtensionRule rule) {
  if (!is_power_word(w, spec))
    throw std::invalid_argument("extend_for_identity: not a power word for the spec");
  const Variable x1 = spec.alphabet.front();
  const Variable xm = spec.alphabet.back();
  const long d = spec.max_exp - 1;  // t_max - t_min

  auto guard = [&](Variable plain, bool reversed_block) {
    return rule == ExtensionRule::SingleLetter ? Word::letter(plain)
                                               : min_block(spec, reversed_block);
  };

  Word w1, w2;
  if (pre_run(w, x1) > d)
    w1 = guard(xm, false);
  else if (pre_run(w, xm) > d)
    w1 = guard(x1, true);
  if (suf_run(w, x1) > d)
    w2 = guard(xm, true);
  else if (suf_run(w, xm) > d)
    w2 = guard(x1, false);
  return concat(w1, concat(w, w2));
}

Identity construct_identity_from(const Word& base, const WordClassSpec& spec,
                                 IdentityForm form, ExtensionRule rule) {
  Word extended = extend_for_identity(base, spec, rule);
  if (form == IdentityForm::General) {
    if (spec.alphabet.size() < 2 || spec.max_exp < 2)
      throw std::invalid_argument("construct_identity: general form needs |C| > 1 and |P| > 1");
    // standing assumption t_max >= 2 t_min; with P = {1..m} this is m >= 2
    const Word z1 = min_block(spec, false);
    const Word z2 = min_block(spec, true);
    return Identity(concat(extended, concat(z1, extended)),
                    concat(extended, concat(z2, extended)));
  }
  if (spec.alphabet.size() != 2 || spec.max_exp != 2)
    throw std::invalid_argument("construct_identity: single-letter form needs C = {x,y}, P = {1,2}");
  // The inserted letter sits between a copy's suffix run and the next copy's
  // prefix run; when the extended word starts and ends with the same letter
  // those three runs would merge past max(P), so append one more guard.
  if (extended.runs().front().var == extended.runs().back().var)
    extended = concat(extended, Word::letter(separator_for(spec, extended.runs().back().var)));
  const Word lhs = concat(extended, concat(Word::letter(spec.alphabet[0]), extended));
  const Word rhs = concat(extended, concat(Word::letter(spec.alphabet[1]), extended));
  return Identity(lhs, rhs);
}

namespace {

// The printed minimal witnesses for the {x,y}, P = {1,2} classes of length 2
// and 3; other specs fall back to the generic concatenation.
Word canonical_power_word(const WordClassSpec& spec) {
  const WordClassSpec xy2 = WordClassSpec::xy(2);
  if (spec.alphabet == xy2.alphabet && spec.max_exp == 2) {
    if (spec.length == 2) return Word::parse("x^2y^2x");
    if (spec.length == 3) return Word::parse("xyxy^2x^2y");
  }
  return construct_power_word(spec);
}

}  // namespace

Identity construct_identity(const WordClassSpec& spec, IdentityForm form,
                            ExtensionRule rule) {
  return construct_identity_from(canonical_power_word(spec), spec, form, rule);
}

Word power_word_for_dim(int dim) {
  if (dim < 2) throw std::invalid_argument("power_word_for_dim: dim must be >= 2");
  if (dim == 2) return Word::parse("xy");  // covers W_1 = {x, y}
  return canonical_power_word(WordClassSpec::xy(dim - 1));
}

Identity identity_for_dim(int dim, IdentityForm form) {
  if (dim < 2) throw std::invalid_argument("identity_for_dim: dim must be >= 2");
  if (dim == 2) {
    // Word length 1 sits below the class machinery (which needs n >= max(P));
    // the 1-power word xy needs no extension since all its runs are 1.
    const Word w = Word::parse("xy");
    if (form == IdentityForm::General)
      return Identity(concat(w, concat(Word::parse("xy"), w)),
                      concat(w, concat(Word::parse("yx"), w)));
    return Identity(concat(w, concat(Word::parse("x"), w)),
                    concat(w, concat(Word::parse("y"), w)));
  }
  return construct_identity(WordClassSpec::xy(dim - 1), form);
}

Identity refine_two_variable(const Identity& id, const std::vector<Variable>& c1,
                             const std::vector<Variable>& c2) {
  if (c1.empty() || c2.empty())
    throw std::invalid_argument("refine: both parts must be nonempty");
  const std::vector<Variable> vars = id.content();
  if (vars.size() < 2)
    throw std::invalid_argument("refine: identity must have at least two variables");
  std::vector<Variable> merged = c1;
  merged.insert(merged.end(), c2.begin(), c2.end());
  std::sort(merged.begin(), merged.end());
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
    throw std::invalid_argument("refine: parts must be disjoint");
  if (merged != vars)
    throw std::invalid_argument("refine: parts must cover the identity's content");

  const Word fwd = Word::parse("y1y2");
  const Word rev = Word::parse("y2y1");
  std::map<Variable, Word> images;
  for (Variable v : c1) images.emplace(v, fwd);
  for (Variable v : c2) images.emplace(v, rev);
  return Identity(substitute(id.lhs(), images), substitute(id.rhs(), images));
}

Identity balance_substitute(const Identity& id) {
  const std::vector<Variable> vars = id.content();
  if (vars.size() != 2)
    throw std::invalid_argument("balance_substitute: identity must have exactly two variables");
  const Word ab = Word::parse("ab");
  const Word ba = Word::parse("ba");
  std::map<Variable, Word> images{{vars[0], ab}, {vars[1], ba}};
  return Identity(substitute(id.lhs(), images), substitute(id.rhs(), images));
}

std::ostream& operator<<(std::ostream& os, const Identity& id) { return os << id.str(); }

}  // namespace tropid
