#include "tropid/search.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace tropid {

namespace {

// Exact search state: the last max(n-1, 2) letters (enough memory for factor
// detection and for the run cap) plus the covered-member bitset. Windows are
// bit-stuffed with a leading marker so length is part of the code.
class ExactSearch {
 public:
  explicit ExactSearch(const WordClassSpec& spec) : spec_(spec) {
    members_ = enumerate_class(spec);
    window_len_ = std::max(spec.length - 1, spec.max_exp);
    member_of_code_.assign(1u << spec.length, -1);
    for (std::size_t m = 0; m < members_.size(); ++m) {
      std::uint32_t code = 0;
      for (Variable v : members_[m].letters()) code = (code << 1) | bit_of(v);
      member_of_code_[code] = static_cast<int>(m);
    }
  }

  Word run() {
    const std::uint32_t full = (1u << members_.size()) - 1;
    std::vector<Node> arena;
    std::unordered_set<std::uint64_t> seen;
    arena.push_back(Node{1u, 0u, -1, 0});  // empty window, nothing covered
    for (std::size_t head = 0; head < arena.size(); ++head) {
      const Node cur = arena[head];
      const int len = window_length(cur.window);
      const std::uint32_t bits = cur.window & ((1u << len) - 1);
      for (std::uint32_t c = 0; c < 2; ++c) {
        if (run_would_overflow(bits, len, c)) continue;
        const std::uint32_t ext = (bits << 1) | c;  // last len+1 letters
        std::uint32_t covered = cur.covered;
        if (len + 1 >= spec_.length) {
          const int idx = member_of_code_[ext & ((1u << spec_.length) - 1)];
          if (idx >= 0) covered |= 1u << idx;
        }
        const int new_len = std::min(len + 1, window_len_);
        const std::uint32_t window = (1u << new_len) | (ext & ((1u << new_len) - 1));
        Node next{window, covered, static_cast<std::int32_t>(head),
                  static_cast<std::uint8_t>(c)};
        if (covered == full) {
          arena.push_back(next);
          return reconstruct(arena, arena.size() - 1);
        }
        const std::uint64_t key = (static_cast<std::uint64_t>(window) << 32) | covered;
        if (seen.insert(key).second) arena.push_back(next);
      }
    }
    throw std::logic_error("minimal_power_word: search exhausted without cover");
  }

 private:
  struct Node {
    std::uint32_t window;
    std::uint32_t covered;
    std::int32_t parent;
    std::uint8_t letter;
  };

  std::uint32_t bit_of(Variable v) const {
    return v == spec_.alphabet[0] ? 0u : 1u;
  }

  static int window_length(std::uint32_t window) {
    int len = -1;
    while (window) {
      window >>= 1;
      ++len;
    }
    return len;
  }

  bool run_would_overflow(std::uint32_t bits, int len, std::uint32_t c) const {
    if (len < spec_.max_exp) return false;
    for (int k = 0; k < spec_.max_exp; ++k)
      if (((bits >> k) & 1u) != c) return false;
    return true;
  }

  Word reconstruct(const std::vector<Node>& arena, std::size_t at) const {
    std::vector<Variable> letters;
    for (std::int64_t i = static_cast<std::int64_t>(at); arena[i].parent >= 0;
         i = arena[i].parent)
      letters.push_back(spec_.alphabet[arena[i].letter]);
    std::reverse(letters.begin(), letters.end());
    return Word::from_letters(letters);
  }

  const WordClassSpec& spec_;
  std::vector<Word> members_;
  std::vector<int> member_of_code_;
  int window_len_;
};

std::vector<bool> covered_members(const Word& w, const std::vector<Word>& members) {
  std::vector<bool> covered(members.size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) covered[i] = is_factor(members[i], w);
  return covered;
}

bool runs_within(const Word& w, int max_exp) {
  for (const Run& r : w.runs())
    if (r.exp > max_exp) return false;
  return true;
}

Word greedy_power_word(const WordClassSpec& spec) {
  const std::vector<Word> members = enumerate_class(spec);
  Word w = members.front();
  std::vector<bool> covered = covered_members(w, members);
  for (;;) {
    const auto letters_w = w.letters();
    int best_overlap = -1;
    Word best_word;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (covered[i]) continue;
      const auto letters_u = members[i].letters();
      const int max_o = static_cast<int>(
          std::min(letters_w.size(), letters_u.size() - 1));
      for (int o = max_o; o > best_overlap; --o) {
        if (!std::equal(letters_w.end() - o, letters_w.end(), letters_u.begin()))
          continue;
        std::vector<Variable> tail(letters_u.begin() + o, letters_u.end());
        Word candidate = concat(w, Word::from_letters(tail));
        if (!runs_within(candidate, spec.max_exp)) continue;
        best_overlap = o;
        best_word = std::move(candidate);
        break;
      }
    }
    if (best_overlap < 0) {
      // no overlap placement is run-safe; break the boundary run explicitly
      std::size_t i = 0;
      while (covered[i]) ++i;
      Variable boundary = w.runs().back().var;
      Variable sep = spec.alphabet.front() != boundary ? spec.alphabet.front()
                                                       : spec.alphabet[1];
      best_word = concat(w, concat(Word::letter(sep), members[i]));
    }
    w = std::move(best_word);
    covered = covered_members(w, members);
    if (std::find(covered.begin(), covered.end(), false) == covered.end()) return w;
  }
}

}  // namespace

Word minimal_power_word(const WordClassSpec& spec, SearchMode mode) {
  if (spec.alphabet.size() != 2)
    throw std::invalid_argument("minimal_power_word: only 2-letter alphabets are supported");
  if (mode == SearchMode::Greedy) return greedy_power_word(spec);
  if (spec.max_exp != 2 || spec.length > 5)
    throw std::invalid_argument(
        "minimal_power_word: exact mode needs P = {1,2} and n <= 5; "
        "rerun with greedy mode for larger instances");
  return ExactSearch(spec).run();
}

bool verify_minimality_witness(const Word& w, const WordClassSpec& spec) {
  if (!is_power_word(w, spec)) return false;
  return w.length() == minimal_power_word(spec).length();
}

long FalsifyReport::falsified_count() const {
  long n = 0;
  for (const auto& c : candidates) n += c.falsified ? 1 : 0;
  return n;
}

long FalsifyReport::unresolved_count() const {
  return static_cast<long>(candidates.size()) - falsified_count();
}

namespace {

Word swap_xy(const Word& w) {
  static const std::map<Variable, Word> images{
      {Variable('x'), Word::parse("y")}, {Variable('y'), Word::parse("x")}};
  return substitute(w, images);
}

// Candidate pairs are deduped under swapping the sides and swapping x <-> y.
bool pair_is_canonical(const Word& u, const Word& v) {
  const Word su = swap_xy(u);
  const Word sv = swap_xy(v);
  const Word& lo = su < sv ? su : sv;
  const Word& hi = su < sv ? sv : su;
  if (lo < u) return false;
  if (u < lo) return true;
  return !(hi < v);
}

}  // namespace

FalsifyReport falsify_below(int length_bound, int dim, long trials_per_candidate,
                            const SamplerConfig& cfg) {
  if (dim != 2)
    throw std::invalid_argument("falsify_below: only dimension 2 is supported");
  if (length_bound < 2 || length_bound > 9)
    throw std::invalid_argument("falsify_below: length bound must be within [2, 9]");

  const Variable x('x'), y('y');
  FalsifyReport report;
  report.length_bound = length_bound;
  report.trials_per_candidate = trials_per_candidate;

  // Balanced candidates group by (length, occurrences of x); both variables
  // must appear or the pair is not a 2-variable identity.
  std::map<std::pair<int, int>, std::vector<Word>> groups;
  for (int len = 2; len <= length_bound; ++len) {
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      std::vector<Variable> letters;
      int ky = 0;
      for (int p = len - 1; p >= 0; --p) {
        const bool is_y = (mask >> p) & 1u;
        ky += is_y ? 1 : 0;
        letters.push_back(is_y ? y : x);
      }
      const int kx = len - ky;
      if (kx == 0 || ky == 0) continue;
      groups[{len, kx}].push_back(Word::from_letters(letters));
    }
  }

  for (const auto& [sig, words] : groups) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        if (!pair_is_canonical(words[i], words[j])) continue;
        Identity id(words[i], words[j]);
        std::optional<Assignment> witness = exhaustive_small_counterexample(id, dim);
        long trial = -1;
        if (!witness && trials_per_candidate > 0) {
          Verdict verdict = fuzz(id, MatrixClass::UpperTriangular, dim,
                                 trials_per_candidate, cfg, FuzzMode::Independent);
          if (!verdict.passed()) {
            witness = verdict.counterexample;
            trial = verdict.trial;
          }
        }
        if (witness && check(id, *witness))
          throw std::logic_error("falsify_below: witness does not re-falsify");
        report.candidates.push_back(
            FalsifyCandidate{std::move(id), witness.has_value(), std::move(witness), trial});
      }
    }
  }
  return report;
}

}  // namespace tropid
