#pragma once

#include "tropid/evaluate.hpp"
#include "tropid/word_classes.hpp"

namespace tropid {

enum class SearchMode { Exact, Greedy };

// Shortest word containing every member of W_n[C, P] as a factor while
// keeping run exponents within P; ties break to the lexicographically
// smallest word. Exact mode runs a breadth-first search over
// (suffix window, covered set) states and needs |C| = 2, P = {1,2}, n <= 5;
// pass Greedy beyond that for a max-overlap superstring instead.
Word minimal_power_word(const WordClassSpec& spec, SearchMode mode = SearchMode::Exact);

// w is a power word of the spec and no power word is shorter.
bool verify_minimality_witness(const Word& w, const WordClassSpec& spec);

struct FalsifyCandidate {
  Identity identity;
  bool falsified;
  std::optional<Assignment> witness;
  long trial;  // -1 when the exhaustive sweep found the witness
};

struct FalsifyReport {
  int length_bound = 0;
  long trials_per_candidate = 0;
  std::vector<FalsifyCandidate> candidates;

  long falsified_count() const;
  long unresolved_count() const;
};

// Enumerates every nontrivial balanced 2-variable identity candidate with
// side length <= length_bound (up to swapping sides and swapping x with y)
// and attacks each with the exhaustive small-entry sweep followed by seeded
// random trials. Survivors are reported as unresolved, never as verified.
FalsifyReport falsify_below(int length_bound, int dim, long trials_per_candidate,
                            const SamplerConfig& cfg);

}  // namespace tropid
