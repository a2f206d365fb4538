#pragma once

#include <map>
#include <optional>

#include "tropid/identity.hpp"
#include "tropid/sampler.hpp"

namespace tropid {

// Morphism into the matrix monoid: every image has the same dimension.
using Assignment = std::map<Variable, TropMatrix>;

// Left-to-right tropical product of the word's letter images.
TropMatrix evaluate(const Word& w, const Assignment& a);

// Same value computed through the colored-digraph path oracle instead of the
// matrix product; used to re-validate counterexamples.
TropMatrix evaluate_via_oracle(const Word& w, const Assignment& a);

// Exact equality of both sides under a.
bool check(const Identity& id, const Assignment& a);

struct Verdict {
  long trials = 0;
  std::optional<Assignment> counterexample;
  long trial = -1;

  bool passed() const { return !counterexample.has_value(); }
};

enum class FuzzMode {
  Independent,  // one fresh sample per variable
  DiagPair,     // sample X, then Y with its diagonal overwritten by X's
  ProductPair,  // sample A, B and bind the variables to AB and BA
};

// Runs seeded trials and returns the first counterexample (re-validated via
// the oracle) or a pass. DiagPair/ProductPair need a 2-variable identity.
Verdict fuzz(const Identity& id, MatrixClass cls, int dim, long trials,
             const SamplerConfig& cfg, FuzzMode mode);

inline std::vector<TropValue> small_entry_values() {
  return {TropValue::bottom(), TropValue::integer(-1), TropValue::integer(0),
          TropValue::integer(1)};
}

// Enumerates every assignment of upper-triangular dim x dim matrices with
// entries drawn from the given set and returns the first falsifying one.
std::optional<Assignment> exhaustive_small_counterexample(
    const Identity& id, int dim = 2,
    const std::vector<TropValue>& values = small_entry_values());

}  // namespace tropid
