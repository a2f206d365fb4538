#pragma once

#include <cstdint>

#include "tropid/matrix.hpp"

namespace tropid {

// Small self-contained PRNG so sampled streams are identical on every
// platform (the standard distributions are implementation-defined).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound), bound >= 1, via rejection.
  std::uint64_t below(std::uint64_t bound);
  long int_in(long lo, long hi);

 private:
  std::uint64_t state_;
};

// Per-trial stream derivation: identical (seed, trial) always yields the
// identical stream, so parallel and serial runs agree.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t trial);

struct SamplerConfig {
  long entry_lo = -10;
  long entry_hi = 10;
  mpq_class bottom_prob = mpq_class(1, 4);  // in [0, 1]
  std::uint64_t seed = 0;

  void validate() const;
};

// Entries outside the class's support are bottom; each supported entry
// (diagonal included) is independently bottom with probability bottom_prob,
// otherwise a uniform integer in [entry_lo, entry_hi]. Deterministic in
// (cfg.seed, trial).
TropMatrix sample_matrix(MatrixClass cls, int n, const SamplerConfig& cfg,
                         std::uint64_t trial);

}  // namespace tropid
