#include "tropid/sampler.hpp"

#include <stdexcept>

namespace tropid {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below: zero bound");
  const std::uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = next();
    if (r >= rem) return r % bound;
  }
}

long SplitMix64::int_in(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("int_in: empty range");
  const std::uint64_t width =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<long>(static_cast<std::uint64_t>(lo) + below(width));
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 mix(seed ^ (0xA0761D6478BD642FULL * (trial + 1)));
  mix.next();
  return mix.next();
}

void SamplerConfig::validate() const {
  if (entry_lo > entry_hi)
    throw std::invalid_argument("sampler: entry_lo > entry_hi");
  if (bottom_prob < 0 || bottom_prob > 1)
    throw std::invalid_argument("sampler: bottom_prob outside [0, 1]");
  if (!bottom_prob.get_den().fits_ulong_p())
    throw std::invalid_argument("sampler: bottom_prob denominator too large");
}

TropMatrix sample_matrix(MatrixClass cls, int n, const SamplerConfig& cfg,
                         std::uint64_t trial) {
  cfg.validate();
  if (n < 1) throw std::invalid_argument("sample_matrix: dimension must be positive");
  SplitMix64 rng(derive_stream(cfg.seed, trial));
  const std::uint64_t num = mpz_get_ui(mpq_numref(cfg.bottom_prob.get_mpq_t()));
  const std::uint64_t den = mpz_get_ui(mpq_denref(cfg.bottom_prob.get_mpq_t()));
  TropMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool supported = cls == MatrixClass::Full ||
                             (cls == MatrixClass::UpperTriangular && i <= j) ||
                             (cls == MatrixClass::LowerTriangular && i >= j);
      if (!supported) continue;
      if (rng.below(den) < num) continue;  // bottom with probability num/den
      m.at(i, j) = TropValue::integer(rng.int_in(cfg.entry_lo, cfg.entry_hi));
    }
  return m;
}

}  // namespace tropid
