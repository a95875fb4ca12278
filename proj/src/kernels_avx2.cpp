// AVX2 variants: four candidate sets per 256-bit register. Compiled with
// -mavx2 -mbmi2 and only reached after the runtime CPU check in kernels.cpp.

#include <immintrin.h>

#include "covset/kernels.hpp"

namespace covset::kernels {

namespace {

inline __m256i splat(std::uint64_t v) { return _mm256_set1_epi64x(static_cast<long long>(v)); }

// All-ones lanes where (m & bits) == 0.
inline __m256i none_of(__m256i m, __m256i bits, __m256i zero) {
  return _mm256_cmpeq_epi64(_mm256_and_si256(m, bits), zero);
}

inline int lane_mask(__m256i v) { return _mm256_movemask_pd(_mm256_castsi256_pd(v)); }

}  // namespace

void classify_avx2(const CoverTable& table, std::span<const std::uint64_t> masks,
                   std::span<std::uint8_t> out) noexcept {
  const auto entries = table.entries();
  const auto targets = table.targets();
  const __m256i zero = _mm256_setzero_si256();

  std::size_t i = 0;
  for (; i + 8 <= masks.size(); i += 8) {
    // Two independent groups of four to keep both ports busy.
    const __m256i m0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + i));
    const __m256i m1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + i + 4));
    __m256i dead0 = zero;
    __m256i dead1 = zero;
    for (const CoverTarget& t : targets) {
      __m256i hit0 = zero;
      __m256i hit1 = zero;
      for (std::uint32_t e = t.begin; e < t.end; ++e) {
        const __m256i coverer = splat(entries[e].coverer_bit);
        const __m256i blocker = splat(entries[e].blocker);
        hit0 = _mm256_or_si256(hit0, _mm256_andnot_si256(none_of(m0, coverer, zero), none_of(m0, blocker, zero)));
        hit1 = _mm256_or_si256(hit1, _mm256_andnot_si256(none_of(m1, coverer, zero), none_of(m1, blocker, zero)));
      }
      const __m256i bit = splat(t.bit);
      // A lane fails when "covered" equals "member", i.e. hit == !outside.
      dead0 = _mm256_or_si256(dead0, _mm256_xor_si256(hit0, none_of(m0, bit, zero)));
      dead1 = _mm256_or_si256(dead1, _mm256_xor_si256(hit1, none_of(m1, bit, zero)));
      if ((lane_mask(dead0) & lane_mask(dead1)) == 0xF) break;
    }
    const int alive0 = ~lane_mask(dead0) & 0xF;
    const int alive1 = ~lane_mask(dead1) & 0xF;
    for (int k = 0; k < 4; ++k) {
      out[i + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((alive0 >> k) & 1);
      out[i + 4 + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((alive1 >> k) & 1);
    }
  }
  for (; i < masks.size(); ++i) out[i] = is_covering_scalar(table, masks[i]) ? 1 : 0;
}

void deposit_bmi2(std::span<const std::uint64_t> patterns, std::uint64_t mask,
                  std::span<std::uint64_t> out) noexcept {
  for (std::size_t i = 0; i < patterns.size(); ++i) out[i] = _pdep_u64(patterns[i], mask);
}

}  // namespace covset::kernels
