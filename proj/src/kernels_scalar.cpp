// Scalar reference kernels. Every other variant must agree with these bit for bit.

#include "covset/kernels.hpp"

namespace covset::kernels {

std::uint64_t covered_mask_scalar(const CoverTable& table, std::uint64_t m) noexcept {
  const auto entries = table.entries();
  std::uint64_t covered = 0;
  for (const CoverTarget& t : table.targets()) {
    for (std::uint32_t e = t.begin; e < t.end; ++e) {
      if ((m & entries[e].coverer_bit) != 0 && (m & entries[e].blocker) == 0) {
        covered |= t.bit;
        break;
      }
    }
  }
  return covered;
}

bool is_covering_scalar(const CoverTable& table, std::uint64_t m) noexcept {
  const auto entries = table.entries();
  for (const CoverTarget& t : table.targets()) {
    bool hit = false;
    for (std::uint32_t e = t.begin; e < t.end; ++e) {
      if ((m & entries[e].coverer_bit) != 0 && (m & entries[e].blocker) == 0) {
        hit = true;
        break;
      }
    }
    // Members must stay uncovered, outsiders must be covered.
    if (hit == ((m & t.bit) != 0)) return false;
  }
  return true;
}

void classify_scalar(const CoverTable& table, std::span<const std::uint64_t> masks,
                     std::span<std::uint8_t> out) noexcept {
  for (std::size_t i = 0; i < masks.size(); ++i) out[i] = is_covering_scalar(table, masks[i]) ? 1 : 0;
}

std::uint64_t deposit_scalar(std::uint64_t pattern, std::uint64_t mask) noexcept {
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest != 0 && pattern != 0; rest &= rest - 1, pattern >>= 1) {
    if ((pattern & 1U) != 0) out |= rest & (~rest + 1);
  }
  return out;
}

}  // namespace covset::kernels
