#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "covset/covering.hpp"
#include "covset/dominance_graph.hpp"

namespace covset::kernels {

// Covering-set predicate in bit-parallel form.
//
// For every ordered edge y ≻ x the table stores the bit of the coverer y and a
// blocker mask: the alternatives whose presence stops y from covering x
// (upward: dominators of y that do not dominate x; downward: alternatives x
// dominates that y does not). Then, for any candidate M,
//
//   x is covered in M ∪ {x}  <=>  some entry (y, blocker) of x has y ∈ M and blocker ∩ M = ∅,
//
// and M is a covering set exactly when the covered alternatives are the
// complement of M. Both directions of the stability test collapse into that
// single comparison, which is what the kernels evaluate.

struct CoverEntry {
  std::uint64_t coverer_bit;
  std::uint64_t blocker;
};

struct CoverTarget {
  std::uint64_t bit;
  std::uint32_t begin;  // range into CoverTable::entries()
  std::uint32_t end;
};

class CoverTable {
 public:
  CoverTable(const DominanceGraph& g, Direction dir);

  std::size_t alternatives() const noexcept { return targets_.size(); }
  Direction direction() const noexcept { return dir_; }
  std::span<const CoverTarget> targets() const noexcept { return targets_; }
  std::span<const CoverEntry> entries() const noexcept { return entries_; }

 private:
  Direction dir_;
  std::vector<CoverTarget> targets_;
  std::vector<CoverEntry> entries_;
};

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa) noexcept;
/// Whether this build and this CPU can run `isa`.
bool isa_supported(Isa isa) noexcept;
/// Kernel variant in use: the best supported one unless COVSET_KERNEL=scalar|avx2
/// or force_isa() says otherwise.
Isa active_isa() noexcept;
/// Pins the kernel variant (tests use this to compare variants). Throws
/// InvalidArgument if `isa` is unsupported.
void force_isa(Isa isa);
void reset_isa() noexcept;

// ---- scalar reference kernels ---------------------------------------------

std::uint64_t covered_mask_scalar(const CoverTable& table, std::uint64_t m) noexcept;
bool is_covering_scalar(const CoverTable& table, std::uint64_t m) noexcept;
void classify_scalar(const CoverTable& table, std::span<const std::uint64_t> masks,
                     std::span<std::uint8_t> out) noexcept;

/// Portable parallel bit deposit: scatters the low bits of `pattern` onto the
/// set bits of `mask`, lowest first.
std::uint64_t deposit_scalar(std::uint64_t pattern, std::uint64_t mask) noexcept;

/// Byte-table deposit for a fixed mask; eight lookups per call.
class DepositTable {
 public:
  explicit DepositTable(std::uint64_t mask);
  std::uint64_t operator()(std::uint64_t pattern) const noexcept;
  void deposit(std::span<const std::uint64_t> patterns, std::span<std::uint64_t> out) const noexcept;

 private:
  std::uint64_t mask_;
  std::vector<std::uint64_t> table_;  // 8 * 256 entries
};

// ---- AVX2 variants (defined only when built with COVSET_HAVE_AVX2) ---------

void classify_avx2(const CoverTable& table, std::span<const std::uint64_t> masks,
                   std::span<std::uint8_t> out) noexcept;
void deposit_bmi2(std::span<const std::uint64_t> patterns, std::uint64_t mask,
                  std::span<std::uint64_t> out) noexcept;

// ---- dispatching entry points ----------------------------------------------

/// out[i] = 1 iff masks[i] is a covering set. Spans must have equal length.
void classify(const CoverTable& table, std::span<const std::uint64_t> masks, std::span<std::uint8_t> out);

/// Bulk deposit of `patterns` onto `mask` using the active variant.
void deposit(const DepositTable& table, std::uint64_t mask, std::span<const std::uint64_t> patterns,
             std::span<std::uint64_t> out);

}  // namespace covset::kernels
