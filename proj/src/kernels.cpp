#include "covset/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "covset/error.hpp"

namespace covset::kernels {

CoverTable::CoverTable(const DominanceGraph& g, Direction dir) : dir_(dir) {
  const std::size_t n = g.size();
  targets_.reserve(n);
  entries_.reserve(g.edge_count());
  for (AltIndex x = 0; x < n; ++x) {
    CoverTarget target{std::uint64_t{1} << x, static_cast<std::uint32_t>(entries_.size()), 0};
    for (std::uint64_t rest = g.in_mask(x); rest != 0; rest &= rest - 1) {
      const auto y = static_cast<AltIndex>(std::countr_zero(rest));
      const std::uint64_t blocker = dir == Direction::Upward ? (g.in_mask(y) & ~g.in_mask(x))
                                                             : (g.out_mask(x) & ~g.out_mask(y));
      entries_.push_back({std::uint64_t{1} << y, blocker});
    }
    target.end = static_cast<std::uint32_t>(entries_.size());
    targets_.push_back(target);
  }
}

const char* to_string(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(COVSET_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi2");
#else
      return false;
#endif
  }
  return false;
}

namespace {

std::atomic<int> g_forced{-1};

Isa detect() noexcept {
  if (const char* env = std::getenv("COVSET_KERNEL"); env != nullptr) {
    const std::string v(env);
    if (v == "scalar") return Isa::Scalar;
    if (v == "avx2" && isa_supported(Isa::Avx2)) return Isa::Avx2;
  }
  return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

Isa active_isa() noexcept {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  static const Isa detected = detect();
  return detected;
}

void force_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw Error(ErrorKind::InvalidArgument, std::string("kernel variant not supported here: ") + to_string(isa));
  }
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() noexcept { g_forced.store(-1, std::memory_order_relaxed); }

DepositTable::DepositTable(std::uint64_t mask) : mask_(mask), table_(8 * 256, 0) {
  // Byte k of a pattern covers pattern bits [8k, 8k+8), which land on the
  // (8k)-th through (8k+7)-th set bits of the mask.
  std::uint64_t positions[64] = {};
  int count = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) positions[count++] = std::uint64_t{1} << std::countr_zero(rest);
  for (int k = 0; k < 8; ++k) {
    for (int b = 0; b < 256; ++b) {
      std::uint64_t v = 0;
      for (int bit = 0; bit < 8; ++bit) {
        const int p = 8 * k + bit;
        if (((b >> bit) & 1) != 0 && p < count) v |= positions[p];
      }
      table_[static_cast<std::size_t>(k * 256 + b)] = v;
    }
  }
}

std::uint64_t DepositTable::operator()(std::uint64_t pattern) const noexcept {
  std::uint64_t v = 0;
  for (int k = 0; k < 8 && pattern != 0; ++k, pattern >>= 8) {
    v |= table_[static_cast<std::size_t>(k * 256) + (pattern & 0xFF)];
  }
  return v;
}

void DepositTable::deposit(std::span<const std::uint64_t> patterns, std::span<std::uint64_t> out) const noexcept {
  for (std::size_t i = 0; i < patterns.size(); ++i) out[i] = (*this)(patterns[i]);
}

void classify(const CoverTable& table, std::span<const std::uint64_t> masks, std::span<std::uint8_t> out) {
  if (masks.size() != out.size()) throw Error(ErrorKind::Internal, "classify: span length mismatch");
#if defined(COVSET_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    classify_avx2(table, masks, out);
    return;
  }
#endif
  classify_scalar(table, masks, out);
}

void deposit(const DepositTable& table, std::uint64_t mask, std::span<const std::uint64_t> patterns,
             std::span<std::uint64_t> out) {
  if (patterns.size() != out.size()) throw Error(ErrorKind::Internal, "deposit: span length mismatch");
#if defined(COVSET_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    deposit_bmi2(patterns, mask, out);
    return;
  }
#endif
  (void)mask;
  table.deposit(patterns, out);
}

}  // namespace covset::kernels
