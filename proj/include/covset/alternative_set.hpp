#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace covset {

/// Hard upper bound on alternatives per graph: sets are single 64-bit words.
inline constexpr std::size_t kMaxAlternatives = 64;

/// A subset of a graph's alternatives, stored as a bitset indexed by the
/// graph's alternative order. The universe size travels with the set so that
/// operations can reject sets that belong to a differently sized graph.
class AlternativeSet {
 public:
  AlternativeSet() = default;
  AlternativeSet(std::size_t universe, std::uint64_t bits);

  static AlternativeSet empty(std::size_t universe) { return AlternativeSet(universe, 0); }
  static AlternativeSet full(std::size_t universe);
  static AlternativeSet of(std::size_t universe, const std::vector<std::size_t>& members);

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(std::size_t alt) const noexcept { return alt < 64 && ((bits_ >> alt) & 1U) != 0; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_empty() const noexcept { return bits_ == 0; }

  AlternativeSet with(std::size_t alt) const;
  AlternativeSet without(std::size_t alt) const;

  bool is_subset_of(const AlternativeSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  bool is_proper_subset_of(const AlternativeSet& other) const noexcept {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  /// Member indices in ascending (alternative) order.
  std::vector<std::size_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      f(static_cast<std::size_t>(std::countr_zero(rest)));
    }
  }

  friend AlternativeSet operator|(const AlternativeSet& a, const AlternativeSet& b);
  friend AlternativeSet operator&(const AlternativeSet& a, const AlternativeSet& b);
  friend AlternativeSet operator-(const AlternativeSet& a, const AlternativeSet& b);
  friend bool operator==(const AlternativeSet& a, const AlternativeSet& b) = default;

 private:
  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

/// Mask with the low `universe` bits set.
constexpr std::uint64_t universe_mask(std::size_t universe) noexcept {
  return universe >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);
}

/// Canonical order on sets: ascending cardinality, then lexicographic on the
/// sorted member lists.
bool canonical_less(std::uint64_t a, std::uint64_t b) noexcept;
bool canonical_less(const AlternativeSet& a, const AlternativeSet& b) noexcept;

}  // namespace covset
