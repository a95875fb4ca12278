#include "covset/alternative_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "covset/budget.hpp"
#include "covset/error.hpp"

namespace covset {

const char* to_string(BudgetDimension dim) noexcept {
  switch (dim) {
    case BudgetDimension::Alternatives: return "alternatives";
    case BudgetDimension::Subsets: return "subsets";
    case BudgetDimension::WallTime: return "wall_time";
  }
  return "?";
}

AlternativeSet::AlternativeSet(std::size_t universe, std::uint64_t bits) : universe_(universe), bits_(bits) {
  if (universe > kMaxAlternatives) {
    throw Error(ErrorKind::InvalidArgument, "alternative set universe exceeds 64");
  }
  if ((bits & ~universe_mask(universe)) != 0) {
    throw Error(ErrorKind::InvalidArgument, "alternative set has members outside its universe");
  }
}

AlternativeSet AlternativeSet::full(std::size_t universe) { return AlternativeSet(universe, universe_mask(universe)); }

AlternativeSet AlternativeSet::of(std::size_t universe, const std::vector<std::size_t>& members) {
  std::uint64_t bits = 0;
  for (std::size_t m : members) {
    if (m >= universe) throw Error(ErrorKind::InvalidArgument, "alternative index out of range");
    bits |= std::uint64_t{1} << m;
  }
  return AlternativeSet(universe, bits);
}

AlternativeSet AlternativeSet::with(std::size_t alt) const {
  if (alt >= universe_) throw Error(ErrorKind::InvalidArgument, "alternative index out of range");
  return AlternativeSet(universe_, bits_ | (std::uint64_t{1} << alt));
}

AlternativeSet AlternativeSet::without(std::size_t alt) const {
  if (alt >= universe_) throw Error(ErrorKind::InvalidArgument, "alternative index out of range");
  return AlternativeSet(universe_, bits_ & ~(std::uint64_t{1} << alt));
}

std::vector<std::size_t> AlternativeSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

AlternativeSet operator|(const AlternativeSet& a, const AlternativeSet& b) {
  return AlternativeSet(std::max(a.universe_, b.universe_), a.bits_ | b.bits_);
}
AlternativeSet operator&(const AlternativeSet& a, const AlternativeSet& b) {
  return AlternativeSet(std::max(a.universe_, b.universe_), a.bits_ & b.bits_);
}
AlternativeSet operator-(const AlternativeSet& a, const AlternativeSet& b) {
  return AlternativeSet(a.universe_, a.bits_ & ~b.bits_);
}

bool canonical_less(std::uint64_t a, std::uint64_t b) noexcept {
  int ca = std::popcount(a);
  int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  // Equal size: the set holding the smallest element of the symmetric
  // difference comes first in lexicographic order of sorted member lists.
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

bool canonical_less(const AlternativeSet& a, const AlternativeSet& b) noexcept {
  return canonical_less(a.bits(), b.bits());
}

SolverBudget SolverBudget::from_environment() {
  SolverBudget b;
  if (const char* s = std::getenv("COVERS_BUDGET_SUBSETS"); s != nullptr && *s != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0) {
      throw Error(ErrorKind::InvalidArgument, std::string("COVERS_BUDGET_SUBSETS is not a positive integer: ") + s);
    }
    b.max_subsets = v;
  }
  if (const char* s = std::getenv("COVERS_BUDGET_SECONDS"); s != nullptr && *s != '\0') {
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || !(v > 0)) {
      throw Error(ErrorKind::InvalidArgument, std::string("COVERS_BUDGET_SECONDS is not a positive number: ") + s);
    }
    b.max_time = std::chrono::milliseconds(static_cast<long long>(v * 1000.0));
  }
  return b;
}

void SolverBudget::validate() const {
  if (max_subsets == 0) throw Error(ErrorKind::InvalidArgument, "budget: max_subsets must be positive");
  if (max_time.count() <= 0) throw Error(ErrorKind::InvalidArgument, "budget: max_time must be positive");
  if (max_free_alternatives == 0) {
    throw Error(ErrorKind::InvalidArgument, "budget: max_free_alternatives must be positive");
  }
}

}  // namespace covset
