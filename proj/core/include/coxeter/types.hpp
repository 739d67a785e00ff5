#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace coxeter {

/// Index of a Coxeter generator, in [0, rank).
using Generator = std::uint8_t;

/// Generator sets are stored as 64-bit masks, which bounds the rank.
inline constexpr std::size_t kMaxRank = 64;

/// A finite sequence of generator indices. Not necessarily reduced.
using Word = std::vector<Generator>;

/// ShortLex order on words: shorter first, then lexicographic by index.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// A subset T of the generating set S. Iterates members in increasing order.
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint64_t mask) : mask_(mask) {}
  GenSet(std::initializer_list<Generator> members) {
    for (Generator g : members) insert(g);
  }

  static constexpr GenSet full(std::size_t rank) {
    return GenSet(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }
  template <class Range>
  static GenSet of(const Range& members) {
    GenSet s;
    for (auto g : members) s.insert(static_cast<Generator>(g));
    return s;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool contains(Generator g) const { return (mask_ >> g) & 1U; }
  constexpr void insert(Generator g) { mask_ |= std::uint64_t{1} << g; }
  constexpr void erase(Generator g) { mask_ &= ~(std::uint64_t{1} << g); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool subset_of(GenSet other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr GenSet with(Generator g) const {
    GenSet s = *this;
    s.insert(g);
    return s;
  }

  std::vector<Generator> members() const {
    std::vector<Generator> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
      out.push_back(static_cast<Generator>(std::countr_zero(m)));
    return out;
  }

  friend constexpr bool operator==(GenSet, GenSet) = default;
  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.mask_ | b.mask_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.mask_ & b.mask_); }

  /// Orders by size, then by sorted member list (stable output ordering).
  friend bool operator<(GenSet a, GenSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  }

 private:
  std::uint64_t mask_ = 0;
};

/// A group element, identified by its ShortLex-least reduced expression.
/// Instances are only produced by CoxeterSystem (or the enumeration oracle),
/// so equality of canonical words is equality of group elements.
struct Element {
  Word canonical;

  std::size_t length() const { return canonical.size(); }
  bool is_identity() const { return canonical.empty(); }

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& a, const Element& b) {
    return shortlex_less(a.canonical, b.canonical);
  }
};

}  // namespace coxeter

template <>
struct std::hash<coxeter::Element> {
  std::size_t operator()(const coxeter::Element& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto g : e.canonical) h = (h ^ g) * 1099511628211ULL;
    return h;
  }
};
