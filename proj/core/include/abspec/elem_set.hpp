#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace abspec {

/// Dense bit-indexed subset of a finite carrier (or point set). Capacity 64.
struct ElemSet {
  std::uint64_t bits = 0;

  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t b) : bits(b) {}

  static constexpr ElemSet empty() { return ElemSet{}; }
  static constexpr ElemSet single(int i) { return ElemSet{std::uint64_t{1} << i}; }
  static constexpr ElemSet full(int n) {
    return ElemSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr bool contains(int i) const { return (bits >> i) & 1; }
  constexpr bool is_empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }

  constexpr void add(int i) { bits |= std::uint64_t{1} << i; }
  constexpr void remove(int i) { bits &= ~(std::uint64_t{1} << i); }
  constexpr ElemSet with(int i) const { return ElemSet{bits | (std::uint64_t{1} << i)}; }

  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits); }

  constexpr bool subset_of(ElemSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(ElemSet o) const { return (bits & o.bits) != 0; }

  constexpr ElemSet operator|(ElemSet o) const { return ElemSet{bits | o.bits}; }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet{bits & o.bits}; }
  constexpr ElemSet minus(ElemSet o) const { return ElemSet{bits & ~o.bits}; }
  constexpr ElemSet complement(int n) const { return ElemSet{~bits & full(n).bits}; }

  constexpr ElemSet& operator|=(ElemSet o) { bits |= o.bits; return *this; }
  constexpr ElemSet& operator&=(ElemSet o) { bits &= o.bits; return *this; }

  friend constexpr bool operator==(ElemSet a, ElemSet b) { return a.bits == b.bits; }
  friend constexpr bool operator<(ElemSet a, ElemSet b) { return a.bits < b.bits; }

  /// Members in ascending index order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
};

/// Loop helper: invokes f(i) for each member, ascending.
template <class F>
inline void for_each(ElemSet s, F&& f) {
  for (std::uint64_t m = s.bits; m; m &= m - 1) f(std::countr_zero(m));
}

}  // namespace abspec
