#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace coxtwist {

/// Maximum number of generators a diagram may carry.
inline constexpr int kMaxRank = 64;

/// A subset of the generators of one diagram, stored as a bitmask over
/// generator indices. Which diagram it refers to is the caller's business.
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr GenSet single(int i) { return GenSet(std::uint64_t{1} << i); }
  static constexpr GenSet first(int n) {
    return GenSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(GenSet o) const { return (bits_ & o.bits_) != 0; }
  /// Index of the smallest member; -1 when empty.
  constexpr int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }

  constexpr GenSet& insert(int i) { bits_ |= std::uint64_t{1} << i; return *this; }
  constexpr GenSet& erase(int i) { bits_ &= ~(std::uint64_t{1} << i); return *this; }

  constexpr GenSet operator|(GenSet o) const { return GenSet(bits_ | o.bits_); }
  constexpr GenSet operator&(GenSet o) const { return GenSet(bits_ & o.bits_); }
  constexpr GenSet operator-(GenSet o) const { return GenSet(bits_ & ~o.bits_); }
  constexpr GenSet& operator|=(GenSet o) { bits_ |= o.bits_; return *this; }
  constexpr GenSet& operator&=(GenSet o) { bits_ &= o.bits_; return *this; }
  constexpr GenSet& operator-=(GenSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const GenSet&) const = default;

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Deterministic presentation order: compare sorted member lists
/// lexicographically (so {0,5} < {1}).
inline bool lex_less(GenSet a, GenSet b) {
  if (a == b) return false;
  std::uint64_t x = a.bits(), y = b.bits();
  while (x && y) {
    int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0;  // a is a proper prefix of b
}

struct GenSetLexLess {
  bool operator()(GenSet a, GenSet b) const { return lex_less(a, b); }
};

}  // namespace coxtwist

template <>
struct std::hash<coxtwist::GenSet> {
  std::size_t operator()(coxtwist::GenSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
