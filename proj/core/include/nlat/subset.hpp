#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nlat {

/// A set of variable indices in [0, 64), stored as one machine word.
/// Value type: copies never alias.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset of(std::initializer_list<int> indices) {
    Subset s;
    for (int i : indices) s.bits_ |= bit(i);
    return s;
  }

  /// {0, 1, ..., d-1}.
  static constexpr Subset full(int d) {
    return Subset(d >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }

  constexpr bool contains(int i) const { return (bits_ & bit(i)) != 0; }
  constexpr bool contains_all(Subset other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool is_subset_of(Subset other) const { return other.contains_all(*this); }
  constexpr bool disjoint_from(Subset other) const { return (bits_ & other.bits_) == 0; }

  constexpr Subset with(int i) const { return Subset(bits_ | bit(i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~bit(i)); }

  /// Smallest member, or -1 when empty.
  constexpr int min() const { return empty() ? -1 : std::countr_zero(bits_); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  /// Set difference a \ b.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;

  /// Iterates members in ascending order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i : *this) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : *this) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

 private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

  std::uint64_t bits_ = 0;
};

/// Successor of `t` in the ascending enumeration of subsets of `mask`
/// (0, ..., mask, then back to 0). Callers detect the wrap via t == mask.
constexpr Subset next_subset_of(Subset t, Subset mask) {
  return Subset((t.bits() - mask.bits()) & mask.bits());
}

}  // namespace nlat
