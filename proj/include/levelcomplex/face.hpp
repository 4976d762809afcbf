#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace levelcomplex {

/// A set of vertex indices (bit positions into a complex's vertex list).
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

  static constexpr Face singleton(int v) { return Face(std::uint64_t{1} << v); }
  static Face of(const std::vector<int>& vertices) {
    std::uint64_t b = 0;
    for (int v : vertices) b |= std::uint64_t{1} << v;
    return Face(b);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

  constexpr Face with(int v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
  constexpr Face without(int v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }
  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }

  template <class Fn>
  void for_each_vertex(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  std::vector<int> vertices() const {
    std::vector<int> out;
    for_each_vertex([&](int v) { out.push_back(v); });
    return out;
  }

  friend constexpr auto operator<=>(const Face&, const Face&) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace levelcomplex
