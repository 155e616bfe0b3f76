#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace twoval {

inline constexpr std::size_t kMaxVoters = 16;

// A finite set of voters, stored as a bitmask over voter ids.
class VoterSet {
public:
  constexpr VoterSet() = default;
  constexpr explicit VoterSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VoterSet all(std::size_t n) {
    return VoterSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr VoterSet single(std::size_t v) { return VoterSet(1u << v); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1u; }
  constexpr bool subset_of(VoterSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr void insert(std::size_t v) { bits_ |= 1u << v; }
  constexpr void erase(std::size_t v) { bits_ &= ~(1u << v); }

  constexpr VoterSet operator|(VoterSet o) const { return VoterSet(bits_ | o.bits_); }
  constexpr VoterSet operator&(VoterSet o) const { return VoterSet(bits_ & o.bits_); }
  constexpr VoterSet operator-(VoterSet o) const { return VoterSet(bits_ & ~o.bits_); }
  constexpr VoterSet& operator|=(VoterSet o) { bits_ |= o.bits_; return *this; }
  constexpr VoterSet& operator&=(VoterSet o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const VoterSet&) const = default;

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  // All subsets of this set, in increasing bitmask order.
  std::vector<VoterSet> subsets() const {
    std::vector<VoterSet> out;
    std::uint32_t s = 0;
    do {
      out.emplace_back(s);
      s = (s - bits_) & bits_;
    } while (s != 0);
    return out;
  }

private:
  std::uint32_t bits_ = 0;
};

// "{0 2}" style rendering by voter id.
std::string to_string(VoterSet s);

}  // namespace twoval
