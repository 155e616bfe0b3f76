#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "twoval/profiles.hpp"
#include "twoval/voter_set.hpp"

namespace twoval {

// A superset-closed family of subsets of a carrier set of voters. May be
// empty, and contains the empty coalition only when it is the whole power
// set of the carrier.
class Committee {
public:
  Committee() = default;  // empty family on the empty carrier
  // Throws DomainError if a member escapes the carrier or closure fails.
  Committee(VoterSet carrier, const std::vector<VoterSet>& members);

  static Committee empty_family(VoterSet carrier) { return Committee(carrier, {}); }
  static Committee power_set(VoterSet carrier);

  VoterSet carrier() const { return carrier_; }
  bool contains(VoterSet s) const {
    return s.subset_of(carrier_) && s.bits() < member_.size() && member_[s.bits()];
  }
  bool empty() const { return count_ == 0; }
  bool is_power_set() const { return contains(VoterSet{}); }
  std::size_t size() const { return count_; }
  // Members in increasing bitmask order.
  std::vector<VoterSet> members() const;

  bool operator==(const Committee& o) const {
    return carrier_ == o.carrier_ && members() == o.members();
  }

private:
  VoterSet carrier_;
  std::vector<bool> member_;  // indexed by voter bitmask
  std::size_t count_ = 0;
};

// Throws DomainError if some member is not contained in the carrier.
bool is_superset_closed(const std::vector<VoterSet>& members, VoterSet carrier);

// {E ⊆ carrier : carrier \ E ∉ F}.
Committee dual(const Committee& f);

inline constexpr std::size_t kDefaultCommitteeCarrierBound = 4;

// Every superset-closed family on the carrier, generated from antichains of
// minimal coalitions. The first family is the empty one.
std::vector<Committee> enumerate_committees(VoterSet carrier,
                                            std::size_t bound = kDefaultCommitteeCarrierBound);

// (π, F): a partial {a,b}-indifference profile and a committee on the voters
// outside its domain.
class ExtendedCommittee {
public:
  ExtendedCommittee(PartialProfile pi, Committee family, Alternative a, Alternative b,
                    std::size_t voters);

  const PartialProfile& pi() const { return pi_; }
  const Committee& family() const { return family_; }
  VoterSet indifferent() const { return pi_.domain(); }

  bool operator==(const ExtendedCommittee&) const = default;

private:
  PartialProfile pi_;
  Committee family_;
};

enum class Side { a, b };

// Membership of P in the class P_a(π,F) (side a) or P_b(π,F) (side b).
bool in_class(const Profile& p, const ExtendedCommittee& ec, Alternative a, Alternative b,
              Side side);

// "carrier: 1 2; members: {1 2}, {1}" with members in bitmask order.
std::string format_committee(const Committee& f);
Committee parse_committee(std::string_view text, std::size_t line = 1);

// π lines followed by the committee line.
std::string format_extended(const ExtendedCommittee& ec, const Universe& universe);

}  // namespace twoval
