#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twoval/orders.hpp"
#include "twoval/voter_set.hpp"

namespace twoval {

// Total profile: one weak order per voter 0..voters()-1, all over the same
// universe.
class Profile {
public:
  Profile() = default;
  explicit Profile(std::vector<WeakOrder> prefs);

  std::size_t voters() const { return prefs_.size(); }
  const WeakOrder& operator[](std::size_t v) const { return prefs_.at(v); }
  const std::vector<WeakOrder>& prefs() const { return prefs_; }

  auto operator<=>(const Profile&) const = default;

private:
  std::vector<WeakOrder> prefs_;
};

// Orders assigned to a subset of the society; the empty partial profile is
// allowed.
class PartialProfile {
public:
  PartialProfile() = default;
  explicit PartialProfile(std::map<std::size_t, WeakOrder> prefs);

  VoterSet domain() const;
  bool empty() const { return prefs_.empty(); }
  const std::map<std::size_t, WeakOrder>& prefs() const { return prefs_; }
  const WeakOrder& at(std::size_t v) const;

  auto operator<=>(const PartialProfile&) const = default;

private:
  std::map<std::size_t, WeakOrder> prefs_;
};

// P restricted to the voters in `voters`.
PartialProfile restrict_profile(const Profile& p, VoterSet voters);

// I(P): voters indifferent between a and b.
VoterSet indifference_set(const Profile& p, Alternative a, Alternative b);
// D(x,P): voters strictly preferring x to other.
VoterSet supporters(Alternative x, const Profile& p, Alternative other);
// E(P,Q): voters with identical orders, or identical strict {a,b} restriction.
VoterSet equivalence_set(const Profile& p, const Profile& q, Alternative a, Alternative b);

// Glues partial profiles whose domains partition {0..voters-1}.
Profile compose(const std::vector<PartialProfile>& parts, std::size_t voters);

bool is_partial_ab_indifference(const PartialProfile& pi, Alternative a, Alternative b);

// Every voter totally indifferent over the whole universe.
Profile designated_indifference_profile(std::size_t universe_size, std::size_t voters);

enum class Domain { weak, strict };

// Finite profile domain with a fixed enumeration: voters range over the
// domain's orders in canonical order, voter 0 most significant.
class ProfileSpace {
public:
  ProfileSpace() = default;
  ProfileSpace(Universe universe, std::size_t voters, Domain domain = Domain::weak);

  const Universe& universe() const { return universe_; }
  std::size_t voters() const { return voters_; }
  Domain domain() const { return domain_; }
  VoterSet society() const { return VoterSet::all(voters_); }
  const std::vector<WeakOrder>& orders() const { return orders_; }
  std::size_t size() const { return size_; }

  Profile profile(std::size_t index) const;
  std::size_t index_of(const Profile& p) const;  // DomainError if outside the domain
  std::size_t order_index(const WeakOrder& w) const;
  bool contains(const Profile& p) const;

  // Order index of voter v in profile `index`.
  std::size_t digit(std::size_t index, std::size_t v) const {
    return (index / stride_[v]) % orders_.size();
  }
  std::size_t with_digit(std::size_t index, std::size_t v, std::size_t order) const {
    return index - digit(index, v) * stride_[v] + order * stride_[v];
  }
  // Voters whose orders coincide in the two profiles.
  VoterSet equal_voters(std::size_t i, std::size_t j) const;

  bool operator==(const ProfileSpace& o) const {
    return universe_ == o.universe_ && voters_ == o.voters_ && domain_ == o.domain_;
  }

private:
  Universe universe_;
  std::size_t voters_ = 0;
  Domain domain_ = Domain::weak;
  std::vector<WeakOrder> orders_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
};

// I, D(a,·), D(b,·) precomputed for every profile of a space.
struct PairMasks {
  Alternative a, b;
  std::vector<VoterSet> indiff, prefer_a, prefer_b;

  VoterSet equivalence(const ProfileSpace& space, std::size_t i, std::size_t j) const {
    return space.equal_voters(i, j) | (prefer_a[i] & prefer_a[j]) | (prefer_b[i] & prefer_b[j]);
  }
};
PairMasks make_pair_masks(const ProfileSpace& space, Alternative a, Alternative b);

// All profiles of unanimous a~b indifference, in canonical enumeration order.
std::vector<Profile> unanimous_indifference_profiles(Alternative a, Alternative b,
                                                     const Universe& universe,
                                                     std::size_t voters);

// Textual forms. A profile is one "v<id>: <order>" line per voter; a partial
// profile lists its domain voters only. The inline form is the comma-joined
// orders in voter order ("a~b>c, a>b>c").
std::string format_profile(const Profile& p, const Universe& universe);
std::string format_partial(const PartialProfile& pi, const Universe& universe);
std::string format_profile_inline(const Profile& p, const Universe& universe);
Profile parse_profile(std::string_view text, const Universe& universe, std::size_t voters);
PartialProfile parse_partial(std::string_view text, const Universe& universe,
                             std::size_t first_line = 1);
Profile parse_profile_inline(std::string_view text, const Universe& universe,
                             std::size_t line = 1, std::size_t column = 1);

}  // namespace twoval
