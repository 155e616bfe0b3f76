#include "twoval/dominance.hpp"

#include "parallel.hpp"
#include "twoval/error.hpp"

namespace twoval {

bool dominates(const Profile& p, const Profile& q, Alternative a, Alternative b, Side side) {
  const VoterSet society = VoterSet::all(p.voters());
  const VoterSet moved = side == Side::a ? supporters(a, q, b) : supporters(b, q, a);
  return (equivalence_set(p, q, a, b) | (indifference_set(p, a, b) & moved)) == society;
}

std::optional<PairWitness> find_compatibility_violation(const ScfTable& f, Alternative a,
                                                        Alternative b, Exec exec) {
  if (!has_range(f, a, b)) throw DomainError("compatibility needs range {a,b}");
  const auto& space = f.space();
  const auto masks = make_pair_masks(space, a, b);
  const VoterSet society = space.society();
  const std::size_t n = space.size();

  auto row = [&](std::size_t i) -> std::optional<std::size_t> {
    const Alternative value = f.at(i);
    const auto& moved = value == a ? masks.prefer_a : masks.prefer_b;
    for (std::size_t j = 0; j < n; ++j) {
      if (f.at(j) == value) continue;
      if ((masks.equivalence(space, i, j) | (masks.indiff[i] & moved[j])) == society) return j;
    }
    return std::nullopt;
  };
  auto first = detail::first_index(n, exec, [&](std::size_t i) { return row(i).has_value(); });
  if (!first) return std::nullopt;
  return PairWitness{*first, *row(*first)};
}

}  // namespace twoval
