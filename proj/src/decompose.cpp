#include "twoval/decompose.hpp"

#include <algorithm>
#include <string>

#include "twoval/dominance.hpp"
#include "twoval/error.hpp"

namespace twoval {

namespace {

// Reindexes a set over the sub-society back to original voter ids.
VoterSet lift(VoterSet s, const std::vector<std::size_t>& original) {
  VoterSet out;
  for (std::size_t v : s.members()) out.insert(original[v]);
  return out;
}

Committee lift(const Committee& f, const std::vector<std::size_t>& original) {
  std::vector<VoterSet> members;
  for (VoterSet m : f.members()) members.push_back(lift(m, original));
  return Committee(lift(f.carrier(), original), members);
}

bool in_entry(const Profile& p, const ExtendedCommittee& e, Alternative a, Alternative b) {
  return in_class(p, e, a, b, Side::a) || in_class(p, e, a, b, Side::b);
}

// Both class inclusions of an entry; returns a violating table index.
std::optional<std::size_t> inclusion_violation(const ScfTable& f, const ExtendedCommittee& e,
                                               Alternative a, Alternative b) {
  const auto& space = f.space();
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Profile p = space.profile(i);
    if (in_class(p, e, a, b, Side::a) && f.at(i) != a) return i;
    if (in_class(p, e, a, b, Side::b) && f.at(i) != b) return i;
  }
  return std::nullopt;
}

}  // namespace

Committee extract_base_committee(const ScfTable& f, Alternative a, Alternative b) {
  const auto& space = f.space();
  const auto [s1, s2] = canonical_strict_pair(a, b, space.universe());
  const VoterSet society = space.society();
  std::vector<VoterSet> members;
  for (VoterSet s : society.subsets()) {
    std::vector<WeakOrder> prefs;
    for (std::size_t v = 0; v < space.voters(); ++v) prefs.push_back(s.contains(v) ? s1 : s2);
    const Profile p(std::move(prefs));
    if (!space.contains(p)) throw DomainError("table domain lacks the canonical strict profiles");
    const Alternative value = f(p);
    if (value != a && value != b) throw NotCspError("table takes values outside {a,b}", space.index_of(p));
    if (value == a) members.push_back(s);
  }
  if (!is_superset_closed(members, society))
    throw NotCspError("coalitions forcing a are not superset closed");
  if (std::find(members.begin(), members.end(), VoterSet{}) != members.end())
    throw NotCspError("the empty coalition forces a");
  if (std::find(members.begin(), members.end(), society) == members.end())
    throw NotCspError("unanimous a≻b does not force a");
  Committee committee(society, members);
  const ExtendedCommittee entry(PartialProfile{}, committee, a, b, space.voters());
  if (auto bad = inclusion_violation(f, entry, a, b))
    throw NotCspError("base committee classes disagree with the table", *bad);
  return committee;
}

ScfTable restrict_scf(const ScfTable& f, const PartialProfile& pi) {
  const auto& space = f.space();
  const VoterSet frozen = pi.domain();
  if (!frozen.subset_of(space.society())) throw DomainError("π has voters outside the society");
  const VoterSet rest = space.society() - frozen;
  if (rest.empty()) throw DomainError("cannot restrict to an empty sub-society");
  const auto original = rest.members();
  const ProfileSpace sub(space.universe(), original.size(), space.domain());
  return ScfTable::tabulate(sub, [&](const Profile& q) {
    std::map<std::size_t, WeakOrder> m;
    for (std::size_t k = 0; k < original.size(); ++k) m.emplace(original[k], q[k]);
    return f(compose({pi, PartialProfile(std::move(m))}, space.voters()));
  });
}

std::vector<std::size_t> enumeration_with_first(std::size_t profiles, std::size_t pi) {
  if (pi >= profiles) throw DomainError("profile index out of range");
  std::vector<std::size_t> out{pi};
  for (std::size_t i = 0; i < profiles; ++i)
    if (i != pi) out.push_back(i);
  return out;
}

namespace {

void refresh_delta(DecompositionState& state, const ScfTable& f, Alternative x) {
  state.delta.clear();
  for (std::size_t pos = 0; pos < state.enumeration.size(); ++pos) {
    const std::size_t i = state.enumeration[pos];
    if (!state.covered[i] && f.at(i) != x) state.delta.push_back(pos);
  }
}

void cover(DecompositionState& state, const ScfTable& f, const ExtendedCommittee& e,
           Alternative a, Alternative b) {
  const auto& space = f.space();
  for (std::size_t i = 0; i < space.size(); ++i)
    if (!state.covered[i] && in_entry(space.profile(i), e, a, b)) state.covered[i] = true;
}

}  // namespace

DecompositionState start_decomposition(const ScfTable& f, Alternative a, Alternative b,
                                       Alternative x, std::vector<std::size_t> enumeration) {
  const auto& space = f.space();
  std::vector<std::size_t> check = enumeration;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i || check.size() != space.size())
      throw DomainError("enumeration must be a permutation of the profiles");

  DecompositionState state;
  state.enumeration = std::move(enumeration);
  state.covered.assign(space.size(), false);
  ExtendedCommittee base(PartialProfile{}, extract_base_committee(f, a, b), a, b, space.voters());
  if (base.family().empty() || dual(base.family()).empty())
    throw NotCspError("base committee or its dual is empty");
  cover(state, f, base, a, b);
  state.entries.push_back(std::move(base));
  refresh_delta(state, f, x);
  return state;
}

std::optional<ExtendedCommittee> next_entry(const DecompositionState& state, const ScfTable& f,
                                            Alternative a, Alternative b, Alternative x,
                                            std::size_t pi_index) {
  if (state.delta.empty()) return std::nullopt;
  const auto& space = f.space();
  const std::size_t step = state.entries.size();
  const std::size_t eta = state.delta.front();
  const std::size_t qi = state.enumeration[eta];
  const Profile q = space.profile(qi);
  const Alternative value = f.at(qi);
  auto fail = [&](const std::string& what, std::size_t at) -> void {
    throw NotCspError("entry " + std::to_string(step) + ": " + what, at);
  };

  if (value == x) fail("Δ holds a profile with the default value", qi);
  if (eta < step) fail("enumeration position precedes the step count", qi);
  if (std::find(state.chosen.begin(), state.chosen.end(), eta) != state.chosen.end())
    fail("profile chosen twice", qi);

  const VoterSet indifferent = indifference_set(q, a, b);
  if (indifferent.empty()) fail("uncovered profile without a~b voters", qi);
  PartialProfile pi = restrict_profile(q, indifferent);
  const VoterSet rest = space.society() - indifferent;
  const Alternative opposite = value == a ? b : a;

  // One-valued restriction (including the empty sub-society): F is the power
  // set when Q goes to a and the empty family when it goes to b, so that
  // Q's orbit lands in the matching class.
  Committee family;
  bool one_valued = rest.empty();
  ScfTable sub;
  if (!one_valued) {
    sub = restrict_scf(f, pi);
    const auto& vals = sub.values();
    one_valued = std::find(vals.begin(), vals.end(), opposite) == vals.end();
  }
  if (one_valued) {
    family = value == a ? Committee::power_set(rest) : Committee::empty_family(rest);
  } else {
    family = lift(extract_base_committee(sub, a, b), rest.members());
  }
  ExtendedCommittee entry(std::move(pi), std::move(family), a, b, space.voters());

  if (!in_class(q, entry, a, b, value == a ? Side::a : Side::b)) fail("Q is not in its own class", qi);
  if (in_entry(space.profile(pi_index), entry, a, b)) fail("π lies in the new class", pi_index);
  if (auto bad = inclusion_violation(f, entry, a, b)) fail("class disagrees with the table", *bad);
  return entry;
}

void push_entry(DecompositionState& state, const ScfTable& f, Alternative a, Alternative b,
                Alternative x, ExtendedCommittee entry) {
  const std::size_t before = state.delta.size();
  const std::size_t eta = state.delta.empty() ? 0 : state.delta.front();
  cover(state, f, entry, a, b);
  state.entries.push_back(std::move(entry));
  state.chosen.push_back(eta);
  refresh_delta(state, f, x);
  if (state.delta.size() >= before) throw NotCspError("Δ did not shrink");
}

PsiSpec decompose(const ScfTable& f, Alternative a, Alternative b, const std::optional<Profile>& pi) {
  const auto& space = f.space();
  if (space.domain() != Domain::weak) throw DomainError("decomposition needs the full weak domain");
  if (!has_range(f, a, b)) throw DomainError("decomposition needs range {a,b}");
  const Profile base_pi = pi ? *pi : designated_indifference_profile(space.universe().size(), space.voters());
  if (!space.contains(base_pi)) throw DomainError("π does not fit the table's profile space");
  if (indifference_set(base_pi, a, b) != space.society())
    throw DomainError("π must be unanimously indifferent between a and b");
  if (auto w = find_compatibility_violation(f, a, b))
    throw NotCspError("table is not compatible with dominance", w->p);

  const std::size_t pi_index = space.index_of(base_pi);
  const Alternative x = f.at(pi_index);
  auto state = start_decomposition(f, a, b, x, enumeration_with_first(space.size(), pi_index));
  if (in_entry(base_pi, state.entries.front(), a, b)) throw NotCspError("π lies in the base class", pi_index);
  while (auto entry = next_entry(state, f, a, b, x, pi_index))
    push_entry(state, f, a, b, x, std::move(*entry));
  return PsiSpec(space.universe(), space.voters(), a, b, x, std::move(state.entries));
}

}  // namespace twoval
