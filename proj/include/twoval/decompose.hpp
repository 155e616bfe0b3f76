#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twoval/psi.hpp"

namespace twoval {

// The unique committee F on the society with P_a(∅,F) ⊆ {f=a} and
// P_b(∅,F) ⊆ {f=b}. Built by testing, for each coalition S, the strict
// profile giving S the order a≻b≻... and everyone else b≻a≻...
// Throws NotCspError when the result is not a committee of coalitions or
// the inclusions fail.
Committee extract_base_committee(const ScfTable& f, Alternative a, Alternative b);

// f with the voters of dom(pi) frozen at pi, as a function of the remaining
// voters. The sub-society is renumbered 0..k-1 in increasing original id.
ScfTable restrict_scf(const ScfTable& f, const PartialProfile& pi);

// Bookkeeping of the representation loop.
struct DecompositionState {
  // Table indices of all profiles in the order the loop scans them.
  std::vector<std::size_t> enumeration;
  // Profiles (by table index) lying in some class P_λ built so far.
  std::vector<bool> covered;
  DoubleCollection entries;
  // Enumeration positions η of the chosen Q^λ, λ ≥ 1.
  std::vector<std::size_t> chosen;
  // Δ: enumeration positions not yet covered whose value differs from x.
  std::vector<std::size_t> delta;
};

// Places `pi` (a table index) first, then every other profile in table order.
std::vector<std::size_t> enumeration_with_first(std::size_t profiles, std::size_t pi);

// State after entry 0: empty π and the base committee of f.
DecompositionState start_decomposition(const ScfTable& f, Alternative a, Alternative b,
                                       Alternative x, std::vector<std::size_t> enumeration);

// The next extended committee, or nullopt once Δ is empty. Postconditions
// are checked and reported as NotCspError.
std::optional<ExtendedCommittee> next_entry(const DecompositionState& state, const ScfTable& f,
                                            Alternative a, Alternative b, Alternative x,
                                            std::size_t pi_index);

// Appends `entry` and refreshes covered/delta. Δ must shrink.
void push_entry(DecompositionState& state, const ScfTable& f, Alternative a, Alternative b,
                Alternative x, ExtendedCommittee entry);

// Full representation: a spec whose ψ function equals f on every profile.
// `pi` defaults to the all-indifferent profile and fixes x = f(pi).
PsiSpec decompose(const ScfTable& f, Alternative a, Alternative b,
                  const std::optional<Profile>& pi = std::nullopt);

}  // namespace twoval
