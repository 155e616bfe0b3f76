#pragma once

#include <optional>

#include "twoval/committees.hpp"
#include "twoval/scf.hpp"

namespace twoval {

// side a: V = E(P,Q) ∪ [I(P) ∩ D(a,Q)]; side b likewise with D(b,Q).
bool dominates(const Profile& p, const Profile& q, Alternative a, Alternative b, Side side);

// First ordered pair (P,Q) with P dominating Q on side f(P) but f(Q) ≠ f(P).
// Throws DomainError unless range(f) == {a, b}.
std::optional<PairWitness> find_compatibility_violation(const ScfTable& f, Alternative a,
                                                        Alternative b,
                                                        Exec exec = Exec::parallel);
inline bool is_compatible(const ScfTable& f, Alternative a, Alternative b,
                          Exec exec = Exec::parallel) {
  return !find_compatibility_violation(f, a, b, exec);
}

}  // namespace twoval
