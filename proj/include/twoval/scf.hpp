#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twoval/exec.hpp"
#include "twoval/profiles.hpp"

namespace twoval {

// A social choice function given extensionally: one value per profile of
// `space`, in the space's enumeration order.
class ScfTable {
public:
  ScfTable() = default;
  ScfTable(ProfileSpace space, std::vector<Alternative> values);

  template <class Fn>
  static ScfTable tabulate(const ProfileSpace& space, Fn&& fn) {
    std::vector<Alternative> values;
    values.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) values.push_back(fn(space.profile(i)));
    return ScfTable(space, std::move(values));
  }

  const ProfileSpace& space() const { return space_; }
  const std::vector<Alternative>& values() const { return values_; }
  Alternative at(std::size_t index) const { return values_.at(index); }
  Alternative operator()(const Profile& p) const { return values_[space_.index_of(p)]; }

  bool operator==(const ScfTable&) const = default;

private:
  ProfileSpace space_;
  std::vector<Alternative> values_;
};

// Sorted set of attained values.
std::vector<Alternative> range(const ScfTable& f);
// True iff range(f) == {a, b}.
bool has_range(const ScfTable& f, Alternative a, Alternative b);

// A coalition D manipulating profile P by jointly reporting Q.
struct Manipulation {
  std::size_t profile;
  std::size_t report;
  VoterSet coalition;
};

// Exhaustive search over the joint misreports of D, in enumeration order.
// Returns the index of the first successful report.
std::optional<std::size_t> coalition_manipulates(const ScfTable& f, std::size_t profile,
                                                 VoterSet coalition);
std::optional<Profile> coalition_manipulates(const ScfTable& f, const Profile& p,
                                             VoterSet coalition);

// Coalitions are tried in increasing size (then bitmask) order for each
// profile in enumeration order; the witness is the first hit.
std::optional<Manipulation> find_manipulation(const ScfTable& f, Exec exec = Exec::parallel);
std::optional<Manipulation> find_individual_manipulation(const ScfTable& f,
                                                         Exec exec = Exec::parallel);
inline bool is_csp(const ScfTable& f, Exec exec = Exec::parallel) {
  return !find_manipulation(f, exec);
}
inline bool is_individually_sp(const ScfTable& f, Exec exec = Exec::parallel) {
  return !find_individual_manipulation(f, exec);
}

struct ParetoViolation {
  std::size_t profile;
  Alternative unanimously_better;
};
std::optional<ParetoViolation> find_pareto_violation(const ScfTable& f, Exec exec = Exec::parallel);
inline bool is_weak_pareto(const ScfTable& f, Exec exec = Exec::parallel) {
  return !find_pareto_violation(f, exec);
}

enum class BCondition { B1, B2 };

// B1(P,Q): voters indifferent in both agree, D(a,Q) ⊇ D(a,P), D(b,P) ⊇ D(b,Q).
// B2(P,Q) is B1(Q,P).
bool b_condition(const Profile& p, const Profile& q, Alternative a, Alternative b,
                 BCondition which);

struct PairWitness {
  std::size_t p;
  std::size_t q;
};

// Implication (1'): B1(P,Q) ∧ f(P)=a ⟹ f(Q)=a; (2'): B2(P,Q) ∧ f(P)=b ⟹ f(Q)=b.
std::optional<PairWitness> find_monotonicity_violation(const ScfTable& f, Alternative a,
                                                       Alternative b, BCondition which,
                                                       Exec exec = Exec::parallel);
// Both (1') and (2'). Requires range(f) == {a, b}.
std::optional<PairWitness> find_bbm_violation(const ScfTable& f, Alternative a, Alternative b,
                                              Exec exec = Exec::parallel);
inline bool is_essentially_based_and_monotonic(const ScfTable& f, Alternative a, Alternative b,
                                               Exec exec = Exec::parallel) {
  return !find_bbm_violation(f, a, b, exec);
}

// Depth-first search for every table with values in `values` that survives
// all single-voter misreport checks, pruning on partial assignments.
std::vector<ScfTable> individually_sp_tables(const ProfileSpace& space,
                                             const std::vector<Alternative>& values);

// Named example functions.
namespace examples {
// Two voters, alternatives a b c: b if b ≻ a for voter 0, or voter 0 has
// c ≻ a~b, or voter 0 has a~b ≻ c and voter 1 has b ≻ a; otherwise a.
ScfTable dia();
// One voter, alternatives a b: b on a≻b, a on b≻a and on a~b.
ScfTable anti_rule();
// Voter d's best alternative among `among`, lowest id on ties.
ScfTable dictatorship(const ProfileSpace& space, std::size_t d, std::vector<Alternative> among);
}  // namespace examples

// Header ("universe: a b c", "society: 2", optional "domain: strict"), then
// "P#k: <inline profile> -> <alternative>" per profile in enumeration order.
std::string format_scf(const ScfTable& f);
ScfTable parse_scf(std::string_view text);

}  // namespace twoval
