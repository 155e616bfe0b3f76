#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "twoval/committees.hpp"
#include "twoval/exec.hpp"
#include "twoval/scf.hpp"

namespace twoval {

// Finite well-ordered sequence of extended committees.
using DoubleCollection = std::vector<ExtendedCommittee>;

// The data of a ψ-type function: the pair {a,b}, the default x and the
// double collection.
class PsiSpec {
public:
  PsiSpec(Universe universe, std::size_t voters, Alternative a, Alternative b, Alternative x,
          DoubleCollection entries);

  const Universe& universe() const { return universe_; }
  std::size_t voters() const { return voters_; }
  Alternative a() const { return a_; }
  Alternative b() const { return b_; }
  Alternative default_value() const { return x_; }
  const DoubleCollection& entries() const { return entries_; }

  bool operator==(const PsiSpec&) const = default;

private:
  Universe universe_;
  std::size_t voters_;
  Alternative a_, b_, x_;
  DoubleCollection entries_;
};

// Position in the double collection, or infinity when no entry decides.
class EntryIndex {
public:
  static EntryIndex infinity() { return EntryIndex(); }
  static EntryIndex at(std::size_t i) { return EntryIndex(i); }

  bool is_infinite() const { return !value_; }
  std::size_t value() const { return value_.value(); }
  bool operator==(const EntryIndex&) const = default;

private:
  EntryIndex() = default;
  explicit EntryIndex(std::size_t i) : value_(i) {}
  std::optional<std::size_t> value_;
};

// Counts class-membership evaluations per entry.
struct EntryProbe {
  std::vector<std::size_t> visits;
};

EntryIndex index(const Profile& p, const PsiSpec& spec, EntryProbe* probe = nullptr);
Alternative evaluate_psi(const Profile& p, const PsiSpec& spec, EntryProbe* probe = nullptr);
ScfTable psi_to_table(const PsiSpec& spec, Exec exec = Exec::parallel);

// Range guaranteed by a single-entry spec.
enum class RangeCase {
  contains_a_and_x,  // F_0 is the power set
  contains_b_and_x,  // F_0 is empty
  exactly_ab,        // F_0 and its dual both nonempty
};
struct RangeReport {
  RangeCase kind;
  std::vector<Alternative> guaranteed;  // sorted
};
RangeReport psi_range_report(const PsiSpec& spec);

// Voting by committee on strict profiles: a iff D(a,P) ∈ F. `space` must be
// a strict domain whose society is F's carrier.
ScfTable strict_committee_scf(const Committee& f, const ProfileSpace& space, Alternative a,
                              Alternative b);

// The voter whose best alternative among `among` f always returns.
std::optional<std::size_t> find_strict_dictator(const ScfTable& f,
                                                const std::vector<Alternative>& among);

// Random spec: 1..4 entries; each with a uniform subset I of voters, a
// uniform a~b-indifferent order per voter of I, and a uniform committee on
// the complement; the default is uniform in {a,b}.
PsiSpec random_psi_spec(std::mt19937_64& rng, const Universe& universe, std::size_t voters,
                        Alternative a, Alternative b);

// Header lines, then "pair: a b; default: a;", then per entry an
// "entry <k>" line, the π lines and the committee line.
std::string format_psi(const PsiSpec& spec);
PsiSpec parse_psi(std::string_view text);

}  // namespace twoval
