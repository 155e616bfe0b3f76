#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <set>
#include <vector>

#include "twoval/committees.hpp"
#include "twoval/profiles.hpp"
#include "twoval/scf.hpp"

namespace oracle {

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Ordered Bell (Fubini) numbers.
inline std::uint64_t ordered_bell(unsigned n) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (unsigned k = 1; k <= n; ++k) total += binomial(n, k) * ordered_bell(n - k);
  return total;
}

// All superset-closed families over a carrier, by filtering every subset of
// its power set. Feasible for carriers of at most 3 voters.
inline std::set<std::vector<std::uint32_t>> sscf_brute(twoval::VoterSet carrier) {
  std::vector<twoval::VoterSet> subsets = carrier.subsets();
  const std::size_t m = subsets.size();
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    bool closed = true;
    for (std::size_t i = 0; i < m && closed; ++i) {
      if (!((pick >> i) & 1u)) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (subsets[i].subset_of(subsets[j]) && !((pick >> j) & 1u)) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::vector<std::uint32_t> fam;
    for (std::size_t i = 0; i < m; ++i)
      if ((pick >> i) & 1u) fam.push_back(subsets[i].bits());
    out.insert(fam);
  }
  return out;
}

// B1 with at least one strict inclusion.
inline bool strict_b1(const twoval::Profile& p, const twoval::Profile& q, twoval::Alternative a,
                      twoval::Alternative b) {
  using namespace twoval;
  if (!b_condition(p, q, a, b, BCondition::B1)) return false;
  return supporters(a, q, b) != supporters(a, p, b) || supporters(b, p, a) != supporters(b, q, a);
}

// Conditions (1) and (2) with strict inclusions.
inline bool strict_monotonic(const twoval::ScfTable& f, twoval::Alternative a, twoval::Alternative b) {
  const auto& s = f.space();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      const auto p = s.profile(i), q = s.profile(j);
      if (f.at(i) == a && strict_b1(p, q, a, b) && f.at(j) != a) return false;
      if (f.at(i) == b && strict_b1(q, p, a, b) && f.at(j) != b) return false;
    }
  return true;
}

// Class membership for two alternatives: the order clause on I reduces to
// the absence of opposite supporters there.
inline bool in_class_two(const twoval::Profile& p, const twoval::ExtendedCommittee& ec,
                         twoval::Alternative a, twoval::Alternative b, twoval::Side side) {
  using namespace twoval;
  const VoterSet i = ec.indifferent();
  const VoterSet rest = ec.family().carrier();
  const VoterSet da = supporters(a, p, b), db = supporters(b, p, a);
  if (side == Side::a) return ec.family().contains(da & rest) && (db & i).empty();
  return dual(ec.family()).contains(db & rest) && (da & i).empty();
}

}  // namespace oracle
