#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twoval/exec.hpp"
#include "twoval/scf.hpp"

namespace twoval {

struct CheckLine {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool skipped = false;
  std::string note;
};

struct RunReport {
  std::string command;
  std::size_t voters = 0;
  std::size_t alternatives = 0;
  std::string pair;
  std::vector<std::pair<std::string, std::size_t>> counts;  // insertion order is output order
  std::vector<CheckLine> checks;
  std::vector<std::string> witnesses;
  double elapsed_seconds = 0.0;

  std::size_t failures() const;
  void count(const std::string& key, std::size_t value);
};

inline constexpr std::size_t kMaxVerifyVoters = 3;
inline constexpr std::size_t kMaxVerifyAlternatives = 3;
// Tables into {a,b} are enumerated exhaustively up to this many profiles.
inline constexpr std::size_t kExhaustiveProfiles = 13;

// Every table onto {a,b} over `space`, in binary-counter order (bit i = 1
// means value b at profile i).
std::vector<ScfTable> onto_tables(const ProfileSpace& space, Alternative a, Alternative b);

// Seeded mix of onto-{a,b} tables: half uniformly random, half taken from
// random ψ specs with zero to two values flipped (kept only when onto).
std::vector<ScfTable> sample_onto_tables(const ProfileSpace& space, Alternative a, Alternative b,
                                         std::size_t count, std::mt19937_64& rng);

// CSP check routed the cheapest sound way: manipulation search for small
// societies or non-{a,b} ranges, the dominance scan otherwise.
bool is_csp_fast(const ScfTable& f, Alternative a, Alternative b, Exec exec = Exec::parallel);

// The theorem battery at scale (voters, alternatives). Throws ResourceError
// beyond kMaxVerifyVoters / kMaxVerifyAlternatives.
RunReport verify_theorems(std::size_t voters, std::size_t alternatives, std::uint64_t seed,
                          Exec exec = Exec::parallel);

}  // namespace twoval
