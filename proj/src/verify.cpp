#include "twoval/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "twoval/decompose.hpp"
#include "twoval/dominance.hpp"
#include "twoval/error.hpp"
#include "twoval/psi.hpp"

namespace twoval {

std::size_t RunReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failures;
  return n;
}

void RunReport::count(const std::string& key, std::size_t value) {
  for (auto& [k, v] : counts)
    if (k == key) {
      v = value;
      return;
    }
  counts.emplace_back(key, value);
}

std::vector<ScfTable> onto_tables(const ProfileSpace& space, Alternative a, Alternative b) {
  if (space.size() > 20) throw ResourceError("too many profiles to enumerate all tables");
  const std::size_t n = space.size();
  std::vector<ScfTable> out;
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
    std::vector<Alternative> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = ((bits >> i) & 1u) ? b : a;
    out.emplace_back(space, std::move(values));
  }
  return out;
}

std::vector<ScfTable> sample_onto_tables(const ProfileSpace& space, Alternative a, Alternative b,
                                         std::size_t count, std::mt19937_64& rng) {
  std::vector<ScfTable> out;
  std::bernoulli_distribution coin(0.5);
  const std::size_t random_part = count / 2;
  while (out.size() < random_part) {
    std::vector<Alternative> values(space.size());
    for (auto& v : values) v = coin(rng) ? b : a;
    ScfTable t(space, std::move(values));
    if (has_range(t, a, b)) out.push_back(std::move(t));
  }
  std::uniform_int_distribution<std::size_t> flips(0, 2), where(0, space.size() - 1);
  while (out.size() < count) {
    const PsiSpec spec = random_psi_spec(rng, space.universe(), space.voters(), a, b);
    auto values = psi_to_table(spec).values();
    for (std::size_t k = flips(rng); k > 0; --k) {
      auto& v = values[where(rng)];
      v = v == a ? b : a;
    }
    ScfTable t(space, std::move(values));
    if (has_range(t, a, b)) out.push_back(std::move(t));
  }
  return out;
}

bool is_csp_fast(const ScfTable& f, Alternative a, Alternative b, Exec exec) {
  const auto& space = f.space();
  const bool small = space.voters() <= 2 || space.orders().size() <= 3;
  if (small || !has_range(f, a, b) || space.domain() != Domain::weak) return is_csp(f, exec);
  return is_compatible(f, a, b, exec);
}

namespace {

std::string describe(const ScfTable& f, std::size_t i) {
  return format_profile_inline(f.space().profile(i), f.space().universe());
}

// Voter sets of all profiles with every voter indifferent: handy for the
// structural checks.
std::vector<ExtendedCommittee> all_extended_committees(const Universe& u, std::size_t voters,
                                                       Alternative a, Alternative b) {
  std::vector<WeakOrder> tied;
  for (const auto& w : enumerate_weak_orders(u.size()))
    if (w.rank(a) == w.rank(b)) tied.push_back(w);
  const VoterSet society = VoterSet::all(voters);
  std::vector<ExtendedCommittee> out;
  for (VoterSet indiff : society.subsets()) {
    const auto members = indiff.members();
    const auto families = enumerate_committees(society - indiff);
    std::vector<std::size_t> pick(members.size(), 0);
    while (true) {
      std::map<std::size_t, WeakOrder> pi;
      for (std::size_t k = 0; k < members.size(); ++k) pi.emplace(members[k], tied[pick[k]]);
      for (const auto& fam : families) out.emplace_back(PartialProfile(pi), fam, a, b, voters);
      std::size_t k = members.size();
      while (k > 0 && ++pick[k - 1] == tied.size()) pick[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

}  // namespace

RunReport verify_theorems(std::size_t voters, std::size_t alternatives, std::uint64_t seed,
                          Exec exec) {
  if (voters == 0 || alternatives < 2) throw DomainError("need at least one voter and two alternatives");
  if (voters > kMaxVerifyVoters || alternatives > kMaxVerifyAlternatives)
    throw ResourceError("verify-theorems is limited to " + std::to_string(kMaxVerifyVoters) +
                        " voters and " + std::to_string(kMaxVerifyAlternatives) + " alternatives");
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  const Universe u = Universe::standard(alternatives);
  const Alternative a{0}, b{1};
  const ProfileSpace space(u, voters);

  RunReport report;
  report.command = "verify-theorems";
  report.voters = voters;
  report.alternatives = alternatives;
  report.pair = u.label(a) + " " + u.label(b);
  report.count("profiles", space.size());

  auto witness = [&](CheckLine& line, const std::string& what) {
    ++line.failures;
    if (report.witnesses.size() < 20) report.witnesses.push_back(line.name + ": " + what);
  };

  // Population of onto tables.
  const bool exhaustive = space.size() <= kExhaustiveProfiles;
  const auto tables = exhaustive ? onto_tables(space, a, b) : sample_onto_tables(space, a, b, 500, rng);
  report.count("tables_scanned", tables.size());

  CheckLine final2{"csp_iff_compatible_iff_bbm", 0, 0, false, exhaustive ? "exhaustive" : "sampled"};
  CheckLine single{"bbm_single_implication_suffices", 0, 0, false, ""};
  CheckLine indiv{"csp_iff_individually_sp", 0, 0, false, ""};
  CheckLine pareto{"csp_implies_weak_pareto", 0, 0, false, ""};
  CheckLine corollary{"csp_constant_on_equivalence", 0, 0, false, ""};
  CheckLine roundtrip{"decompose_roundtrip", 0, 0, false, ""};
  const auto masks = make_pair_masks(space, a, b);
  std::size_t csp_found = 0;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const ScfTable& f = tables[t];
    const bool csp = is_csp(f, exec);
    const bool compat = is_compatible(f, a, b, exec);
    const bool bbm = is_essentially_based_and_monotonic(f, a, b, exec);
    ++final2.checked;
    if (csp != compat || compat != bbm)
      witness(final2, "table " + std::to_string(t) + " csp=" + std::to_string(csp) +
                          " compatible=" + std::to_string(compat) + " bbm=" + std::to_string(bbm));
    const bool one = !find_monotonicity_violation(f, a, b, BCondition::B1, exec);
    const bool two = !find_monotonicity_violation(f, a, b, BCondition::B2, exec);
    ++single.checked;
    if (one != two || one != bbm) witness(single, "table " + std::to_string(t));
    ++indiv.checked;
    if (csp != is_individually_sp(f, exec)) witness(indiv, "table " + std::to_string(t));
    if (!csp) continue;
    ++csp_found;
    ++pareto.checked;
    if (auto v = find_pareto_violation(f, exec)) witness(pareto, describe(f, v->profile));
    ++corollary.checked;
    for (std::size_t i = 0; i < space.size(); ++i)
      for (std::size_t j = 0; j < space.size(); ++j)
        if (masks.equivalence(space, i, j) == space.society() && f.at(i) != f.at(j))
          witness(corollary, describe(f, i) + " vs " + describe(f, j));
    ++roundtrip.checked;
    try {
      if (psi_to_table(decompose(f, a, b), exec) != f) witness(roundtrip, "table " + std::to_string(t));
    } catch (const std::exception& e) {
      witness(roundtrip, std::string("table ") + std::to_string(t) + ": " + e.what());
    }
  }
  report.count("csp_found", csp_found);
  for (auto* c : {&final2, &single, &indiv, &pareto, &corollary, &roundtrip}) report.checks.push_back(*c);

  // ψ-type functions are CSP; two-sided F_0 gives range {a,b}.
  CheckLine psi{"psi_is_csp", 0, 0, false, ""};
  CheckLine duevalori{"two_sided_first_committee_range", 0, 0, false, ""};
  for (std::size_t k = 0; k < 200; ++k) {
    const PsiSpec spec = random_psi_spec(rng, u, voters, a, b);
    const ScfTable f = psi_to_table(spec, exec);
    ++psi.checked;
    if (!is_csp_fast(f, a, b, exec)) witness(psi, format_psi(spec));
    const Committee& f0 = spec.entries().front().family();
    if (!f0.empty() && !dual(f0).empty()) {
      ++duevalori.checked;
      if (!has_range(f, a, b)) witness(duevalori, format_psi(spec));
    }
  }
  report.checks.push_back(psi);
  report.checks.push_back(duevalori);

  // Strict-profile committee rules.
  CheckLine committee_rule{"strict_two_valued_are_committee_rules", 0, 0, false, ""};
  const ProfileSpace strict(u, voters, Domain::strict);
  if (strict.size() <= kExhaustiveProfiles) {
    std::set<std::vector<Alternative>> csp_side, committee_side;
    for (const auto& f : onto_tables(strict, a, b))
      if (is_csp(f, exec)) csp_side.insert(f.values());
    for (const auto& fam : enumerate_committees(strict.society()))
      if (!fam.empty() && !fam.is_power_set())
        committee_side.insert(strict_committee_scf(fam, strict, a, b).values());
    committee_rule.checked = csp_side.size() + committee_side.size();
    if (csp_side != committee_side)
      witness(committee_rule, std::to_string(csp_side.size()) + " CSP tables vs " +
                                  std::to_string(committee_side.size()) + " committee rules");
    report.count("strict_committee_rules", committee_side.size());
  } else {
    committee_rule.skipped = true;
    committee_rule.note = "strict domain too large to enumerate";
  }
  report.checks.push_back(committee_rule);

  CheckLine dictator{"strict_full_range_are_dictatorships", 0, 0, false, ""};
  if (alternatives >= 3 && strict.size() <= 36) {
    const auto all = u.alternatives();
    std::size_t found = 0;
    for (const auto& f : individually_sp_tables(strict, all)) {
      if (range(f).size() != all.size() || !is_csp(f, exec)) continue;
      ++found;
      ++dictator.checked;
      if (!find_strict_dictator(f, all)) witness(dictator, "full-range CSP table without dictator");
    }
    if (found != voters) witness(dictator, std::to_string(found) + " full-range CSP tables");
    report.count("strict_dictatorships", found);
  } else {
    dictator.skipped = true;
    dictator.note = alternatives < 3 ? "needs three alternatives" : "strict domain too large";
  }
  report.checks.push_back(dictator);

  // Structural invariants.
  CheckLine partition{"indifference_and_supporters_partition", 0, 0, false, ""};
  for (std::size_t i = 0; i < space.size(); ++i) {
    ++partition.checked;
    const VoterSet i_set = masks.indiff[i], da = masks.prefer_a[i], db = masks.prefer_b[i];
    if ((i_set | da | db) != space.society() || !(i_set & da).empty() || !(i_set & db).empty() ||
        !(da & db).empty())
      witness(partition, std::to_string(i));
  }
  report.checks.push_back(partition);

  CheckLine fourway{"dominance_fourway_equivalence", 0, 0, false, ""};
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      const VoterSet e = masks.equivalence(space, i, j);
      const bool pa = (e | (masks.indiff[i] & masks.prefer_a[j])) == space.society();
      const bool pb = (e | (masks.indiff[i] & masks.prefer_b[j])) == space.society();
      const bool qa = (e | (masks.indiff[j] & masks.prefer_a[i])) == space.society();
      const bool qb = (e | (masks.indiff[j] & masks.prefer_b[i])) == space.society();
      const bool full = e == space.society();
      ++fourway.checked;
      if ((pa && pb) != (pa && qa) || (pa && qa) != (pb && qb) || (pb && qb) != full)
        witness(fourway, std::to_string(i) + "," + std::to_string(j));
    }
  }
  report.checks.push_back(fourway);

  CheckLine disjoint{"class_disjointness", 0, 0, false, ""};
  CheckLine duality{"dual_involution", 0, 0, false, ""};
  const auto ecs = all_extended_committees(u, voters, a, b);
  for (const auto& ec : ecs) {
    ++duality.checked;
    if (dual(dual(ec.family())) != ec.family()) witness(duality, format_committee(ec.family()));
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Profile p = space.profile(i);
    for (const auto& ec : ecs) {
      ++disjoint.checked;
      if (in_class(p, ec, a, b, Side::a) && in_class(p, ec, a, b, Side::b))
        witness(disjoint, format_extended(ec, u));
    }
  }
  report.checks.push_back(disjoint);
  report.checks.push_back(duality);

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace twoval
