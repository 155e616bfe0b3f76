#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twoval/dominance.hpp"
#include "twoval/error.hpp"
#include "twoval/psi.hpp"

using namespace twoval;

namespace {
const Universe ab = Universe::standard(2);
const Universe abc = Universe::standard(3);
const Alternative a{0}, b{1}, c{2};
const VoterSet v0 = VoterSet::single(0), v1 = VoterSet::single(1), v01 = VoterSet::all(2);

PsiSpec dia_spec() {
  const PartialProfile pi0({{0, parse_order("a~b>c", abc)}});
  const PartialProfile pi1({{0, parse_order("c>a~b", abc)}});
  return PsiSpec(abc, 2, a, b, a,
                 {ExtendedCommittee(pi0, Committee(v1, {v1}), a, b, 2),
                  ExtendedCommittee(pi1, Committee::empty_family(v1), a, b, 2)});
}

Profile pr(const char* s) { return parse_profile_inline(s, abc); }
}  // namespace

TEST_CASE("DIA spec: index and value") {
  const PsiSpec s = dia_spec();
  CHECK(index(pr("a~b>c, a>b>c"), s) == EntryIndex::at(0));
  CHECK(index(pr("c>a~b, a~b>c"), s) == EntryIndex::at(1));
  CHECK(index(pr("a~b~c, a~b~c"), s).is_infinite());
  CHECK(evaluate_psi(pr("a~b>c, a~b>c"), s) == a);
  CHECK(evaluate_psi(pr("c>a~b, c>a~b"), s) == b);
  CHECK(evaluate_psi(pr("c>a~b, a>b>c"), s) == b);
  CHECK(psi_to_table(s) == examples::dia());
}

TEST_CASE("evaluation stops at the index") {
  const PsiSpec s = dia_spec();
  const ProfileSpace space(abc, 2);
  for (std::size_t i = 0; i < space.size(); ++i) {
    EntryProbe probe;
    const Profile p = space.profile(i);
    const EntryIndex k = index(p, s, &probe);
    const std::size_t last = k.is_infinite() ? s.entries().size() - 1 : k.value();
    for (std::size_t j = 0; j < probe.visits.size(); ++j) CHECK(probe.visits[j] == (j <= last ? 1u : 0u));
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(PsiSpec(abc, 2, a, a, a, dia_spec().entries()), DomainError);
  CHECK_THROWS_AS(PsiSpec(abc, 2, a, b, c, dia_spec().entries()), DomainError);
  CHECK_THROWS_AS(PsiSpec(abc, 2, a, b, a, {}), DomainError);
  CHECK_THROWS_AS(PsiSpec(abc, 3, a, b, a, dia_spec().entries()), DomainError);
}

TEST_CASE("range report") {
  const ProfileSpace one(ab, 1);
  const PsiSpec full(ab, 1, a, b, a, {ExtendedCommittee(PartialProfile{}, Committee::power_set(v0), a, b, 1)});
  CHECK(psi_range_report(full).kind == RangeCase::contains_a_and_x);
  CHECK(range(psi_to_table(full)) == std::vector<Alternative>{a});
  const PsiSpec none(ab, 1, a, b, b, {ExtendedCommittee(PartialProfile{}, Committee::empty_family(v0), a, b, 1)});
  CHECK(psi_range_report(none).kind == RangeCase::contains_b_and_x);
  CHECK(range(psi_to_table(none)) == std::vector<Alternative>{b});
  const PsiSpec two(abc, 2, a, b, a, {ExtendedCommittee(PartialProfile{}, Committee(v01, {v0, v01}), a, b, 2)});
  const auto r = psi_range_report(two);
  CHECK(r.kind == RangeCase::exactly_ab);
  const ScfTable t = psi_to_table(two);
  CHECK(t(pr("a>b>c, a>b>c")) == a);
  CHECK(t(pr("b>a>c, b>a>c")) == b);
  CHECK(range(t) == r.guaranteed);
  CHECK_THROWS_AS(psi_range_report(dia_spec()), DomainError);
}

TEST_CASE("random specs are CSP and two-sided first committees give range {a,b}") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t m = 2; m <= 3; ++m)
      for (int k = 0; k < 40; ++k) {
        const PsiSpec s = random_psi_spec(rng, Universe::standard(m), n, a, b);
        const ScfTable f = psi_to_table(s);
        CHECK(is_csp(f));
        const Committee& f0 = s.entries().front().family();
        if (!f0.empty() && !dual(f0).empty()) CHECK(has_range(f, a, b));
      }
}

TEST_CASE("two-alternative evaluation matches the specialized class oracle") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 3; ++n) {
    const ProfileSpace space(ab, n);
    for (int k = 0; k < 30; ++k) {
      const PsiSpec s = random_psi_spec(rng, ab, n, a, b);
      for (std::size_t i = 0; i < space.size(); ++i) {
        const Profile p = space.profile(i);
        Alternative expected = s.default_value();
        for (const auto& e : s.entries()) {
          if (oracle::in_class_two(p, e, a, b, Side::a)) { expected = a; break; }
          if (oracle::in_class_two(p, e, a, b, Side::b)) { expected = b; break; }
        }
        CHECK(evaluate_psi(p, s) == expected);
      }
    }
  }
}

TEST_CASE("strict committee rules") {
  const ProfileSpace strict(ab, 2, Domain::strict);
  const ScfTable dict = strict_committee_scf(Committee(v01, {v0, v01}), strict, a, b);
  CHECK(dict(parse_profile_inline("a>b, b>a", ab)) == a);
  const ScfTable unanimity = strict_committee_scf(Committee(v01, {v01}), strict, a, b);
  CHECK(unanimity(parse_profile_inline("a>b, b>a", ab)) == b);
  std::set<std::vector<Alternative>> distinct;
  for (const auto& f : enumerate_committees(v01)) {
    if (f.empty() || f.is_power_set()) continue;
    const ScfTable t = strict_committee_scf(f, strict, a, b);
    CHECK(is_csp(t));
    distinct.insert(t.values());
  }
  CHECK(distinct.size() == 4);
  CHECK_THROWS_AS(strict_committee_scf(Committee::empty_family(v01), strict, a, b), DomainError);
  CHECK_THROWS_AS(strict_committee_scf(Committee::power_set(v01), strict, a, b), DomainError);
}

TEST_CASE("strict dictator search") {
  const ProfileSpace strict(abc, 2, Domain::strict);
  const std::vector<Alternative> all{a, b, c};
  CHECK(find_strict_dictator(examples::dictatorship(strict, 0, all), all) == 0u);
  CHECK(find_strict_dictator(examples::dictatorship(strict, 1, all), all) == 1u);
  // Borda count with ties broken towards the lower id.
  const ScfTable majority = ScfTable::tabulate(strict, [&](const Profile& p) {
    Alternative best = a;
    int best_score = -1;
    for (Alternative x : all) {
      int score = 0;
      for (std::size_t v = 0; v < 2; ++v)
        for (Alternative y : all) score += prefers(p[v], x, y);
      if (score > best_score) best = x, best_score = score;
    }
    return best;
  });
  CHECK_FALSE(is_csp(majority));
  CHECK_FALSE(find_strict_dictator(majority, all));
}
