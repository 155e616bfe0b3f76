#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "twoval/committees.hpp"
#include "twoval/error.hpp"

using namespace twoval;

namespace {
const VoterSet v0 = VoterSet::single(0), v1 = VoterSet::single(1), v01 = VoterSet::all(2);
const Alternative a{0}, b{1};

std::vector<std::uint32_t> bits(const Committee& f) {
  std::vector<std::uint32_t> out;
  for (auto m : f.members()) out.push_back(m.bits());
  return out;
}
}  // namespace

TEST_CASE("superset closure") {
  CHECK(is_superset_closed({}, v01));
  CHECK(is_superset_closed({v0, v01}, v01));
  CHECK_FALSE(is_superset_closed({v0}, v01));
  CHECK_THROWS_AS(is_superset_closed({VoterSet::single(3)}, v01), DomainError);
  CHECK_THROWS_AS(Committee(v01, {v0}), DomainError);
}

TEST_CASE("duality") {
  CHECK(dual(Committee::empty_family(v01)) == Committee::power_set(v01));
  CHECK(dual(Committee::power_set(v01)) == Committee::empty_family(v01));
  CHECK(dual(Committee(v01, {v01})) == Committee(v01, {v0, v1, v01}));
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& f : enumerate_committees(VoterSet::all(n))) CHECK(dual(dual(f)) == f);
}

TEST_CASE("committee enumeration") {
  CHECK(enumerate_committees(VoterSet{}).size() == 2);
  const auto one = enumerate_committees(v0);
  CHECK(one.size() == 3);
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& f : one) seen.insert(bits(f));
  CHECK(seen == std::set<std::vector<std::uint32_t>>{{}, {1}, {0, 1}});

  std::set<std::vector<std::uint32_t>> nonempty_no_empty;
  for (const auto& f : enumerate_committees(v01))
    if (!f.empty() && !f.is_power_set()) nonempty_no_empty.insert(bits(f));
  CHECK(nonempty_no_empty == std::set<std::vector<std::uint32_t>>{{3}, {1, 3}, {2, 3}, {1, 2, 3}});

  const std::size_t dedekind[] = {2, 3, 6, 20, 168};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(enumerate_committees(VoterSet::all(n)).size() == dedekind[n]);
  CHECK(enumerate_committees(VoterSet::all(5), 5).size() == 7581);
  CHECK_THROWS_AS(enumerate_committees(VoterSet::all(5)), ResourceError);
}

TEST_CASE("enumeration matches brute-force filtering") {
  for (VoterSet carrier : {VoterSet{}, v1, v01, VoterSet::all(3), VoterSet::single(1) | VoterSet::single(3)}) {
    std::set<std::vector<std::uint32_t>> fast;
    for (const auto& f : enumerate_committees(carrier)) fast.insert(bits(f));
    CHECK(fast == oracle::sscf_brute(carrier));
    CHECK(fast.size() == enumerate_committees(carrier).size());
  }
}

TEST_CASE("extended committee validation") {
  const Universe abc = Universe::standard(3);
  const PartialProfile pi({{0, parse_order("a~b>c", abc)}});
  CHECK_NOTHROW(ExtendedCommittee(pi, Committee(v1, {v1}), a, b, 2));
  CHECK_THROWS_AS(ExtendedCommittee(pi, Committee(v01, {v01}), a, b, 2), DomainError);
  CHECK_THROWS_AS(ExtendedCommittee(PartialProfile({{0, parse_order("a>b~c", abc)}}), Committee(v1, {v1}), a, b, 2),
                  DomainError);
}

TEST_CASE("class membership") {
  const Universe abc = Universe::standard(3);
  const PartialProfile pi0({{0, parse_order("a~b>c", abc)}});
  const ExtendedCommittee e0(pi0, Committee(v1, {v1}), a, b, 2);
  const ProfileSpace space(abc, 2);
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Profile p = space.profile(i);
    const bool expected = prefers(p[1], a, b) && (p[0] == pi0.at(0) || prefers(p[0], a, b));
    CHECK(in_class(p, e0, a, b, Side::a) == expected);
  }
  const PartialProfile pi1({{0, parse_order("c>a~b", abc)}});
  const ExtendedCommittee e1(pi1, Committee::empty_family(v1), a, b, 2);
  for (std::size_t i = 0; i < space.size(); ++i) CHECK_FALSE(in_class(space.profile(i), e1, a, b, Side::a));
  const auto f = Committee(v01, {v0, v01});
  const ExtendedCommittee e2(PartialProfile{}, f, a, b, 2);
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Profile p = space.profile(i);
    CHECK(in_class(p, e2, a, b, Side::a) == f.contains(supporters(a, p, b)));
  }
}

TEST_CASE("empty family and power set give empty classes") {
  const Universe ab = Universe::standard(2);
  for (std::size_t n = 1; n <= 3; ++n) {
    const ProfileSpace space(ab, n);
    const VoterSet all = space.society();
    for (VoterSet ind : all.subsets()) {
      std::map<std::size_t, WeakOrder> pi;
      for (auto v : ind.members()) pi.emplace(v, parse_order("a~b", ab));
      const ExtendedCommittee none(PartialProfile(pi), Committee::empty_family(all - ind), a, b, n);
      const ExtendedCommittee full(PartialProfile(pi), Committee::power_set(all - ind), a, b, n);
      for (std::size_t i = 0; i < space.size(); ++i) {
        CHECK_FALSE(in_class(space.profile(i), none, a, b, Side::a));
        CHECK_FALSE(in_class(space.profile(i), full, a, b, Side::b));
      }
    }
  }
}

TEST_CASE("two-alternative membership matches the specialized oracle") {
  const Universe ab = Universe::standard(2);
  for (std::size_t n = 1; n <= 3; ++n) {
    const ProfileSpace space(ab, n);
    const VoterSet all = space.society();
    for (VoterSet ind : all.subsets()) {
      std::map<std::size_t, WeakOrder> pi;
      for (auto v : ind.members()) pi.emplace(v, parse_order("a~b", ab));
      for (const auto& fam : enumerate_committees(all - ind)) {
        const ExtendedCommittee ec(PartialProfile(pi), fam, a, b, n);
        for (std::size_t i = 0; i < space.size(); ++i)
          for (Side s : {Side::a, Side::b}) {
            const Profile p = space.profile(i);
            CHECK(in_class(p, ec, a, b, s) == oracle::in_class_two(p, ec, a, b, s));
          }
      }
    }
  }
}

TEST_CASE("committee text round-trips") {
  const Committee f(v01, {v0, v01});
  CHECK(format_committee(f) == "carrier: 0 1; members: {0}, {0 1}");
  CHECK(parse_committee("carrier: 0 1; members: {0 1}, {0}") == f);
  CHECK(format_committee(Committee::empty_family(v01)) == "carrier: 0 1; members:");
  CHECK(parse_committee("carrier:; members: {}") == Committee::power_set(VoterSet{}));
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& g : enumerate_committees(VoterSet::all(n))) CHECK(parse_committee(format_committee(g)) == g);
  CHECK_THROWS_AS(parse_committee("carrier: 0 1; members: {0}"), ParseError);
  CHECK_THROWS_AS(parse_committee("carrier: 0 1 members: {0}"), ParseError);
  CHECK_THROWS_AS(parse_committee("carrier: 0 1; members: {0 x}"), ParseError);
}
