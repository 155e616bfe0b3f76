#include <doctest.h>

#include <functional>
#include <random>

#include "twoval/error.hpp"
#include "twoval/psi.hpp"

using namespace twoval;

namespace {
const Universe abc = Universe::standard(3);
const Alternative a{0}, b{1};

std::size_t error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST_CASE("profile formats round-trip") {
  const ProfileSpace space(abc, 2);
  for (std::size_t i = 0; i < space.size(); i += 4) {
    const Profile p = space.profile(i);
    CHECK(parse_profile(format_profile(p, abc), abc, 2) == p);
    CHECK(parse_profile_inline(format_profile_inline(p, abc), abc) == p);
  }
  const Profile p = parse_profile_inline("a~b>c, c>a>b", abc);
  CHECK(format_profile(p, abc) == "v0: a~b>c\nv1: c>a>b\n");
  const PartialProfile pi({{2, parse_order("c>a~b", abc)}});
  CHECK(parse_partial(format_partial(pi, abc), abc) == pi);
}

TEST_CASE("profile parse errors") {
  CHECK_THROWS_AS(parse_profile("v0: a>b>c\n", abc, 2), ParseError);
  CHECK_THROWS_AS(parse_profile("v1: a>b>c\nv0: a>b>c\n", abc, 2), ParseError);
  CHECK(error_line([] { parse_profile("v0: a>b>c\nv1: a>b>q\n", abc, 2); }) == 2);
  CHECK_THROWS_AS(parse_profile_inline("a>b>c,, a>b>c", abc), ParseError);
}

TEST_CASE("table format round-trips") {
  const ScfTable dia = examples::dia();
  const std::string text = format_scf(dia);
  CHECK(text.rfind("universe: a b c\nsociety: 2\n", 0) == 0);
  CHECK(text.find("P#0: a~b~c, a~b~c -> a\n") != std::string::npos);
  CHECK(parse_scf(text) == dia);
  const ProfileSpace strict(abc, 2, Domain::strict);
  const ScfTable d = examples::dictatorship(strict, 1, {a, b});
  const std::string st = format_scf(d);
  CHECK(st.find("domain: strict") != std::string::npos);
  CHECK(parse_scf(st) == d);
  CHECK(format_scf(examples::anti_rule()) ==
        "universe: a b\nsociety: 1\nP#0: a~b -> a\nP#1: a>b -> b\nP#2: b>a -> a\n");
}

TEST_CASE("table parse errors carry line numbers") {
  const std::string good = format_scf(examples::anti_rule());
  std::string swapped = good;
  swapped.replace(swapped.find("P#1: a>b"), 8, "P#1: a~b");
  CHECK(error_line([&] { parse_scf(swapped); }) == 4);
  CHECK(error_line([&] { parse_scf(good.substr(0, good.rfind("P#2"))); }) > 0);
  CHECK(error_line([] { parse_scf("universe: a b\nsociety: x\n"); }) == 2);
  CHECK(error_line([] { parse_scf("society: 1\n"); }) == 1);
  std::string bad_value = good;
  bad_value.replace(bad_value.rfind("-> a"), 4, "-> z");
  CHECK(error_line([&] { parse_scf(bad_value); }) == 5);
}

TEST_CASE("spec format round-trips") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const PsiSpec s = random_psi_spec(rng, abc, 1 + k % 3, a, b);
    CHECK(parse_psi(format_psi(s)) == s);
  }
  const PsiSpec one(abc, 1, a, b, b, {ExtendedCommittee(PartialProfile{}, Committee::empty_family(VoterSet::single(0)), a, b, 1)});
  CHECK(format_psi(one) == "universe: a b c\nsociety: 1\npair: a b; default: b;\nentry 0\ncarrier: 0; members:\n");
}

TEST_CASE("spec parse errors") {
  CHECK_THROWS_AS(parse_psi("universe: a b\nsociety: 1\npair: a a; default: a;\nentry 0\ncarrier: 0; members:\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_psi("universe: a b\nsociety: 1\npair: a b; default: a;\n"), ParseError);
  CHECK_THROWS_AS(parse_psi("universe: a b\nsociety: 1\npair: a b; default: a;\nentry 0\ncarrier: 0; members: {1}\n"),
                  ParseError);
}
