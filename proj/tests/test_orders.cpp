#include <doctest.h>

#include "oracles.hpp"
#include "twoval/error.hpp"
#include "twoval/orders.hpp"

using namespace twoval;

namespace {
const Universe abc = Universe::standard(3);
WeakOrder w(const char* s) { return parse_order(s, abc); }
const Alternative a{0}, b{1}, c{2};
}  // namespace

TEST_CASE("weak order counts match ordered Bell numbers") {
  CHECK(enumerate_weak_orders(1).size() == 1);
  CHECK(enumerate_weak_orders(2).size() == 3);
  CHECK(enumerate_weak_orders(3).size() == 13);
  for (unsigned n = 1; n <= 4; ++n) CHECK(enumerate_weak_orders(n).size() == oracle::ordered_bell(n));
  CHECK(enumerate_strict_orders(3).size() == 6);
}

TEST_CASE("enumeration is sorted and duplicate free") {
  const auto all = enumerate_weak_orders(4);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
}

TEST_CASE("compare") {
  CHECK(compare(w("a~b>c"), a, b) == Comparison::indifferent);
  CHECK(compare(w("a~b>c"), a, c) == Comparison::x_preferred);
  CHECK(compare(w("c>a~b"), b, c) == Comparison::y_preferred);
  for (const auto& o : enumerate_weak_orders(3))
    for (auto x : abc.alternatives())
      for (auto y : abc.alternatives()) {
        const auto xy = compare(o, x, y), yx = compare(o, y, x);
        if (xy == Comparison::indifferent) CHECK(yx == Comparison::indifferent);
        else CHECK(xy != yx);
      }
}

TEST_CASE("restrict_to_pair") {
  CHECK(restrict_to_pair(w("c>a~b"), a, b) == PairRelation::indifferent);
  CHECK(restrict_to_pair(w("a>b>c"), a, b) == PairRelation::a_over_b);
  CHECK(restrict_to_pair(w("b>c>a"), a, b) == PairRelation::b_over_a);
  for (const auto& o : enumerate_weak_orders(3)) {
    const auto c1 = compare(o, a, b);
    const auto r = restrict_to_pair(o, a, b);
    CHECK((c1 == Comparison::x_preferred) == (r == PairRelation::a_over_b));
    CHECK((c1 == Comparison::indifferent) == (r == PairRelation::indifferent));
  }
}

TEST_CASE("is_strict") {
  CHECK(is_strict(w("a>b>c")));
  CHECK_FALSE(is_strict(w("a~b>c")));
  CHECK(is_strict(enumerate_weak_orders(1).front()));
}

TEST_CASE("canonical_strict_pair") {
  auto [s1, s2] = canonical_strict_pair(a, b, abc);
  CHECK(format_order(s1, abc) == "a>b>c");
  CHECK(format_order(s2, abc) == "b>a>c");
  const Universe ab = Universe::standard(2);
  auto [t1, t2] = canonical_strict_pair(a, b, ab);
  CHECK(format_order(t1, ab) == "a>b");
  CHECK(format_order(t2, ab) == "b>a");
  const Universe abcd = Universe::standard(4);
  CHECK(format_order(canonical_strict_pair(a, b, abcd).first, abcd) == "a>b>c>d");
  CHECK_THROWS_AS(canonical_strict_pair(a, a, abc), DomainError);
}

TEST_CASE("order text round-trips") {
  for (const auto& o : enumerate_weak_orders(3)) CHECK(parse_order(format_order(o, abc), abc) == o);
  CHECK_THROWS_AS(w("b~a>c"), ParseError);
}

TEST_CASE("order parse errors carry positions") {
  CHECK_THROWS_AS(w("a>b"), ParseError);
  CHECK_THROWS_AS(w("a>b>d"), ParseError);
  CHECK_THROWS_AS(w("a>b>a"), ParseError);
  CHECK_THROWS_AS(w("a>>b>c"), ParseError);
  try {
    parse_order("a>b>z", abc, 4, 7);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("universe validation") {
  CHECK_THROWS_AS(Universe({"a", "a"}), DomainError);
  CHECK_THROWS_AS(Universe({"a>"}), DomainError);
  CHECK_THROWS_AS(Universe::standard(kMaxAlternatives + 1), ResourceError);
  CHECK(abc.find("c") == c);
  CHECK_THROWS_AS(abc.find("q"), DomainError);
}

TEST_CASE("top_among") {
  CHECK(top_among(w("c>a~b"), {a, b}) == a);
  CHECK(top_among(w("c>b>a"), {a, b}) == b);
  CHECK(top_among(w("c>b>a"), {a, b, c}) == c);
}
