#include <doctest.h>

#include "twoval/error.hpp"
#include "twoval/verify.hpp"

using namespace twoval;

namespace {
std::size_t count_of(const RunReport& r, const std::string& key) {
  for (const auto& [k, v] : r.counts)
    if (k == key) return v;
  return 0;
}
}  // namespace

TEST_CASE("one voter, two alternatives: exactly two CSP onto functions") {
  const RunReport r = verify_theorems(1, 2, 0);
  CHECK(r.failures() == 0);
  CHECK(count_of(r, "csp_found") == 2);
  CHECK(count_of(r, "tables_scanned") == 6);
}

TEST_CASE("two voters, two alternatives: exhaustive run passes") {
  const RunReport r = verify_theorems(2, 2, 0);
  CHECK(r.failures() == 0);
  CHECK(count_of(r, "tables_scanned") == 510);
  CHECK(count_of(r, "strict_committee_rules") == 4);
  for (const auto& c : r.checks)
    if (!c.skipped) CHECK_MESSAGE(c.checked > 0, c.name);
}

TEST_CASE("reports are deterministic given the seed") {
  const RunReport x = verify_theorems(2, 2, 9, Exec::serial), y = verify_theorems(2, 2, 9, Exec::parallel);
  CHECK(x.counts == y.counts);
  REQUIRE(x.checks.size() == y.checks.size());
  for (std::size_t i = 0; i < x.checks.size(); ++i) CHECK(x.checks[i].checked == y.checks[i].checked);
}

TEST_CASE("scale bounds") {
  CHECK_THROWS_AS(verify_theorems(4, 2, 0), ResourceError);
  CHECK_THROWS_AS(verify_theorems(2, 4, 0), ResourceError);
  CHECK_THROWS_AS(verify_theorems(0, 2, 0), DomainError);
}
