#include "twoval/scf.hpp"

#include <algorithm>
#include <charconv>

#include "parallel.hpp"
#include "header.hpp"
#include "text.hpp"
#include "twoval/error.hpp"

namespace twoval {

ScfTable::ScfTable(ProfileSpace space, std::vector<Alternative> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size())
    throw DomainError("table size " + std::to_string(values_.size()) + " does not match " +
                      std::to_string(space_.size()) + " profiles");
  for (Alternative x : values_)
    if (!space_.universe().contains(x)) throw DomainError("table value outside universe");
}

std::vector<Alternative> range(const ScfTable& f) {
  std::vector<bool> seen(f.space().universe().size(), false);
  for (Alternative x : f.values()) seen[x.id] = true;
  std::vector<Alternative> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(Alternative{static_cast<std::uint8_t>(i)});
  return out;
}

bool has_range(const ScfTable& f, Alternative a, Alternative b) {
  auto r = range(f);
  return r.size() == 2 && std::find(r.begin(), r.end(), a) != r.end() &&
         std::find(r.begin(), r.end(), b) != r.end();
}

namespace {

std::optional<std::size_t> search_reports(const ScfTable& f, const std::vector<Alternative>& rng,
                                          std::size_t i, VoterSet coalition) {
  const auto& space = f.space();
  const auto& orders = space.orders();
  const Alternative current = f.at(i);
  const auto members = coalition.members();

  // Values every member strictly prefers to the current outcome.
  std::vector<bool> target(space.universe().size(), false);
  bool any = false;
  for (Alternative y : rng) {
    if (y == current) continue;
    const bool all = std::all_of(members.begin(), members.end(), [&](std::size_t v) {
      return prefers(orders[space.digit(i, v)], y, current);
    });
    target[y.id] = all;
    any = any || all;
  }
  if (!any) return std::nullopt;

  // Odometer over the members' reports; the highest voter id is the least
  // significant digit, so reports come out in increasing profile index.
  std::size_t q = i;
  for (std::size_t v : members) q = space.with_digit(q, v, 0);
  std::vector<std::size_t> digit(members.size(), 0);
  const std::size_t k = orders.size();
  while (true) {
    if (target[f.at(q).id]) return q;
    std::size_t pos = members.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < k) {
        q = space.with_digit(q, members[pos], digit[pos]);
        break;
      }
      digit[pos] = 0;
      q = space.with_digit(q, members[pos], 0);
      if (pos == 0) return std::nullopt;
    }
  }
}

std::vector<VoterSet> coalitions_by_size(std::size_t voters, bool singletons_only) {
  std::vector<VoterSet> out;
  for (VoterSet s : VoterSet::all(voters).subsets())
    if (!s.empty() && (!singletons_only || s.size() == 1)) out.push_back(s);
  std::stable_sort(out.begin(), out.end(),
                   [](VoterSet x, VoterSet y) { return x.size() < y.size(); });
  return out;
}

std::optional<Manipulation> manipulation_scan(const ScfTable& f, Exec exec, bool singletons) {
  const auto rng = range(f);
  const auto coalitions = coalitions_by_size(f.space().voters(), singletons);
  auto at_profile = [&](std::size_t i) -> std::optional<Manipulation> {
    for (VoterSet d : coalitions)
      if (auto q = search_reports(f, rng, i, d)) return Manipulation{i, *q, d};
    return std::nullopt;
  };
  auto first = detail::first_index(f.space().size(), exec,
                                   [&](std::size_t i) { return at_profile(i).has_value(); });
  if (!first) return std::nullopt;
  return at_profile(*first);
}

}  // namespace

std::optional<std::size_t> coalition_manipulates(const ScfTable& f, std::size_t profile,
                                                 VoterSet coalition) {
  if (coalition.empty()) throw DomainError("a coalition must be nonempty");
  if (!coalition.subset_of(f.space().society()))
    throw DomainError("coalition has voters outside the society");
  if (profile >= f.space().size()) throw DomainError("profile index out of range");
  return search_reports(f, range(f), profile, coalition);
}

std::optional<Profile> coalition_manipulates(const ScfTable& f, const Profile& p,
                                             VoterSet coalition) {
  auto q = coalition_manipulates(f, f.space().index_of(p), coalition);
  if (!q) return std::nullopt;
  return f.space().profile(*q);
}

std::optional<Manipulation> find_manipulation(const ScfTable& f, Exec exec) {
  return manipulation_scan(f, exec, false);
}

std::optional<Manipulation> find_individual_manipulation(const ScfTable& f, Exec exec) {
  return manipulation_scan(f, exec, true);
}

std::optional<ParetoViolation> find_pareto_violation(const ScfTable& f, Exec exec) {
  const auto rng = range(f);
  const auto& space = f.space();
  auto violation = [&](std::size_t i) -> std::optional<Alternative> {
    const Alternative current = f.at(i);
    for (Alternative y : rng) {
      if (y == current) continue;
      bool all = true;
      for (std::size_t v = 0; v < space.voters() && all; ++v)
        all = prefers(space.orders()[space.digit(i, v)], y, current);
      if (all) return y;
    }
    return std::nullopt;
  };
  auto first = detail::first_index(space.size(), exec,
                                   [&](std::size_t i) { return violation(i).has_value(); });
  if (!first) return std::nullopt;
  return ParetoViolation{*first, *violation(*first)};
}

bool b_condition(const Profile& p, const Profile& q, Alternative a, Alternative b,
                 BCondition which) {
  if (a == b) throw DomainError("need two distinct alternatives");
  if (which == BCondition::B2) return b_condition(q, p, a, b, BCondition::B1);
  const VoterSet both = indifference_set(p, a, b) & indifference_set(q, a, b);
  for (std::size_t v : both.members())
    if (p[v] != q[v]) return false;
  return supporters(a, p, b).subset_of(supporters(a, q, b)) &&
         supporters(b, q, a).subset_of(supporters(b, p, a));
}

namespace {

bool b1_masks(const PairMasks& m, const ProfileSpace& space, std::size_t p, std::size_t q) {
  return (m.indiff[p] & m.indiff[q]).subset_of(space.equal_voters(p, q)) &&
         m.prefer_a[p].subset_of(m.prefer_a[q]) && m.prefer_b[q].subset_of(m.prefer_b[p]);
}

std::optional<PairWitness> pair_scan(const ScfTable& f, Exec exec,
                                     const std::function<bool(std::size_t, std::size_t)>& bad) {
  const std::size_t n = f.space().size();
  auto row = [&](std::size_t i) -> std::optional<std::size_t> {
    for (std::size_t j = 0; j < n; ++j)
      if (bad(i, j)) return j;
    return std::nullopt;
  };
  auto first = detail::first_index(n, exec, [&](std::size_t i) { return row(i).has_value(); });
  if (!first) return std::nullopt;
  return PairWitness{*first, *row(*first)};
}

}  // namespace

std::optional<PairWitness> find_monotonicity_violation(const ScfTable& f, Alternative a,
                                                       Alternative b, BCondition which,
                                                       Exec exec) {
  const auto& space = f.space();
  const auto masks = make_pair_masks(space, a, b);
  const Alternative keep = which == BCondition::B1 ? a : b;
  return pair_scan(f, exec, [&](std::size_t p, std::size_t q) {
    if (f.at(p) != keep || f.at(q) == keep) return false;
    return which == BCondition::B1 ? b1_masks(masks, space, p, q) : b1_masks(masks, space, q, p);
  });
}

std::optional<PairWitness> find_bbm_violation(const ScfTable& f, Alternative a, Alternative b,
                                              Exec exec) {
  if (!has_range(f, a, b)) throw DomainError("essential ab-conditions need range {a,b}");
  const auto& space = f.space();
  const auto masks = make_pair_masks(space, a, b);
  return pair_scan(f, exec, [&](std::size_t p, std::size_t q) {
    if (f.at(p) == f.at(q)) return false;
    return f.at(p) == a ? b1_masks(masks, space, p, q) : b1_masks(masks, space, q, p);
  });
}

std::vector<ScfTable> individually_sp_tables(const ProfileSpace& space,
                                             const std::vector<Alternative>& values) {
  const auto& orders = space.orders();
  std::vector<Alternative> assigned(space.size());
  std::vector<ScfTable> out;

  auto consistent = [&](std::size_t i) {
    const Alternative fi = assigned[i];
    for (std::size_t v = 0; v < space.voters(); ++v) {
      const std::size_t own = space.digit(i, v);
      for (std::size_t o = 0; o < own; ++o) {
        const std::size_t j = space.with_digit(i, v, o);
        const Alternative fj = assigned[j];
        if (prefers(orders[own], fj, fi) || prefers(orders[o], fi, fj)) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == space.size()) {
      out.emplace_back(space, assigned);
      return;
    }
    for (Alternative x : values) {
      assigned[i] = x;
      if (consistent(i)) self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace examples {

ScfTable dia() {
  const ProfileSpace space(Universe::standard(3), 2);
  const Alternative a{0}, b{1}, c{2};
  return ScfTable::tabulate(space, [&](const Profile& p) {
    const WeakOrder& w1 = p[0];
    const WeakOrder& w2 = p[1];
    const bool ab_tied = w1.rank(a) == w1.rank(b);
    if (prefers(w1, b, a)) return b;
    if (ab_tied && prefers(w1, c, a)) return b;
    if (ab_tied && prefers(w1, b, c) && prefers(w2, b, a)) return b;
    return a;
  });
}

ScfTable anti_rule() {
  const ProfileSpace space(Universe::standard(2), 1);
  const Alternative a{0}, b{1};
  return ScfTable::tabulate(space, [&](const Profile& p) { return prefers(p[0], a, b) ? b : a; });
}

ScfTable dictatorship(const ProfileSpace& space, std::size_t d, std::vector<Alternative> among) {
  if (d >= space.voters()) throw DomainError("dictator outside the society");
  return ScfTable::tabulate(space, [&](const Profile& p) { return top_among(p[d], among); });
}

}  // namespace examples

std::string format_scf(const ScfTable& f) {
  const auto& space = f.space();
  const auto& u = space.universe();
  std::string out = detail::format_header(space);
  for (std::size_t i = 0; i < space.size(); ++i)
    out += "P#" + std::to_string(i) + ": " + format_profile_inline(space.profile(i), u) + " -> " +
           u.label(f.at(i)) + "\n";
  return out;
}

ScfTable parse_scf(std::string_view textv) {
  const auto lines = text::lines(textv);
  const auto h = detail::parse_header(lines);
  const ProfileSpace space(h.universe, h.voters, h.domain);
  std::vector<Alternative> values;
  for (std::size_t k = h.next_line; k < lines.size(); ++k) {
    const auto& [n, body] = lines[k];
    if (text::blank(body)) continue;
    const std::string expect = "P#" + std::to_string(values.size()) + ": ";
    if (!text::starts_with(body, expect)) throw ParseError("expected '" + expect + "'", n, 1);
    const std::size_t arrow = body.rfind(" -> ");
    if (arrow == std::string_view::npos || arrow < expect.size())
      throw ParseError("expected ' -> <alternative>'", n, body.size() + 1);
    const Profile p = parse_profile_inline(body.substr(expect.size(), arrow - expect.size()),
                                           h.universe, n, expect.size() + 1);
    if (values.size() >= space.size()) throw ParseError("more rows than profiles", n, 1);
    if (!space.contains(p) || space.index_of(p) != values.size())
      throw ParseError("profile out of canonical enumeration order", n, expect.size() + 1);
    try {
      values.push_back(h.universe.find(body.substr(arrow + 4)));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), n, arrow + 5);
    }
  }
  if (values.size() != space.size())
    throw ParseError("expected " + std::to_string(space.size()) + " rows, found " +
                         std::to_string(values.size()),
                     lines.empty() ? 1 : lines.back().number, 1);
  return ScfTable(space, std::move(values));
}

}  // namespace twoval
