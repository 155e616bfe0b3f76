#include "twoval/psi.hpp"

#include <algorithm>

#include "header.hpp"
#include "text.hpp"
#include "twoval/error.hpp"

namespace twoval {

PsiSpec::PsiSpec(Universe universe, std::size_t voters, Alternative a, Alternative b,
                 Alternative x, DoubleCollection entries)
    : universe_(std::move(universe)), voters_(voters), a_(a), b_(b), x_(x),
      entries_(std::move(entries)) {
  if (a_ == b_) throw DomainError("ψ pair must be two distinct alternatives");
  if (!universe_.contains(a_) || !universe_.contains(b_))
    throw DomainError("ψ pair outside universe");
  if (x_ != a_ && x_ != b_) throw DomainError("default must be a or b");
  if (entries_.empty()) throw DomainError("double collection must have at least one entry");
  const VoterSet society = VoterSet::all(voters_);
  for (const auto& e : entries_) {
    if (!is_partial_ab_indifference(e.pi(), a_, b_))
      throw DomainError("entry π is not a partial {a,b}-indifference profile");
    if (e.family().carrier() != society - e.indifferent() || !e.indifferent().subset_of(society))
      throw DomainError("entry committee carrier must complement dom(π)");
    for (const auto& [v, w] : e.pi().prefs())
      if (w.universe_size() != universe_.size()) throw DomainError("entry π over wrong universe");
  }
}

EntryIndex index(const Profile& p, const PsiSpec& spec, EntryProbe* probe) {
  if (probe) probe->visits.resize(spec.entries().size(), 0);
  for (std::size_t k = 0; k < spec.entries().size(); ++k) {
    if (probe) ++probe->visits[k];
    const auto& e = spec.entries()[k];
    if (in_class(p, e, spec.a(), spec.b(), Side::a) || in_class(p, e, spec.a(), spec.b(), Side::b))
      return EntryIndex::at(k);
  }
  return EntryIndex::infinity();
}

Alternative evaluate_psi(const Profile& p, const PsiSpec& spec, EntryProbe* probe) {
  if (p.voters() != spec.voters()) throw DomainError("profile society does not match the spec");
  const EntryIndex k = index(p, spec, probe);
  if (k.is_infinite()) return spec.default_value();
  const auto& e = spec.entries()[k.value()];
  return in_class(p, e, spec.a(), spec.b(), Side::a) ? spec.a() : spec.b();
}

ScfTable psi_to_table(const PsiSpec& spec, Exec exec) {
  const ProfileSpace space(spec.universe(), spec.voters());
  std::vector<Alternative> values(space.size());
  const auto n = static_cast<std::int64_t>(space.size());
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < n; ++i)
      values[static_cast<std::size_t>(i)] = evaluate_psi(space.profile(static_cast<std::size_t>(i)), spec);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
      values[static_cast<std::size_t>(i)] = evaluate_psi(space.profile(static_cast<std::size_t>(i)), spec);
  }
  return ScfTable(space, std::move(values));
}

RangeReport psi_range_report(const PsiSpec& spec) {
  if (spec.entries().size() != 1) throw DomainError("range report needs a single-entry spec");
  const Committee& f = spec.entries().front().family();
  auto sorted = [](std::vector<Alternative> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  if (f.is_power_set()) return {RangeCase::contains_a_and_x, sorted({spec.a(), spec.default_value()})};
  if (f.empty()) return {RangeCase::contains_b_and_x, sorted({spec.b(), spec.default_value()})};
  return {RangeCase::exactly_ab, sorted({spec.a(), spec.b()})};
}

ScfTable strict_committee_scf(const Committee& f, const ProfileSpace& space, Alternative a,
                              Alternative b) {
  if (f.empty()) throw DomainError("committee must be nonempty");
  if (f.is_power_set()) throw DomainError("committee must not contain the empty coalition");
  if (f.carrier() != space.society()) throw DomainError("committee carrier must be the society");
  if (space.domain() != Domain::strict) throw DomainError("committee rule is defined on strict profiles");
  return ScfTable::tabulate(space, [&](const Profile& p) {
    return f.contains(supporters(a, p, b)) ? a : b;
  });
}

std::optional<std::size_t> find_strict_dictator(const ScfTable& f,
                                                const std::vector<Alternative>& among) {
  if (among.size() < 3) throw DomainError("dictator search needs at least three alternatives");
  const auto& space = f.space();
  for (std::size_t d = 0; d < space.voters(); ++d) {
    bool ok = true;
    for (std::size_t i = 0; i < space.size() && ok; ++i) {
      const WeakOrder& w = space.orders()[space.digit(i, d)];
      if (!is_strict(w)) continue;
      ok = top_among(w, among) == f.at(i);
    }
    if (ok) return d;
  }
  return std::nullopt;
}

PsiSpec random_psi_spec(std::mt19937_64& rng, const Universe& universe, std::size_t voters,
                        Alternative a, Alternative b) {
  const VoterSet society = VoterSet::all(voters);
  std::vector<WeakOrder> tied;
  for (const auto& w : enumerate_weak_orders(universe.size()))
    if (w.rank(a) == w.rank(b)) tied.push_back(w);
  const auto subsets = society.subsets();

  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::size_t beta = 1 + pick(4);
  DoubleCollection entries;
  for (std::size_t k = 0; k < beta; ++k) {
    const VoterSet indifferent = subsets[pick(subsets.size())];
    std::map<std::size_t, WeakOrder> pi;
    for (std::size_t v : indifferent.members()) pi.emplace(v, tied[pick(tied.size())]);
    const auto families = enumerate_committees(society - indifferent);
    entries.emplace_back(PartialProfile(std::move(pi)), families[pick(families.size())], a, b,
                         voters);
  }
  const Alternative x = pick(2) == 0 ? a : b;
  return PsiSpec(universe, voters, a, b, x, std::move(entries));
}

std::string format_psi(const PsiSpec& spec) {
  const auto& u = spec.universe();
  std::string out = detail::format_header(ProfileSpace(u, spec.voters()));
  out += "pair: " + u.label(spec.a()) + " " + u.label(spec.b()) + "; default: " +
         u.label(spec.default_value()) + ";\n";
  for (std::size_t k = 0; k < spec.entries().size(); ++k)
    out += "entry " + std::to_string(k) + "\n" + format_extended(spec.entries()[k], u);
  return out;
}

PsiSpec parse_psi(std::string_view textv) {
  const auto lines = text::lines(textv);
  const auto h = detail::parse_header(lines);
  std::size_t k = h.next_line;
  auto skip_blank = [&] {
    while (k < lines.size() && text::blank(lines[k].body)) ++k;
  };
  skip_blank();
  if (k == lines.size()) throw ParseError("expected 'pair:' line", lines.back().number, 1);
  const auto& pl = lines[k++];
  // pair: <a> <b>; default: <x>;
  Alternative a{}, b{}, x{};
  {
    const std::string_view s = pl.body;
    if (!text::starts_with(s, "pair: ")) throw ParseError("expected 'pair: '", pl.number, 1);
    const std::size_t semi = s.find("; default: ");
    if (semi == std::string_view::npos) throw ParseError("expected '; default: '", pl.number, 1);
    const std::string_view pair = s.substr(6, semi - 6);
    const std::size_t space = pair.find(' ');
    if (space == std::string_view::npos) throw ParseError("pair needs two alternatives", pl.number, 7);
    if (s.back() != ';') throw ParseError("missing trailing ';'", pl.number, s.size());
    const std::string_view def = s.substr(semi + 11, s.size() - semi - 12);
    try {
      a = h.universe.find(pair.substr(0, space));
      b = h.universe.find(pair.substr(space + 1));
      x = h.universe.find(def);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), pl.number, 7);
    }
  }
  DoubleCollection entries;
  skip_blank();
  while (k < lines.size()) {
    const auto& el = lines[k++];
    const std::string expect = "entry " + std::to_string(entries.size());
    if (el.body != expect) throw ParseError("expected '" + expect + "'", el.number, 1);
    std::string pi_text;
    const std::size_t first = k < lines.size() ? lines[k].number : el.number + 1;
    while (k < lines.size() && text::starts_with(lines[k].body, "v")) {
      pi_text += std::string(lines[k].body) + "\n";
      ++k;
    }
    const PartialProfile pi = parse_partial(pi_text, h.universe, first);
    if (k == lines.size()) throw ParseError("expected committee line", el.number + 1, 1);
    const auto& cl = lines[k++];
    Committee f = parse_committee(cl.body, cl.number);
    try {
      entries.emplace_back(pi, std::move(f), a, b, h.voters);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), cl.number, 1);
    }
    skip_blank();
  }
  try {
    return PsiSpec(h.universe, h.voters, a, b, x, std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), pl.number, 1);
  }
}

}  // namespace twoval
