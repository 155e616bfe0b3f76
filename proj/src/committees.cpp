#include "twoval/committees.hpp"

#include <algorithm>
#include <charconv>

#include "text.hpp"
#include "twoval/error.hpp"

namespace twoval {

namespace {

std::size_t mask_span(VoterSet carrier) {
  return std::size_t{1} << std::bit_width(carrier.bits());
}

}  // namespace

bool is_superset_closed(const std::vector<VoterSet>& members, VoterSet carrier) {
  std::vector<bool> in(mask_span(carrier), false);
  for (VoterSet m : members) {
    if (!m.subset_of(carrier)) throw DomainError("member " + to_string(m) + " not inside carrier");
    in[m.bits()] = true;
  }
  // Closure under single-voter extension implies closure under supersets.
  for (VoterSet m : members)
    for (std::size_t v : (carrier - m).members())
      if (!in[(m | VoterSet::single(v)).bits()]) return false;
  return true;
}

Committee::Committee(VoterSet carrier, const std::vector<VoterSet>& members)
    : carrier_(carrier), member_(mask_span(carrier), false) {
  if (!is_superset_closed(members, carrier))
    throw DomainError("family is not superset closed on carrier " + to_string(carrier));
  for (VoterSet m : members) {
    if (!member_[m.bits()]) ++count_;
    member_[m.bits()] = true;
  }
}

Committee Committee::power_set(VoterSet carrier) { return Committee(carrier, carrier.subsets()); }

std::vector<VoterSet> Committee::members() const {
  std::vector<VoterSet> out;
  for (VoterSet s : carrier_.subsets())
    if (member_[s.bits()]) out.push_back(s);
  return out;
}

Committee dual(const Committee& f) {
  std::vector<VoterSet> members;
  for (VoterSet e : f.carrier().subsets())
    if (!f.contains(f.carrier() - e)) members.push_back(e);
  return Committee(f.carrier(), members);
}

std::vector<Committee> enumerate_committees(VoterSet carrier, std::size_t bound) {
  if (carrier.size() > bound)
    throw ResourceError("committee enumeration limited to carriers of size " +
                        std::to_string(bound));
  const auto subsets = carrier.subsets();
  std::vector<Committee> out;
  std::vector<VoterSet> chosen;
  // Depth-first over subsets in bitmask order, excluding before including, so
  // each antichain is produced exactly once.
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == subsets.size()) {
      std::vector<VoterSet> members;
      for (VoterSet s : subsets)
        if (std::any_of(chosen.begin(), chosen.end(), [&](VoterSet m) { return m.subset_of(s); }))
          members.push_back(s);
      out.emplace_back(carrier, members);
      return;
    }
    self(self, i + 1);
    const VoterSet s = subsets[i];
    const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](VoterSet m) {
      return m.subset_of(s) || s.subset_of(m);
    });
    if (!comparable) {
      chosen.push_back(s);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ExtendedCommittee::ExtendedCommittee(PartialProfile pi, Committee family, Alternative a,
                                     Alternative b, std::size_t voters)
    : pi_(std::move(pi)), family_(std::move(family)) {
  if (!is_partial_ab_indifference(pi_, a, b))
    throw DomainError("π is not a partial {a,b}-indifference profile");
  if (!pi_.domain().subset_of(VoterSet::all(voters)))
    throw DomainError("π has voters outside the society");
  if (family_.carrier() != VoterSet::all(voters) - pi_.domain())
    throw DomainError("committee carrier must be the complement of dom(π)");
}

bool in_class(const Profile& p, const ExtendedCommittee& ec, Alternative a, Alternative b,
              Side side) {
  if (a == b) throw DomainError("need two distinct alternatives");
  const VoterSet rest = ec.family().carrier();
  for (const auto& [v, w] : ec.pi().prefs()) {
    if (p[v] == w) continue;
    const auto r = restrict_to_pair(p[v], a, b);
    if (r != (side == Side::a ? PairRelation::a_over_b : PairRelation::b_over_a)) return false;
  }
  if (side == Side::a) return ec.family().contains(supporters(a, p, b) & rest);
  // D(b,P)∩I^c ∈ F° ⟺ I^c \ D(b,P) ∉ F.
  return !ec.family().contains(rest - supporters(b, p, a));
}

std::string format_committee(const Committee& f) {
  std::string out = "carrier:";
  for (std::size_t v : f.carrier().members()) out += " " + std::to_string(v);
  out += "; members:";
  bool first = true;
  for (VoterSet m : f.members()) {
    out += first ? " " : ", ";
    first = false;
    out += to_string(m);
  }
  return out;
}

Committee parse_committee(std::string_view s, std::size_t line) {
  auto fail = [&](const std::string& msg, std::size_t at) -> void {
    throw ParseError(msg, line, at + 1);
  };
  auto read_ids = [&](std::string_view body, std::size_t offset) {
    VoterSet out;
    std::size_t pos = 0;
    while (pos < body.size()) {
      if (body[pos] == ' ') {
        ++pos;
        continue;
      }
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), v);
      if (ec != std::errc()) fail("expected a voter id", offset + pos);
      if (v >= kMaxVoters) fail("voter id out of range", offset + pos);
      if (out.contains(v)) fail("voter listed twice", offset + pos);
      out.insert(v);
      pos = static_cast<std::size_t>(ptr - body.data());
    }
    return out;
  };
  if (!text::starts_with(s, "carrier:")) fail("expected 'carrier:'", 0);
  const std::size_t semi = s.find("; members:");
  if (semi == std::string_view::npos) fail("expected '; members:'", s.size());
  const VoterSet carrier = read_ids(s.substr(8, semi - 8), 8);
  std::vector<VoterSet> members;
  std::size_t pos = semi + 10;
  while (pos < s.size()) {
    if (s[pos] == ' ' || s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] != '{') fail("expected '{'", pos);
    const std::size_t close = s.find('}', pos);
    if (close == std::string_view::npos) fail("unterminated member", pos);
    members.push_back(read_ids(s.substr(pos + 1, close - pos - 1), pos + 1));
    pos = close + 1;
  }
  try {
    Committee f(carrier, members);
    if (f.size() != members.size()) fail("duplicate member", semi);
    return f;
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line, 1);
  }
}

std::string format_extended(const ExtendedCommittee& ec, const Universe& universe) {
  return format_partial(ec.pi(), universe) + format_committee(ec.family()) + "\n";
}

}  // namespace twoval
