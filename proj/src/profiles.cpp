#include "twoval/profiles.hpp"

#include <algorithm>
#include <charconv>

#include "text.hpp"
#include "twoval/error.hpp"

namespace twoval {

Profile::Profile(std::vector<WeakOrder> prefs) : prefs_(std::move(prefs)) {
  if (prefs_.size() > kMaxVoters) throw ResourceError("too many voters");
  for (const auto& w : prefs_)
    if (w.universe_size() != prefs_.front().universe_size())
      throw DomainError("profile orders range over different universes");
}

PartialProfile::PartialProfile(std::map<std::size_t, WeakOrder> prefs) : prefs_(std::move(prefs)) {
  for (const auto& [v, w] : prefs_) {
    if (v >= kMaxVoters) throw DomainError("voter id out of range");
    if (w.universe_size() != prefs_.begin()->second.universe_size())
      throw DomainError("partial profile orders range over different universes");
  }
}

VoterSet PartialProfile::domain() const {
  VoterSet s;
  for (const auto& [v, w] : prefs_) s.insert(v);
  return s;
}

const WeakOrder& PartialProfile::at(std::size_t v) const {
  auto it = prefs_.find(v);
  if (it == prefs_.end()) throw DomainError("voter outside partial profile domain");
  return it->second;
}

PartialProfile restrict_profile(const Profile& p, VoterSet voters) {
  std::map<std::size_t, WeakOrder> m;
  for (std::size_t v : voters.members()) m.emplace(v, p[v]);
  return PartialProfile(std::move(m));
}

VoterSet indifference_set(const Profile& p, Alternative a, Alternative b) {
  if (a == b) throw DomainError("indifference_set needs two distinct alternatives");
  VoterSet s;
  for (std::size_t v = 0; v < p.voters(); ++v)
    if (p[v].rank(a) == p[v].rank(b)) s.insert(v);
  return s;
}

VoterSet supporters(Alternative x, const Profile& p, Alternative other) {
  if (x == other) throw DomainError("supporters needs two distinct alternatives");
  VoterSet s;
  for (std::size_t v = 0; v < p.voters(); ++v)
    if (prefers(p[v], x, other)) s.insert(v);
  return s;
}

VoterSet equivalence_set(const Profile& p, const Profile& q, Alternative a, Alternative b) {
  if (a == b) throw DomainError("equivalence_set needs two distinct alternatives");
  if (p.voters() != q.voters()) throw DomainError("profiles over different societies");
  if (p.voters() > 0 && p[0].universe_size() != q[0].universe_size())
    throw DomainError("profiles over different universes");
  VoterSet s;
  for (std::size_t v = 0; v < p.voters(); ++v) {
    const auto rp = restrict_to_pair(p[v], a, b);
    const auto rq = restrict_to_pair(q[v], a, b);
    if (p[v] == q[v] || (rp == rq && rp != PairRelation::indifferent)) s.insert(v);
  }
  return s;
}

Profile compose(const std::vector<PartialProfile>& parts, std::size_t voters) {
  std::vector<const WeakOrder*> slot(voters, nullptr);
  for (const auto& part : parts) {
    for (const auto& [v, w] : part.prefs()) {
      if (v >= voters) throw DomainError("partial profile voter outside the society");
      if (slot[v] != nullptr) throw DomainError("partial profile domains overlap");
      slot[v] = &w;
    }
  }
  std::vector<WeakOrder> prefs;
  for (std::size_t v = 0; v < voters; ++v) {
    if (slot[v] == nullptr) throw DomainError("partial profile domains do not cover the society");
    prefs.push_back(*slot[v]);
  }
  return Profile(std::move(prefs));
}

bool is_partial_ab_indifference(const PartialProfile& pi, Alternative a, Alternative b) {
  if (a == b) throw DomainError("need two distinct alternatives");
  return std::all_of(pi.prefs().begin(), pi.prefs().end(),
                     [&](const auto& e) { return e.second.rank(a) == e.second.rank(b); });
}

Profile designated_indifference_profile(std::size_t universe_size, std::size_t voters) {
  return Profile(std::vector<WeakOrder>(voters, WeakOrder::total_indifference(universe_size)));
}

ProfileSpace::ProfileSpace(Universe universe, std::size_t voters, Domain domain)
    : universe_(std::move(universe)), voters_(voters), domain_(domain) {
  if (voters_ == 0) throw DomainError("society must be nonempty");
  if (voters_ > kMaxVoters) throw ResourceError("too many voters");
  orders_ = domain_ == Domain::weak ? enumerate_weak_orders(universe_.size())
                                    : enumerate_strict_orders(universe_.size());
  stride_.assign(voters_, 1);
  std::size_t total = 1;
  for (std::size_t v = voters_; v-- > 0;) {
    stride_[v] = total;
    if (total > (std::size_t{1} << 26) / orders_.size())
      throw ResourceError("profile space too large");
    total *= orders_.size();
  }
  size_ = total;
}

std::size_t ProfileSpace::order_index(const WeakOrder& w) const {
  auto it = std::lower_bound(orders_.begin(), orders_.end(), w,
                             [](const WeakOrder& x, const WeakOrder& y) { return x.ranks() < y.ranks(); });
  if (it == orders_.end() || *it != w) throw DomainError("order outside the profile domain");
  return static_cast<std::size_t>(it - orders_.begin());
}

Profile ProfileSpace::profile(std::size_t index) const {
  if (index >= size_) throw DomainError("profile index out of range");
  std::vector<WeakOrder> prefs;
  prefs.reserve(voters_);
  for (std::size_t v = 0; v < voters_; ++v) prefs.push_back(orders_[digit(index, v)]);
  return Profile(std::move(prefs));
}

bool ProfileSpace::contains(const Profile& p) const {
  if (p.voters() != voters_) return false;
  for (const auto& w : p.prefs()) {
    if (w.universe_size() != universe_.size()) return false;
    if (domain_ == Domain::strict && !is_strict(w)) return false;
  }
  return true;
}

std::size_t ProfileSpace::index_of(const Profile& p) const {
  if (p.voters() != voters_) throw DomainError("profile society does not match the space");
  std::size_t idx = 0;
  for (std::size_t v = 0; v < voters_; ++v) idx += order_index(p[v]) * stride_[v];
  return idx;
}

VoterSet ProfileSpace::equal_voters(std::size_t i, std::size_t j) const {
  VoterSet s;
  const std::size_t k = orders_.size();
  for (std::size_t v = voters_; v-- > 0;) {
    if (i % k == j % k) s.insert(v);
    i /= k;
    j /= k;
  }
  return s;
}

PairMasks make_pair_masks(const ProfileSpace& space, Alternative a, Alternative b) {
  if (a == b) throw DomainError("need two distinct alternatives");
  if (!space.universe().contains(a) || !space.universe().contains(b))
    throw DomainError("alternative outside universe");
  const auto& orders = space.orders();
  std::vector<PairRelation> rel;
  for (const auto& w : orders) rel.push_back(restrict_to_pair(w, a, b));

  PairMasks m{a, b, {}, {}, {}};
  m.indiff.resize(space.size());
  m.prefer_a.resize(space.size());
  m.prefer_b.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t v = 0; v < space.voters(); ++v) {
      switch (rel[space.digit(i, v)]) {
        case PairRelation::indifferent: m.indiff[i].insert(v); break;
        case PairRelation::a_over_b: m.prefer_a[i].insert(v); break;
        case PairRelation::b_over_a: m.prefer_b[i].insert(v); break;
      }
    }
  }
  return m;
}

std::vector<Profile> unanimous_indifference_profiles(Alternative a, Alternative b,
                                                     const Universe& universe,
                                                     std::size_t voters) {
  if (a == b) throw DomainError("need two distinct alternatives");
  ProfileSpace space(universe, voters);
  const auto masks = make_pair_masks(space, a, b);
  std::vector<Profile> out;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (masks.indiff[i] == space.society()) out.push_back(space.profile(i));
  return out;
}

std::string format_profile(const Profile& p, const Universe& universe) {
  std::string out;
  for (std::size_t v = 0; v < p.voters(); ++v)
    out += "v" + std::to_string(v) + ": " + format_order(p[v], universe) + "\n";
  return out;
}

std::string format_partial(const PartialProfile& pi, const Universe& universe) {
  std::string out;
  for (const auto& [v, w] : pi.prefs())
    out += "v" + std::to_string(v) + ": " + format_order(w, universe) + "\n";
  return out;
}

std::string format_profile_inline(const Profile& p, const Universe& universe) {
  std::string out;
  for (std::size_t v = 0; v < p.voters(); ++v) {
    if (v > 0) out += ", ";
    out += format_order(p[v], universe);
  }
  return out;
}

namespace {

struct VoterLine {
  std::size_t voter;
  WeakOrder order;
};

VoterLine parse_voter_line(std::string_view body, std::size_t line, const Universe& universe) {
  if (body.empty() || body[0] != 'v') throw ParseError("expected 'v<id>: <order>'", line, 1);
  std::size_t colon = body.find(':');
  if (colon == std::string_view::npos) throw ParseError("missing ':'", line, body.size() + 1);
  std::size_t voter = 0;
  auto [ptr, ec] = std::from_chars(body.data() + 1, body.data() + colon, voter);
  if (ec != std::errc() || ptr != body.data() + colon || colon == 1)
    throw ParseError("bad voter id", line, 2);
  if (voter >= kMaxVoters) throw ParseError("voter id out of range", line, 2);
  if (colon + 1 >= body.size() || body[colon + 1] != ' ')
    throw ParseError("expected a single space after ':'", line, colon + 2);
  return {voter, parse_order(body.substr(colon + 2), universe, line, colon + 3)};
}

}  // namespace

PartialProfile parse_partial(std::string_view textv, const Universe& universe,
                             std::size_t first_line) {
  std::map<std::size_t, WeakOrder> prefs;
  std::size_t last = 0;
  bool any = false;
  for (const auto& [n, body] : text::lines(textv)) {
    const std::size_t line = n + first_line - 1;
    if (text::blank(body)) continue;
    auto vl = parse_voter_line(body, line, universe);
    if (any && vl.voter <= last)
      throw ParseError("voters must be listed in increasing id order", line, 1);
    last = vl.voter;
    any = true;
    prefs.emplace(vl.voter, std::move(vl.order));
  }
  return PartialProfile(std::move(prefs));
}

Profile parse_profile(std::string_view textv, const Universe& universe, std::size_t voters) {
  auto partial = parse_partial(textv, universe);
  if (partial.domain() != VoterSet::all(voters))
    throw ParseError("profile must list voters v0..v" + std::to_string(voters - 1), 1, 1);
  return compose({partial}, voters);
}

Profile parse_profile_inline(std::string_view s, const Universe& universe, std::size_t line,
                             std::size_t column) {
  std::vector<WeakOrder> prefs;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(", ", pos);
    std::string_view tok = s.substr(pos, end == std::string_view::npos ? end : end - pos);
    prefs.push_back(parse_order(tok, universe, line, column + pos));
    if (end == std::string_view::npos) break;
    pos = end + 2;
  }
  return Profile(std::move(prefs));
}

}  // namespace twoval
