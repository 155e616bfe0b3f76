#include "twoval/orders.hpp"

#include <algorithm>
#include <numeric>

#include "twoval/error.hpp"
#include "twoval/voter_set.hpp"

namespace twoval {

std::string to_string(VoterSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t v : s.members()) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw DomainError("universe must be nonempty");
  if (labels_.size() > kMaxAlternatives)
    throw ResourceError("universe larger than " + std::to_string(kMaxAlternatives));
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const auto& l = labels_[i];
    if (l.empty()) throw DomainError("empty alternative label");
    for (char c : l)
      if (c == '~' || c == '>' || c == ',' || c == ';' || c == ' ' || c == ':')
        throw DomainError("alternative label contains a reserved character: " + l);
    for (std::size_t j = 0; j < i; ++j)
      if (labels_[j] == l) throw DomainError("duplicate alternative label: " + l);
  }
}

Universe Universe::standard(std::size_t n) {
  if (n == 0) throw DomainError("universe must be nonempty");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Universe(std::move(labels));
}

const std::string& Universe::label(Alternative x) const {
  if (!contains(x)) throw DomainError("alternative outside universe");
  return labels_[x.id];
}

Alternative Universe::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return Alternative{static_cast<std::uint8_t>(i)};
  throw DomainError("unknown alternative: " + std::string(label));
}

std::vector<Alternative> Universe::alternatives() const {
  std::vector<Alternative> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    out.push_back(Alternative{static_cast<std::uint8_t>(i)});
  return out;
}

namespace {

bool normalized(const std::vector<std::uint8_t>& ranks) {
  if (ranks.empty()) return false;
  std::vector<bool> used(ranks.size(), false);
  for (auto r : ranks) {
    if (r >= ranks.size()) return false;
    used[r] = true;
  }
  auto k = std::find(used.begin(), used.end(), false);
  return std::all_of(k, used.end(), [](bool u) { return !u; });
}

}  // namespace

WeakOrder WeakOrder::from_classes(const std::vector<std::vector<Alternative>>& classes,
                                  std::size_t universe_size) {
  if (universe_size == 0) throw DomainError("universe must be nonempty");
  std::vector<std::uint8_t> ranks(universe_size, 0xff);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw DomainError("empty indifference class");
    for (Alternative x : classes[c]) {
      if (x.id >= universe_size) throw DomainError("alternative outside universe");
      if (ranks[x.id] != 0xff) throw DomainError("indifference classes overlap");
      ranks[x.id] = static_cast<std::uint8_t>(c);
    }
  }
  if (std::find(ranks.begin(), ranks.end(), 0xff) != ranks.end())
    throw DomainError("indifference classes do not cover the universe");
  return WeakOrder(std::move(ranks));
}

WeakOrder WeakOrder::from_ranks(std::vector<std::uint8_t> ranks) {
  if (!normalized(ranks)) throw DomainError("rank vector is not a normalized weak order");
  return WeakOrder(std::move(ranks));
}

WeakOrder WeakOrder::strict(const std::vector<Alternative>& best_first) {
  std::vector<std::vector<Alternative>> classes;
  for (Alternative x : best_first) classes.push_back({x});
  return from_classes(classes, best_first.size());
}

WeakOrder WeakOrder::total_indifference(std::size_t universe_size) {
  if (universe_size == 0) throw DomainError("universe must be nonempty");
  return WeakOrder(std::vector<std::uint8_t>(universe_size, 0));
}

std::size_t WeakOrder::class_count() const {
  if (ranks_.empty()) return 0;
  return static_cast<std::size_t>(*std::max_element(ranks_.begin(), ranks_.end())) + 1;
}

std::vector<std::vector<Alternative>> WeakOrder::classes() const {
  std::vector<std::vector<Alternative>> out(class_count());
  for (std::size_t i = 0; i < ranks_.size(); ++i)
    out[ranks_[i]].push_back(Alternative{static_cast<std::uint8_t>(i)});
  return out;
}

std::uint8_t WeakOrder::rank(Alternative x) const {
  if (x.id >= ranks_.size()) throw DomainError("alternative outside universe");
  return ranks_[x.id];
}

std::vector<WeakOrder> enumerate_weak_orders(std::size_t universe_size) {
  if (universe_size == 0) throw DomainError("cannot enumerate weak orders of an empty universe");
  if (universe_size > kMaxAlternatives)
    throw ResourceError("universe too large to enumerate");
  // Odometer over all rank vectors in lexicographic order, keeping the
  // normalized ones.
  std::vector<WeakOrder> out;
  std::vector<std::uint8_t> r(universe_size, 0);
  const auto n = static_cast<std::uint8_t>(universe_size);
  while (true) {
    if (normalized(r)) out.push_back(WeakOrder::from_ranks(r));
    std::size_t i = universe_size;
    while (i > 0 && r[i - 1] + 1 == n) r[--i] = 0;
    if (i == 0) break;
    ++r[i - 1];
  }
  return out;
}

std::vector<WeakOrder> enumerate_strict_orders(std::size_t universe_size) {
  auto all = enumerate_weak_orders(universe_size);
  std::vector<WeakOrder> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [](const WeakOrder& w) { return is_strict(w); });
  return out;
}

Comparison compare(const WeakOrder& w, Alternative x, Alternative y) {
  const auto rx = w.rank(x), ry = w.rank(y);
  if (rx < ry) return Comparison::x_preferred;
  if (rx > ry) return Comparison::y_preferred;
  return Comparison::indifferent;
}

PairRelation restrict_to_pair(const WeakOrder& w, Alternative a, Alternative b) {
  if (a == b) throw DomainError("restrict_to_pair needs two distinct alternatives");
  switch (compare(w, a, b)) {
    case Comparison::x_preferred: return PairRelation::a_over_b;
    case Comparison::y_preferred: return PairRelation::b_over_a;
    case Comparison::indifferent: break;
  }
  return PairRelation::indifferent;
}

bool is_strict(const WeakOrder& w) { return w.class_count() == w.universe_size(); }

std::pair<WeakOrder, WeakOrder> canonical_strict_pair(Alternative a, Alternative b,
                                                      const Universe& universe) {
  if (a == b) throw DomainError("canonical_strict_pair needs two distinct alternatives");
  if (!universe.contains(a) || !universe.contains(b))
    throw DomainError("alternative outside universe");
  std::vector<Alternative> tail;
  for (Alternative x : universe.alternatives())
    if (x != a && x != b) tail.push_back(x);
  std::vector<Alternative> s1{a, b}, s2{b, a};
  s1.insert(s1.end(), tail.begin(), tail.end());
  s2.insert(s2.end(), tail.begin(), tail.end());
  return {WeakOrder::strict(s1), WeakOrder::strict(s2)};
}

Alternative top_among(const WeakOrder& w, const std::vector<Alternative>& among) {
  if (among.empty()) throw DomainError("top_among needs a nonempty set");
  Alternative best = among.front();
  for (Alternative x : among)
    if (w.rank(x) < w.rank(best) || (w.rank(x) == w.rank(best) && x.id < best.id)) best = x;
  return best;
}

std::string format_order(const WeakOrder& w, const Universe& universe) {
  if (w.universe_size() != universe.size()) throw DomainError("order/universe size mismatch");
  std::string out;
  bool first_class = true;
  for (const auto& cls : w.classes()) {
    if (!first_class) out += '>';
    first_class = false;
    bool first = true;
    for (Alternative x : cls) {
      if (!first) out += '~';
      first = false;
      out += universe.label(x);
    }
  }
  return out;
}

WeakOrder parse_order(std::string_view text, const Universe& universe, std::size_t line,
                      std::size_t column) {
  std::vector<std::vector<Alternative>> classes(1);
  std::vector<bool> seen(universe.size(), false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg, std::size_t at) {
    throw ParseError(msg, line, column + at);
  };
  if (text.empty()) fail("empty weak order", 0);
  while (true) {
    std::size_t end = text.find_first_of("~>", pos);
    std::string_view token = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    if (token.empty()) fail("missing alternative", pos);
    Alternative x{};
    try {
      x = universe.find(token);
    } catch (const DomainError&) {
      fail("unknown alternative '" + std::string(token) + "'", pos);
    }
    if (seen[x.id]) fail("alternative '" + std::string(token) + "' listed twice", pos);
    seen[x.id] = true;
    if (!classes.back().empty() && classes.back().back().id > x.id)
      fail("class members must be listed in id order", pos);
    classes.back().push_back(x);
    if (end == std::string_view::npos) break;
    if (text[end] == '>') classes.emplace_back();
    pos = end + 1;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      fail("alternative '" + universe.labels()[i] + "' missing from order", text.size());
  return WeakOrder::from_classes(classes, universe.size());
}

}  // namespace twoval
