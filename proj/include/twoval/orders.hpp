#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twoval {

inline constexpr std::size_t kMaxAlternatives = 8;

struct Alternative {
  std::uint8_t id = 0;
  constexpr auto operator<=>(const Alternative&) const = default;
};

// The finite alternative set A. Ids are 0..size()-1; labels are what the
// textual formats use.
class Universe {
public:
  Universe() = default;
  explicit Universe(std::vector<std::string> labels);

  // a, b, c, ... for the first n ids.
  static Universe standard(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  bool contains(Alternative x) const { return x.id < labels_.size(); }
  const std::string& label(Alternative x) const;
  Alternative find(std::string_view label) const;  // throws DomainError
  std::vector<Alternative> alternatives() const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Universe&) const = default;

private:
  std::vector<std::string> labels_;
};

enum class Comparison { x_preferred, indifferent, y_preferred };

// A weak order restricted to an ordered pair {a, b}.
enum class PairRelation { a_over_b, b_over_a, indifferent };

// Complete transitive preference stored as an ordered partition into
// indifference classes. Internally each alternative carries the index of its
// class (0 = best), normalized so the used indices are exactly 0..k-1.
class WeakOrder {
public:
  WeakOrder() = default;

  // Classes best first. Throws DomainError unless the classes are nonempty,
  // pairwise disjoint and cover 0..universe_size-1.
  static WeakOrder from_classes(const std::vector<std::vector<Alternative>>& classes,
                                std::size_t universe_size);
  // Rank vector indexed by alternative id; must already be normalized.
  static WeakOrder from_ranks(std::vector<std::uint8_t> ranks);
  // Strict order listing alternatives best first.
  static WeakOrder strict(const std::vector<Alternative>& best_first);
  // Every alternative in one class.
  static WeakOrder total_indifference(std::size_t universe_size);

  std::size_t universe_size() const { return ranks_.size(); }
  std::size_t class_count() const;
  std::vector<std::vector<Alternative>> classes() const;
  std::uint8_t rank(Alternative x) const;
  const std::vector<std::uint8_t>& ranks() const { return ranks_; }

  auto operator<=>(const WeakOrder&) const = default;

private:
  explicit WeakOrder(std::vector<std::uint8_t> ranks) : ranks_(std::move(ranks)) {}
  std::vector<std::uint8_t> ranks_;
};

// All weak orders on a universe of `universe_size` alternatives, ordered
// lexicographically by rank vector.
std::vector<WeakOrder> enumerate_weak_orders(std::size_t universe_size);
// The strict members of enumerate_weak_orders, same relative order.
std::vector<WeakOrder> enumerate_strict_orders(std::size_t universe_size);

Comparison compare(const WeakOrder& w, Alternative x, Alternative y);
PairRelation restrict_to_pair(const WeakOrder& w, Alternative a, Alternative b);
bool is_strict(const WeakOrder& w);

// True iff x ≻ y in w (strict part).
inline bool prefers(const WeakOrder& w, Alternative x, Alternative y) {
  return w.rank(x) < w.rank(y);
}

// S1 puts a first and b second, S2 swaps them; the remaining alternatives
// follow in ascending id order in both.
std::pair<WeakOrder, WeakOrder> canonical_strict_pair(Alternative a, Alternative b,
                                                      const Universe& universe);

// Best alternative of w among `among` (nonempty); ties go to the lowest id.
Alternative top_among(const WeakOrder& w, const std::vector<Alternative>& among);

// "a~b>c": classes separated by '>', class members by '~', members in id order.
std::string format_order(const WeakOrder& w, const Universe& universe);
// Strict inverse of format_order. `line`/`column` locate `text` inside a
// larger document for error reporting.
WeakOrder parse_order(std::string_view text, const Universe& universe,
                      std::size_t line = 1, std::size_t column = 1);

}  // namespace twoval
