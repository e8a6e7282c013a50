// Item/list model, cost models and exchange primitives shared by every
// list-update algorithm in the library.
//
// Positions are 1-based everywhere: the front item sits at position 1 and
// costs 1 to access under the full cost model.

#ifndef LUP_CORE_HPP
#define LUP_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lup {

using Item = std::uint32_t;
using Cost = std::uint64_t;

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedSequence : public Error {
 public:
  using Error::Error;
};

class InvalidMove : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class InvalidAdvice : public Error {
 public:
  using Error::Error;
};

class UnsupportedAlgorithm : public Error {
 public:
  using Error::Error;
};

enum class CostModel { Full, Partial };

std::string to_string(CostModel model);
CostModel parse_cost_model(const std::string& text);

struct CostLedger {
  Cost access = 0;
  Cost paid_exchanges = 0;

  Cost total() const { return access + paid_exchanges; }

  CostLedger& operator+=(const CostLedger& other) {
    access += other.access;
    paid_exchanges += other.paid_exchanges;
    return *this;
  }
  friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

// A permutation of the items 0..l-1 with O(1) position lookup.
class ListState {
 public:
  ListState() = default;
  // Throws MalformedSequence unless `order` is a permutation of 0..l-1.
  explicit ListState(std::vector<Item> order);

  static ListState identity(std::size_t size);

  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }
  bool contains(Item item) const { return item < where_.size(); }

  // 1-based position; throws MalformedSequence for unknown items.
  std::size_t position(Item item) const;
  // Item at 1-based position.
  Item at(std::size_t pos) const;

  const std::vector<Item>& order() const { return order_; }

  // Moves `item` forward to `target_pos`, shifting the items in between back
  // by one. A target behind the current position throws InvalidMove.
  void move_forward(Item item, std::size_t target_pos);
  void move_to_front(Item item) { move_forward(item, 1); }

  // Swaps the items at positions pos and pos+1.
  void swap_adjacent(std::size_t pos);

  bool precedes(Item a, Item b) const { return position(a) < position(b); }

  bool is_valid_permutation() const;

  friend bool operator==(const ListState& a, const ListState& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Item> order_;
  std::vector<std::size_t> where_;  // item -> 0-based index into order_
};

std::string to_string(const ListState& list);

// A static list-update instance: an initial order plus requests to its items.
struct RequestSequence {
  ListState initial;
  std::vector<Item> requests;

  RequestSequence() = default;
  RequestSequence(ListState initial_order, std::vector<Item> reqs);

  std::size_t list_size() const { return initial.size(); }
  std::size_t length() const { return requests.size(); }
  bool empty() const { return requests.empty(); }
};

// Cost of accessing `item`; the list is left unchanged.
Cost access(const ListState& list, Item item, CostModel model);

// Free exchange: returns the list with `item` moved forward to `target_pos`.
ListState free_move(ListState list, Item item, std::size_t target_pos);

// Number of item pairs ordered differently in `a` and `b`. Throws
// MalformedSequence if they are not permutations of the same items.
Cost kendall_tau_distance(const ListState& a, const ListState& b);

// Rearranges `list` into `target` with adjacent transpositions and returns the
// number of swaps performed, which equals kendall_tau_distance(list, target).
Cost paid_rearrange(ListState& list, const ListState& target);

// Adjacent swaps (1-based positions, each swapping pos and pos+1) turning
// `from` into `to`, in bubble-sort order; every swap removes one inversion.
std::vector<std::size_t> adjacent_swap_path(const ListState& from,
                                            const ListState& to);

}  // namespace lup

#endif  // LUP_CORE_HPP
