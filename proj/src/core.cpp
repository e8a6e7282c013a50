#include "lup/core.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lup {

std::string to_string(CostModel model) {
  return model == CostModel::Full ? "full" : "partial";
}

CostModel parse_cost_model(const std::string& text) {
  if (text == "full") return CostModel::Full;
  if (text == "partial") return CostModel::Partial;
  throw Error("unknown cost model '" + text + "' (expected full|partial)");
}

ListState::ListState(std::vector<Item> order) : order_(std::move(order)) {
  where_.assign(order_.size(), order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const Item item = order_[i];
    if (item >= order_.size() || where_[item] != order_.size())
      throw MalformedSequence("list order is not a permutation of 0.." +
                              std::to_string(order_.size()) + "-1");
    where_[item] = i;
  }
}

ListState ListState::identity(std::size_t size) {
  std::vector<Item> order(size);
  for (std::size_t i = 0; i < size; ++i) order[i] = static_cast<Item>(i);
  return ListState(std::move(order));
}

std::size_t ListState::position(Item item) const {
  if (!contains(item))
    throw MalformedSequence("request to unknown item " + std::to_string(item));
  return where_[item] + 1;
}

Item ListState::at(std::size_t pos) const {
  if (pos == 0 || pos > order_.size())
    throw InvalidMove("position " + std::to_string(pos) + " out of range");
  return order_[pos - 1];
}

void ListState::move_forward(Item item, std::size_t target_pos) {
  const std::size_t current = position(item);
  if (target_pos == 0 || target_pos > current)
    throw InvalidMove("free exchange may only move item " +
                      std::to_string(item) + " toward the front (from " +
                      std::to_string(current) + " to " +
                      std::to_string(target_pos) + ")");
  for (std::size_t i = current - 1; i > target_pos - 1; --i) {
    order_[i] = order_[i - 1];
    where_[order_[i]] = i;
  }
  order_[target_pos - 1] = item;
  where_[item] = target_pos - 1;
}

void ListState::swap_adjacent(std::size_t pos) {
  if (pos == 0 || pos >= order_.size())
    throw InvalidMove("no adjacent pair at position " + std::to_string(pos));
  std::swap(order_[pos - 1], order_[pos]);
  where_[order_[pos - 1]] = pos - 1;
  where_[order_[pos]] = pos;
}

bool ListState::is_valid_permutation() const {
  if (where_.size() != order_.size()) return false;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] >= order_.size() || where_[order_[i]] != i) return false;
  }
  return true;
}

std::string to_string(const ListState& list) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out << ' ';
    out << list.order()[i];
  }
  out << ']';
  return out.str();
}

RequestSequence::RequestSequence(ListState initial_order,
                                 std::vector<Item> reqs)
    : initial(std::move(initial_order)), requests(std::move(reqs)) {
  for (Item r : requests) {
    if (!initial.contains(r))
      throw MalformedSequence("request to item " + std::to_string(r) +
                              " which is not in the initial list");
  }
}

Cost access(const ListState& list, Item item, CostModel model) {
  const std::size_t pos = list.position(item);
  return model == CostModel::Full ? pos : pos - 1;
}

ListState free_move(ListState list, Item item, std::size_t target_pos) {
  list.move_forward(item, target_pos);
  return list;
}

Cost kendall_tau_distance(const ListState& a, const ListState& b) {
  if (a.size() != b.size())
    throw MalformedSequence("lists hold different item sets");
  // Relabel a's items by their position in b; the distance is the inversion
  // count of the relabelled sequence (merge sort, O(l log l)).
  std::vector<std::size_t> seq(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) seq[i] = b.position(a.order()[i]);
  std::vector<std::size_t> buf(seq.size());
  Cost inversions = 0;
  for (std::size_t width = 1; width < seq.size(); width *= 2) {
    for (std::size_t lo = 0; lo < seq.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, seq.size());
      const std::size_t hi = std::min(lo + 2 * width, seq.size());
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (seq[i] <= seq[j]) {
          buf[k++] = seq[i++];
        } else {
          inversions += mid - i;
          buf[k++] = seq[j++];
        }
      }
      while (i < mid) buf[k++] = seq[i++];
      while (j < hi) buf[k++] = seq[j++];
    }
    std::swap(seq, buf);
  }
  return inversions;
}

std::vector<std::size_t> adjacent_swap_path(const ListState& from,
                                            const ListState& to) {
  if (from.size() != to.size())
    throw MalformedSequence("lists hold different item sets");
  ListState work = from;
  std::vector<std::size_t> swaps;
  // Bring to's items into place front to back; each step bubbles one item
  // forward past items that belong behind it.
  for (std::size_t target = 1; target <= to.size(); ++target) {
    const Item item = to.at(target);
    for (std::size_t pos = work.position(item); pos > target; --pos) {
      work.swap_adjacent(pos - 1);
      swaps.push_back(pos - 1);
    }
  }
  return swaps;
}

Cost paid_rearrange(ListState& list, const ListState& target) {
  const auto swaps = adjacent_swap_path(list, target);
  for (std::size_t pos : swaps) list.swap_adjacent(pos);
  return swaps.size();
}

}  // namespace lup
