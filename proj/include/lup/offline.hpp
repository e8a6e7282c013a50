// Exact offline optima and the two-item machinery used as ground truth.

#ifndef LUP_OFFLINE_HPP
#define LUP_OFFLINE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lup/core.hpp"

namespace lup {

// Largest list the exact dynamic programs accept. Reads LUP_MAX_L from the
// environment, default 6.
std::size_t dp_capacity();

// All l! orders of 0..l-1 in lexicographic order, with position and
// Kendall-tau lookups. Index order is lexicographic order.
class PermutationSpace {
 public:
  explicit PermutationSpace(std::size_t items);

  std::size_t items() const { return items_; }
  std::size_t count() const { return count_; }

  std::size_t index_of(const ListState& list) const;
  ListState list(std::size_t index) const;
  const Item* order(std::size_t index) const {
    return &orders_[index * items_];
  }
  // 1-based position of `item` in permutation `index`.
  std::size_t position(std::size_t index, Item item) const {
    return positions_[index * items_ + item];
  }
  Cost distance(std::size_t a, std::size_t b) const;

  // Permutation reached from `index` by moving the subset of the first
  // pos-1 items selected by `mask` (bit p-1 = position p) to just behind the
  // item at `pos`, keeping their order.
  std::size_t subset_transfer(std::size_t index, std::size_t pos,
                              std::uint32_t mask) const;

 private:
  std::size_t rank(const Item* order) const;

  std::size_t items_;
  std::size_t count_;
  std::vector<Item> orders_;
  std::vector<std::uint8_t> positions_;
  std::vector<std::uint8_t> distances_;  // empty when l is too large to tabulate
};

struct DpStep {
  ListState target;  // list after the paid exchanges, before the access
  Cost access = 0;
  Cost exchanges = 0;
};

struct DpSolution {
  Cost total_cost = 0;
  std::vector<DpStep> trace;

  CostLedger ledger() const;
};

struct SubsetTransferSolution {
  DpSolution solution;
  // Per request, one bit per position in front of the requested item
  // (front to back); true = transferred behind it.
  std::vector<std::vector<bool>> transfers;
};

// Minimum cost over all schedules that rearrange the list with paid
// exchanges before each request. Ties go to the lexicographically smallest
// target order. Throws CapacityError above `max_items`.
DpSolution opt_dp(const RequestSequence& seq, CostModel model,
                  std::size_t max_items);
DpSolution opt_dp(const RequestSequence& seq, CostModel model);

// Same as opt_dp with moves restricted to one subset transfer per request.
SubsetTransferSolution opt_subset_transfer_dp(const RequestSequence& seq,
                                              CostModel model,
                                              std::size_t max_items);
SubsetTransferSolution opt_subset_transfer_dp(const RequestSequence& seq,
                                              CostModel model);

// Recomputes the cost of a DP trace through the core primitives and checks
// every step against `seq`. Throws InvalidMove on mismatch.
Cost replay_trace(const RequestSequence& seq, const DpSolution& solution,
                  CostModel model);

// Streaming optimum: the frontier holds, for every list order, the cheapest
// way to have served the requests pushed so far and end in that order.
// push/pop make depth-first enumeration of sequence trees cheap.
class OptFrontier {
 public:
  enum class Moves { Unrestricted, SubsetTransfer };

  OptFrontier(const ListState& initial, CostModel model, Moves moves,
              std::size_t max_items);

  void push(Item item);
  void pop();
  Cost cost() const;
  std::size_t depth() const { return layers_.size() - 1; }

 private:
  static constexpr Cost kUnreachable = UINT64_MAX;

  PermutationSpace space_;
  CostModel model_;
  Moves moves_;
  std::vector<std::vector<Cost>> layers_;
};

// Optimal offline algorithm for two-item lists: after accessing the item in
// the second position it is moved to the front iff the next request is to
// the same item. Throws MalformedSequence unless the list has two items.
Cost pair_opt(const RequestSequence& seq, CostModel model);

// Per-request costs of the same schedule.
std::vector<Cost> pair_opt_costs(const RequestSequence& seq, CostModel model);

// Offline strategy for any list size: the accessed item is moved to the
// front iff the next request repeats it. Returns per-request access costs.
// Coincides with pair_opt on two items.
std::vector<Cost> move_on_repeat_costs(const RequestSequence& seq,
                                       CostModel model);
CostLedger move_on_repeat(const RequestSequence& seq, CostModel model);

enum class PhaseForm : char { A = 'a', B = 'b', C = 'c' };

// One phase of a two-item sequence. With f the front item and b the other at
// phase start: (a) f^j b b, (b) f^j (b f)^k b b, (c) f^j (b f)^k f.
struct Phase {
  int type = 1;  // 1 when the initial front item is in front, else 2
  PhaseForm form = PhaseForm::A;
  std::size_t j = 0;
  std::size_t k = 0;  // 0 for form (a)
  std::size_t begin = 0;  // request index range [begin, end)
  std::size_t end = 0;

  friend bool operator==(const Phase&, const Phase&) = default;
};

struct PhaseDecomposition {
  std::vector<Phase> phases;
  std::vector<Item> residual;  // unparsed tail, possibly empty
  std::size_t residual_begin = 0;
};

// Greedy left-to-right parse. Throws MalformedSequence unless two items.
PhaseDecomposition partition_phases(const RequestSequence& seq);

// Reassembles requests from a decomposition; `front`/`back` are the items in
// front/behind at the start of the sequence.
std::vector<Item> expand_phases(const PhaseDecomposition& decomposition,
                                Item front, Item back);

}  // namespace lup

#endif  // LUP_OFFLINE_HPP
