#include "lup/offline.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

namespace lup {

namespace {

constexpr std::size_t kDefaultCapacity = 6;
// Beyond this the l! x l! distance table is not worth its memory.
constexpr std::size_t kMaxTabulated = 7;
// positions_ is stored in bytes.
constexpr std::size_t kHardLimit = 10;

Cost access_at(std::size_t pos, CostModel model) {
  return model == CostModel::Full ? pos : pos - 1;
}

void check_capacity(std::size_t items, std::size_t max_items) {
  if (items > max_items || items > kHardLimit)
    throw CapacityError("exact offline optimum limited to " +
                        std::to_string(std::min(max_items, kHardLimit)) +
                        " items, sequence has " + std::to_string(items));
}

}  // namespace

std::size_t dp_capacity() {
  if (const char* env = std::getenv("LUP_MAX_L")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultCapacity;
}

PermutationSpace::PermutationSpace(std::size_t items) : items_(items) {
  if (items > kHardLimit)
    throw CapacityError("permutation space over " + std::to_string(items) +
                        " items is too large");
  count_ = 1;
  for (std::size_t i = 2; i <= items; ++i) count_ *= i;

  std::vector<Item> perm(items);
  std::iota(perm.begin(), perm.end(), Item{0});
  orders_.reserve(count_ * items);
  positions_.resize(count_ * items);
  std::size_t index = 0;
  do {
    for (std::size_t p = 0; p < items; ++p) {
      orders_.push_back(perm[p]);
      positions_[index * items + perm[p]] = static_cast<std::uint8_t>(p + 1);
    }
    ++index;
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (items <= kMaxTabulated) {
    distances_.resize(count_ * count_);
    for (std::size_t a = 0; a < count_; ++a)
      for (std::size_t b = a; b < count_; ++b) {
        Cost d = 0;
        const Item* oa = order(a);
        for (std::size_t i = 0; i < items; ++i)
          for (std::size_t j = i + 1; j < items; ++j)
            if (position(b, oa[i]) > position(b, oa[j])) ++d;
        distances_[a * count_ + b] = distances_[b * count_ + a] =
            static_cast<std::uint8_t>(d);
      }
  }
}

std::size_t PermutationSpace::rank(const Item* order) const {
  // Lehmer code read as a factorial-base number gives the lexicographic rank.
  std::size_t r = 0;
  for (std::size_t i = 0; i < items_; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < items_; ++j)
      if (order[j] < order[i]) ++smaller;
    r = r * (items_ - i) + smaller;
  }
  return r;
}

std::size_t PermutationSpace::index_of(const ListState& list) const {
  if (list.size() != items_)
    throw MalformedSequence("list size does not match permutation space");
  return rank(list.order().data());
}

ListState PermutationSpace::list(std::size_t index) const {
  const Item* o = order(index);
  return ListState(std::vector<Item>(o, o + items_));
}

Cost PermutationSpace::distance(std::size_t a, std::size_t b) const {
  if (!distances_.empty()) return distances_[a * count_ + b];
  Cost d = 0;
  const Item* oa = order(a);
  for (std::size_t i = 0; i < items_; ++i)
    for (std::size_t j = i + 1; j < items_; ++j)
      if (position(b, oa[i]) > position(b, oa[j])) ++d;
  return d;
}

std::size_t PermutationSpace::subset_transfer(std::size_t index,
                                              std::size_t pos,
                                              std::uint32_t mask) const {
  const Item* o = order(index);
  Item out[kHardLimit];
  std::size_t w = 0;
  for (std::size_t p = 1; p < pos; ++p)
    if (!(mask >> (p - 1) & 1u)) out[w++] = o[p - 1];
  out[w++] = o[pos - 1];
  for (std::size_t p = 1; p < pos; ++p)
    if (mask >> (p - 1) & 1u) out[w++] = o[p - 1];
  for (std::size_t p = pos + 1; p <= items_; ++p) out[w++] = o[p - 1];
  return rank(out);
}

CostLedger DpSolution::ledger() const {
  CostLedger ledger;
  for (const auto& step : trace) {
    ledger.access += step.access;
    ledger.paid_exchanges += step.exchanges;
  }
  return ledger;
}

DpSolution opt_dp(const RequestSequence& seq, CostModel model) {
  return opt_dp(seq, model, dp_capacity());
}

DpSolution opt_dp(const RequestSequence& seq, CostModel model,
                  std::size_t max_items) {
  check_capacity(seq.list_size(), max_items);
  const PermutationSpace space(seq.list_size());
  const std::size_t count = space.count();
  const std::size_t n = seq.length();

  // value[t][p]: cheapest way to serve requests t.. starting in order p.
  std::vector<std::vector<Cost>> value(n + 1, std::vector<Cost>(count, 0));
  std::vector<Cost> arrive(count);
  for (std::size_t t = n; t-- > 0;) {
    const Item r = seq.requests[t];
    for (std::size_t q = 0; q < count; ++q)
      arrive[q] = access_at(space.position(q, r), model) + value[t + 1][q];
    for (std::size_t p = 0; p < count; ++p) {
      Cost best = std::numeric_limits<Cost>::max();
      for (std::size_t q = 0; q < count; ++q)
        best = std::min(best, space.distance(p, q) + arrive[q]);
      value[t][p] = best;
    }
  }

  DpSolution solution;
  std::size_t p = space.index_of(seq.initial);
  solution.total_cost = value[0][p];
  solution.trace.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    const Item r = seq.requests[t];
    std::size_t best_q = 0;
    Cost best = std::numeric_limits<Cost>::max();
    for (std::size_t q = 0; q < count; ++q) {
      const Cost c = space.distance(p, q) +
                     access_at(space.position(q, r), model) + value[t + 1][q];
      if (c < best) {
        best = c;
        best_q = q;
      }
    }
    solution.trace.push_back({space.list(best_q),
                              access_at(space.position(best_q, r), model),
                              space.distance(p, best_q)});
    p = best_q;
  }
  return solution;
}

SubsetTransferSolution opt_subset_transfer_dp(const RequestSequence& seq,
                                              CostModel model) {
  return opt_subset_transfer_dp(seq, model, dp_capacity());
}

SubsetTransferSolution opt_subset_transfer_dp(const RequestSequence& seq,
                                              CostModel model,
                                              std::size_t max_items) {
  check_capacity(seq.list_size(), max_items);
  const PermutationSpace space(seq.list_size());
  const std::size_t count = space.count();
  const std::size_t n = seq.length();

  std::vector<std::vector<Cost>> value(n + 1, std::vector<Cost>(count, 0));
  for (std::size_t t = n; t-- > 0;) {
    const Item r = seq.requests[t];
    for (std::size_t p = 0; p < count; ++p) {
      const std::size_t pos = space.position(p, r);
      Cost best = std::numeric_limits<Cost>::max();
      for (std::uint32_t mask = 0; mask < (1u << (pos - 1)); ++mask) {
        const std::size_t q = space.subset_transfer(p, pos, mask);
        const Cost c = space.distance(p, q) +
                       access_at(space.position(q, r), model) + value[t + 1][q];
        best = std::min(best, c);
      }
      value[t][p] = best;
    }
  }

  SubsetTransferSolution result;
  std::size_t p = space.index_of(seq.initial);
  result.solution.total_cost = value[0][p];
  for (std::size_t t = 0; t < n; ++t) {
    const Item r = seq.requests[t];
    const std::size_t pos = space.position(p, r);
    std::size_t best_q = count;
    std::uint32_t best_mask = 0;
    Cost best = std::numeric_limits<Cost>::max();
    for (std::uint32_t mask = 0; mask < (1u << (pos - 1)); ++mask) {
      const std::size_t q = space.subset_transfer(p, pos, mask);
      const Cost c = space.distance(p, q) +
                     access_at(space.position(q, r), model) + value[t + 1][q];
      if (c < best || (c == best && q < best_q)) {
        best = c;
        best_q = q;
        best_mask = mask;
      }
    }
    std::vector<bool> bits(pos - 1);
    for (std::size_t i = 0; i + 1 < pos; ++i) bits[i] = best_mask >> i & 1u;
    result.transfers.push_back(std::move(bits));
    result.solution.trace.push_back(
        {space.list(best_q), access_at(space.position(best_q, r), model),
         space.distance(p, best_q)});
    p = best_q;
  }
  return result;
}

Cost replay_trace(const RequestSequence& seq, const DpSolution& solution,
                  CostModel model) {
  if (solution.trace.size() != seq.length())
    throw InvalidMove("trace length does not match the sequence");
  ListState list = seq.initial;
  Cost total = 0;
  for (std::size_t t = 0; t < seq.length(); ++t) {
    const DpStep& step = solution.trace[t];
    const Cost exchanges = paid_rearrange(list, step.target);
    const Cost cost = access(list, seq.requests[t], model);
    if (exchanges != step.exchanges || cost != step.access)
      throw InvalidMove("trace step " + std::to_string(t) +
                        " does not replay to its recorded cost");
    total += exchanges + cost;
  }
  if (total != solution.total_cost)
    throw InvalidMove("trace replays to " + std::to_string(total) +
                      " but records " + std::to_string(solution.total_cost));
  return total;
}

OptFrontier::OptFrontier(const ListState& initial, CostModel model,
                         Moves moves, std::size_t max_items)
    : space_((check_capacity(initial.size(), max_items), initial.size())),
      model_(model),
      moves_(moves) {
  std::vector<Cost> first(space_.count(), kUnreachable);
  first[space_.index_of(initial)] = 0;
  layers_.push_back(std::move(first));
}

void OptFrontier::push(Item item) {
  if (item >= space_.items())
    throw MalformedSequence("request to unknown item " + std::to_string(item));
  const std::size_t count = space_.count();
  const auto& prev = layers_.back();
  std::vector<Cost> next(count, kUnreachable);
  if (moves_ == Moves::Unrestricted) {
    for (std::size_t q = 0; q < count; ++q) {
      Cost best = kUnreachable;
      for (std::size_t p = 0; p < count; ++p)
        if (prev[p] != kUnreachable)
          best = std::min(best, prev[p] + space_.distance(p, q));
      next[q] = best + access_at(space_.position(q, item), model_);
    }
  } else {
    for (std::size_t p = 0; p < count; ++p) {
      if (prev[p] == kUnreachable) continue;
      const std::size_t pos = space_.position(p, item);
      for (std::uint32_t mask = 0; mask < (1u << (pos - 1)); ++mask) {
        const std::size_t q = space_.subset_transfer(p, pos, mask);
        const Cost c = prev[p] + space_.distance(p, q) +
                       access_at(space_.position(q, item), model_);
        next[q] = std::min(next[q], c);
      }
    }
  }
  layers_.push_back(std::move(next));
}

void OptFrontier::pop() {
  if (layers_.size() > 1) layers_.pop_back();
}

Cost OptFrontier::cost() const {
  return *std::min_element(layers_.back().begin(), layers_.back().end());
}

namespace {

void require_two_items(const RequestSequence& seq) {
  if (seq.list_size() != 2)
    throw MalformedSequence("two-item operation on a list of " +
                            std::to_string(seq.list_size()) + " items");
}

}  // namespace

std::vector<Cost> move_on_repeat_costs(const RequestSequence& seq,
                                       CostModel model) {
  ListState list = seq.initial;
  std::vector<Cost> costs;
  costs.reserve(seq.length());
  for (std::size_t t = 0; t < seq.length(); ++t) {
    const Item r = seq.requests[t];
    costs.push_back(access(list, r, model));
    if (t + 1 < seq.length() && seq.requests[t + 1] == r) list.move_to_front(r);
  }
  return costs;
}

CostLedger move_on_repeat(const RequestSequence& seq, CostModel model) {
  CostLedger ledger;
  for (Cost c : move_on_repeat_costs(seq, model)) ledger.access += c;
  return ledger;
}

std::vector<Cost> pair_opt_costs(const RequestSequence& seq, CostModel model) {
  require_two_items(seq);
  return move_on_repeat_costs(seq, model);
}

Cost pair_opt(const RequestSequence& seq, CostModel model) {
  const auto costs = pair_opt_costs(seq, model);
  return std::accumulate(costs.begin(), costs.end(), Cost{0});
}

PhaseDecomposition partition_phases(const RequestSequence& seq) {
  require_two_items(seq);
  const auto& r = seq.requests;
  const std::size_t n = r.size();
  const Item first = seq.initial.at(1);
  Item front = first;
  Item back = seq.initial.at(2);

  PhaseDecomposition out;
  std::size_t t = 0;
  while (t < n) {
    Phase phase;
    phase.type = front == first ? 1 : 2;
    phase.begin = t;
    std::size_t u = t;
    while (u < n && r[u] == front) ++u;
    phase.j = u - t;
    // r[u] is now `back`; the phase needs at least two more requests.
    if (u + 1 >= n) break;
    if (r[u + 1] == back) {
      phase.form = PhaseForm::A;
      phase.end = u + 2;
    } else {
      phase.k = 1;
      u += 2;
      bool complete = false;
      while (u < n) {
        if (r[u] == front) {
          phase.form = PhaseForm::C;
          phase.end = u + 1;
          complete = true;
          break;
        }
        if (u + 1 >= n) break;
        if (r[u + 1] == back) {
          phase.form = PhaseForm::B;
          phase.end = u + 2;
          complete = true;
          break;
        }
        ++phase.k;
        u += 2;
      }
      if (!complete) break;
    }
    out.phases.push_back(phase);
    if (phase.form != PhaseForm::C) std::swap(front, back);
    t = phase.end;
  }
  out.residual_begin = t;
  out.residual.assign(r.begin() + static_cast<std::ptrdiff_t>(t), r.end());
  return out;
}

std::vector<Item> expand_phases(const PhaseDecomposition& decomposition,
                                Item front, Item back) {
  std::vector<Item> out;
  for (const Phase& phase : decomposition.phases) {
    out.insert(out.end(), phase.j, front);
    for (std::size_t i = 0; i < phase.k; ++i) {
      out.push_back(back);
      out.push_back(front);
    }
    switch (phase.form) {
      case PhaseForm::A:
      case PhaseForm::B:
        out.push_back(back);
        out.push_back(back);
        std::swap(front, back);
        break;
      case PhaseForm::C:
        out.push_back(front);
        break;
    }
  }
  out.insert(out.end(), decomposition.residual.begin(),
             decomposition.residual.end());
  return out;
}

}  // namespace lup
