// Shared helpers and brute-force oracles for the unit tests.

#ifndef LUP_TESTS_SUPPORT_HPP
#define LUP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "lup/core.hpp"

namespace lup::test {

// Items are named by characters; ids follow their order in `initial`.
inline RequestSequence seq(const std::string& initial, const std::string& requests) {
  std::vector<Item> reqs;
  for (char c : requests) {
    if (c == ' ') continue;
    reqs.push_back(static_cast<Item>(initial.find(c)));
  }
  return RequestSequence(ListState::identity(initial.size()), reqs);
}

inline std::string names(const ListState& list, const std::string& initial) {
  std::string out;
  for (Item i : list.order()) out += initial[i];
  return out;
}

inline ListState order(const std::string& initial, const std::string& text) {
  std::vector<Item> items;
  for (char c : text) items.push_back(static_cast<Item>(initial.find(c)));
  return ListState(items);
}

// Fewest adjacent swaps from a to b, by breadth-first search.
inline Cost bfs_swap_distance(const ListState& a, const ListState& b) {
  std::map<std::vector<Item>, Cost> dist{{a.order(), 0}};
  std::queue<std::vector<Item>> todo;
  todo.push(a.order());
  while (!todo.empty()) {
    auto cur = todo.front();
    todo.pop();
    if (cur == b.order()) return dist[cur];
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      auto next = cur;
      std::swap(next[i], next[i + 1]);
      if (dist.emplace(next, dist[cur] + 1).second) todo.push(next);
    }
  }
  return UINT64_MAX;
}

inline Cost inversions(const std::vector<Item>& a, const std::vector<Item>& b) {
  std::vector<std::size_t> pos(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) pos[b[i]] = i;
  Cost n = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (pos[a[i]] > pos[a[j]]) ++n;
  return n;
}

// Offline optimum allowing both paid rearrangements before a request and
// free forward moves of the accessed item after it. Forward relaxation over
// all permutations; small lists only.
inline Cost brute_force_opt(const RequestSequence& s, CostModel model) {
  std::vector<Item> base = s.initial.order();
  std::sort(base.begin(), base.end());
  std::vector<std::vector<Item>> perms;
  do perms.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));

  std::map<std::vector<Item>, Cost> cur{{s.initial.order(), 0}};
  for (Item r : s.requests) {
    std::map<std::vector<Item>, Cost> arranged;
    for (const auto& p : perms) {
      Cost best = UINT64_MAX;
      for (const auto& [q, c] : cur) best = std::min(best, c + inversions(q, p));
      arranged[p] = best;
    }
    std::map<std::vector<Item>, Cost> next;
    for (const auto& [p, c] : arranged) {
      const std::size_t i = std::find(p.begin(), p.end(), r) - p.begin();
      const Cost a = model == CostModel::Full ? i + 1 : i;
      for (std::size_t target = 0; target <= i; ++target) {
        auto q = p;
        q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
        q.insert(q.begin() + static_cast<std::ptrdiff_t>(target), r);
        auto [it, fresh] = next.emplace(q, c + a);
        if (!fresh) it->second = std::min(it->second, c + a);
      }
    }
    cur = std::move(next);
  }
  Cost best = UINT64_MAX;
  for (const auto& [p, c] : cur) best = std::min(best, c);
  return s.requests.empty() ? 0 : best;
}

// Calls f on every sequence over `items` items of length exactly n.
inline void for_each_sequence(std::size_t items, std::size_t n,
                              const std::function<void(const RequestSequence&)>& f) {
  std::vector<Item> reqs(n, 0);
  while (true) {
    f(RequestSequence(ListState::identity(items), reqs));
    std::size_t i = 0;
    while (i < n && ++reqs[i] == items) reqs[i++] = 0;
    if (i == n) return;
  }
}

inline RequestSequence random_sequence(std::mt19937_64& rng, std::size_t items,
                                       std::size_t n) {
  std::vector<Item> reqs(n);
  for (auto& r : reqs) r = static_cast<Item>(rng() % items);
  return RequestSequence(ListState::identity(items), reqs);
}

}  // namespace lup::test

#endif  // LUP_TESTS_SUPPORT_HPP
