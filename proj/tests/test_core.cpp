#include <doctest.h>

#include "lup/core.hpp"
#include "support.hpp"

using namespace lup;
using lup::test::names;
using lup::test::order;

TEST_CASE("access cost by position") {
  const auto xy = ListState::identity(2);
  CHECK(access(xy, 1, CostModel::Full) == 2);
  CHECK(access(xy, 0, CostModel::Partial) == 0);
  CHECK(access(ListState::identity(3), 2, CostModel::Full) == 3);
  CHECK(access(ListState::identity(3), 2, CostModel::Partial) == 2);
  CHECK_THROWS_AS(access(xy, 5, CostModel::Full), MalformedSequence);
}

TEST_CASE("free moves only go forward") {
  const auto xyz = ListState::identity(3);
  CHECK(names(free_move(xyz, 2, 1), "xyz") == "zxy");
  CHECK(names(free_move(xyz, 2, 3), "xyz") == "xyz");
  CHECK(names(free_move(xyz, 2, 2), "xyz") == "xzy");
  CHECK_THROWS_AS(free_move(xyz, 0, 2), InvalidMove);
}

TEST_CASE("paid rearrangement costs the swap distance") {
  ListState xy = ListState::identity(2);
  CHECK(paid_rearrange(xy, order("xy", "yx")) == 1);
  CHECK(names(xy, "xy") == "yx");

  ListState abc = ListState::identity(3);
  CHECK(paid_rearrange(abc, order("abc", "cba")) == 3);
  CHECK(names(abc, "abc") == "cba");
  CHECK(paid_rearrange(abc, order("abc", "cba")) == 0);
  CHECK_THROWS_AS(paid_rearrange(abc, ListState::identity(4)), MalformedSequence);
}

TEST_CASE("kendall tau distance equals BFS over adjacent swaps") {
  for (std::size_t l = 1; l <= 4; ++l) {
    std::vector<Item> a(l), b(l);
    for (Item i = 0; i < l; ++i) a[i] = b[i] = i;
    do {
      do {
        const ListState la(a), lb(b);
        CHECK(kendall_tau_distance(la, lb) == lup::test::bfs_swap_distance(la, lb));
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
  }
}

TEST_CASE("adjacent swap path realises the target") {
  const ListState from = order("abcd", "dbca");
  const ListState to = order("abcd", "acdb");
  ListState walk = from;
  const auto path = adjacent_swap_path(from, to);
  for (std::size_t pos : path) walk.swap_adjacent(pos);
  CHECK(walk == to);
  CHECK(path.size() == kendall_tau_distance(from, to));
}

TEST_CASE("list state validation") {
  CHECK_THROWS_AS(ListState({0, 0}), MalformedSequence);
  CHECK_THROWS_AS(ListState({0, 2}), MalformedSequence);
  ListState l = ListState::identity(3);
  CHECK(l.is_valid_permutation());
  CHECK(l.position(2) == 3);
  CHECK(l.at(1) == 0);
  l.move_to_front(2);
  CHECK(l.precedes(2, 0));
  CHECK_THROWS_AS(l.swap_adjacent(3), InvalidMove);
}

TEST_CASE("request sequences reject unknown items") {
  CHECK_THROWS_AS(RequestSequence(ListState::identity(2), {0, 2}), MalformedSequence);
  const RequestSequence empty(ListState::identity(3), {});
  CHECK(empty.empty());
  CHECK(empty.list_size() == 3);
}

TEST_CASE("cost model names") {
  CHECK(parse_cost_model("full") == CostModel::Full);
  CHECK(parse_cost_model("partial") == CostModel::Partial);
  CHECK(to_string(CostModel::Partial) == "partial");
  CHECK_THROWS_AS(parse_cost_model("half"), Error);
}
