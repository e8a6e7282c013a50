#include <doctest.h>

#include "lup/algorithms.hpp"
#include "lup/generators.hpp"
#include "support.hpp"

using namespace lup;
using lup::test::names;
using lup::test::seq;

namespace {

// Straightforward reference implementations on plain vectors.
std::vector<Cost> reference_mtf(const RequestSequence& s, CostModel model) {
  std::vector<Item> list = s.initial.order();
  std::vector<Cost> costs;
  for (Item r : s.requests) {
    const auto it = std::find(list.begin(), list.end(), r);
    const auto i = static_cast<Cost>(it - list.begin());
    costs.push_back(model == CostModel::Full ? i + 1 : i);
    list.erase(it);
    list.insert(list.begin(), r);
  }
  return costs;
}

// After accessing x, insert it in front of the first item y ahead of it that
// was requested at most once since the previous request to x.
std::vector<Cost> reference_ts(const RequestSequence& s, CostModel model) {
  std::vector<Item> list = s.initial.order();
  std::vector<Cost> costs;
  for (std::size_t t = 0; t < s.requests.size(); ++t) {
    const Item x = s.requests[t];
    const auto it = std::find(list.begin(), list.end(), x);
    const auto i = static_cast<std::size_t>(it - list.begin());
    costs.push_back(model == CostModel::Full ? i + 1 : i);
    std::size_t prev = t;
    while (prev > 0 && s.requests[prev - 1] != x) --prev;
    if (prev == 0) continue;  // first request to x
    --prev;
    for (std::size_t j = 0; j < i; ++j) {
      const Item y = list[j];
      int count = 0;
      for (std::size_t u = prev + 1; u < t; ++u) count += s.requests[u] == y;
      if (count <= 1) {
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
        list.insert(list.begin() + static_cast<std::ptrdiff_t>(j), x);
        break;
      }
    }
  }
  return costs;
}

}  // namespace

TEST_CASE("move-to-front") {
  MoveToFront mtf;
  mtf.reset(ListState::identity(3));
  CHECK(mtf.serve(2, CostModel::Full) == 3);
  CHECK(names(mtf.list(), "abc") == "cab");

  mtf.reset(ListState::identity(2));
  CHECK(mtf.serve(0, CostModel::Partial) == 0);
  CHECK(names(mtf.list(), "xy") == "xy");
}

TEST_CASE("move-to-front on one descending block of triples") {
  for (std::size_t l : {2u, 5u, 30u}) {
    const auto gamma = gen_gamma(l, 1);
    CHECK(simulate("mtf", gamma, CostModel::Full).total() == 2 * l * l + 4 * l);
  }
}

TEST_CASE("move-to-front and timestamp agree with reference implementations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = lup::test::random_sequence(rng, 1 + rng() % 6, rng() % 40);
    for (CostModel model : {CostModel::Full, CostModel::Partial}) {
      MoveToFront mtf;
      Timestamp ts;
      CHECK(simulate_costs(mtf, s, model) == reference_mtf(s, model));
      CHECK(simulate_costs(ts, s, model) == reference_ts(s, model));
    }
  }
}

TEST_CASE("mtf2 table rows") {
  const auto baba = seq("ab", "baba");
  auto alg = make_algorithm("mtf2:00");
  CHECK(simulate(*alg, baba, CostModel::Partial).total() == 3);
  CHECK(names(alg->list(), "ab") == "ab");

  const auto baa = seq("ab", "baa");
  CHECK(simulate("mtf2:10", baa, CostModel::Partial).total() == 1);
  CHECK(simulate("mtf2:01", baa, CostModel::Partial).total() == 3);
}

TEST_CASE("mtf-odd moves on odd accesses, mtf-even on even ones") {
  const auto s = seq("xy", "yyyy");
  auto odd = MoveToFrontEveryOther::odd();
  CHECK(simulate_costs(odd, s, CostModel::Full) == std::vector<Cost>{2, 1, 1, 1});
  auto even = MoveToFrontEveryOther::even();
  CHECK(simulate_costs(even, s, CostModel::Full) == std::vector<Cost>{2, 2, 1, 1});
  CHECK(odd.id() == "mtfo");
  CHECK(even.id() == "mtfe");
}

TEST_CASE("mtf2 bit count must match the list") {
  auto alg = make_algorithm("mtf2:010");
  CHECK_THROWS_AS(alg->reset(ListState::identity(2)), UnsupportedAlgorithm);
}

TEST_CASE("timestamp") {
  Timestamp ts;
  CHECK(simulate_costs(ts, seq("xy", "xyy"), CostModel::Partial) ==
        std::vector<Cost>{0, 1, 1});

  std::string rounds;
  for (int i = 0; i < 6; ++i) rounds += "yyxx";
  const auto costs = simulate_costs(ts, seq("xy", rounds), CostModel::Partial);
  for (std::size_t round = 1; round < 6; ++round) {
    Cost c = 0;
    for (std::size_t t = 4 * round; t < 4 * round + 4; ++t) c += costs[t];
    CHECK(c == 4);
  }

  const auto alpha = gen_alpha(25);
  CHECK(simulate("ts", alpha, CostModel::Partial).total() == 50);
  Timestamp t2;
  t2.reset(alpha.initial);
  for (Item r : alpha.requests) {
    t2.serve(r, CostModel::Partial);
    CHECK(t2.list().at(1) == kItemX);
  }
}

TEST_CASE("random bit algorithm") {
  std::mt19937_64 rng(3);
  const auto s = lup::test::random_sequence(rng, 3, 60);
  SUBCASE("determinism") {
    CHECK(simulate("bit:42", s, CostModel::Full) == simulate("bit:42", s, CostModel::Full));
    CHECK(RandomBit::draw_bits(42, 3) == RandomBit::draw_bits(42, 3));
  }
  SUBCASE("degenerate seeds reduce to mtf-odd and mtf-even") {
    bool seen_ones = false, seen_zeros = false;
    for (std::uint64_t seed = 0; seed < 200 && !(seen_ones && seen_zeros); ++seed) {
      const auto bits = RandomBit::draw_bits(seed, 3);
      const bool ones = std::all_of(bits.begin(), bits.end(), [](auto b) { return b == 1; });
      const bool zeros = std::all_of(bits.begin(), bits.end(), [](auto b) { return b == 0; });
      if (!ones && !zeros) continue;
      RandomBit bit(seed);
      auto ref = ones ? MoveToFrontEveryOther::odd() : MoveToFrontEveryOther::even();
      CHECK(simulate_costs(bit, s, CostModel::Full) == simulate_costs(ref, s, CostModel::Full));
      seen_ones |= ones;
      seen_zeros |= zeros;
    }
    CHECK(seen_ones);
    CHECK(seen_zeros);
  }
}

TEST_CASE("algorithm ids") {
  for (const char* id : {"mtf", "ts", "mtfo", "mtfe", "mtf2:0110", "bit:7"})
    CHECK(make_algorithm(id)->id() == id);
  CHECK_THROWS_AS(make_algorithm("lru"), UnsupportedAlgorithm);
  CHECK_THROWS_AS(make_algorithm("mtf2:012"), UnsupportedAlgorithm);
  CHECK(simulate("mtf", RequestSequence(ListState::identity(2), {}), CostModel::Full).total() == 0);
}

TEST_CASE("clone keeps state") {
  auto alg = make_algorithm("ts");
  const auto s = seq("abc", "cbcab");
  alg->reset(s.initial);
  for (Item r : s.requests) alg->serve(r, CostModel::Full);
  auto copy = alg->clone();
  CHECK(copy->list() == alg->list());
  CHECK(copy->serve(0, CostModel::Full) == alg->serve(0, CostModel::Full));
}
