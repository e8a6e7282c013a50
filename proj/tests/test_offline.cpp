#include <doctest.h>

#include <cstdlib>

#include "lup/generators.hpp"
#include "lup/offline.hpp"
#include "support.hpp"

using namespace lup;
using lup::test::seq;

TEST_CASE("opt_dp on single rounds") {
  CHECK(opt_dp(seq("xy", "yyyxx"), CostModel::Full).total_cost == 7);
  CHECK(opt_dp(seq("xy", "yxxxx"), CostModel::Full).total_cost == 6);
  CHECK(opt_dp(seq("xy", ""), CostModel::Full).total_cost == 0);
  CHECK(opt_dp(RequestSequence(ListState::identity(3), {}), CostModel::Full).trace.empty());
}

TEST_CASE("opt_dp on the alternating two-item family") {
  for (std::size_t k : {0u, 1u, 4u, 50u})
    CHECK(opt_dp(gen_alpha(k), CostModel::Partial).total_cost == 2 * k);
}

TEST_CASE("opt_dp equals the free-exchange brute force") {
  for (CostModel model : {CostModel::Full, CostModel::Partial}) {
    for (std::size_t n = 0; n <= 7; ++n)
      lup::test::for_each_sequence(2, n, [&](const RequestSequence& s) {
        CHECK(opt_dp(s, model).total_cost == lup::test::brute_force_opt(s, model));
      });
    for (std::size_t n = 0; n <= 5; ++n)
      lup::test::for_each_sequence(3, n, [&](const RequestSequence& s) {
        CHECK(opt_dp(s, model).total_cost == lup::test::brute_force_opt(s, model));
      });
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = lup::test::random_sequence(rng, 3, 9);
    CHECK(opt_dp(s, CostModel::Full).total_cost ==
          lup::test::brute_force_opt(s, CostModel::Full));
  }
}

TEST_CASE("opt_dp traces replay to their cost") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = lup::test::random_sequence(rng, 1 + rng() % 5, rng() % 15);
    for (CostModel model : {CostModel::Full, CostModel::Partial}) {
      const auto sol = opt_dp(s, model);
      CHECK(replay_trace(s, sol, model) == sol.total_cost);
      CHECK(sol.ledger().total() == sol.total_cost);
      CHECK(sol.trace.size() == s.length());
    }
  }
}

TEST_CASE("opt_dp capacity guard") {
  const RequestSequence big(ListState::identity(7), {6});
  CHECK_THROWS_AS(opt_dp(big, CostModel::Full), CapacityError);
  CHECK(opt_dp(big, CostModel::Full, 7).total_cost == 7);
  const RequestSequence huge(ListState::identity(11), {0});
  CHECK_THROWS_AS(opt_dp(huge, CostModel::Full, 11), CapacityError);
}

TEST_CASE("subset-transfer DP") {
  const auto s = seq("xy", "yyyxx");
  const auto st = opt_subset_transfer_dp(s, CostModel::Full);
  CHECK(st.solution.total_cost == 7);
  CHECK(st.transfers.size() == 5);

  const auto front = opt_subset_transfer_dp(seq("abc", "a"), CostModel::Full);
  CHECK(front.transfers.at(0).empty());
  CHECK(front.solution.ledger().paid_exchanges == 0);
}

TEST_CASE("subset transfers lose nothing against unrestricted exchanges") {
  // Depth-first over all sequences, sharing prefixes through the frontier.
  for (std::size_t l = 2; l <= 4; ++l) {
    const std::size_t max_n = l == 4 ? 7 : 10;
    for (CostModel model : {CostModel::Full, CostModel::Partial}) {
      OptFrontier any(ListState::identity(l), model,
                      OptFrontier::Moves::Unrestricted, 4);
      OptFrontier subset(ListState::identity(l), model,
                         OptFrontier::Moves::SubsetTransfer, 4);
      std::size_t mismatches = 0, visited = 0;
      std::function<void()> dfs = [&] {
        ++visited;
        if (any.cost() != subset.cost()) ++mismatches;
        if (any.depth() == max_n) return;
        for (Item r = 0; r < l; ++r) {
          any.push(r);
          subset.push(r);
          dfs();
          any.pop();
          subset.pop();
        }
      };
      dfs();
      CHECK(mismatches == 0);
      CHECK(visited > 0);
    }
  }
}

TEST_CASE("the frontier agrees with opt_dp") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t l = 1 + rng() % 4;
    const auto s = lup::test::random_sequence(rng, l, rng() % 12);
    OptFrontier f(s.initial, CostModel::Full, OptFrontier::Moves::Unrestricted, 6);
    for (Item r : s.requests) f.push(r);
    CHECK(f.cost() == opt_dp(s, CostModel::Full).total_cost);
    OptFrontier g(s.initial, CostModel::Full, OptFrontier::Moves::SubsetTransfer, 6);
    for (Item r : s.requests) g.push(r);
    CHECK(g.cost() == opt_subset_transfer_dp(s, CostModel::Full).solution.total_cost);
  }
}

TEST_CASE("two-item optimum") {
  // x^j (yx)^k yy costs k+1 and x^j (yx)^k x costs k.
  for (std::size_t j = 1; j <= 3; ++j)
    for (std::size_t k = 0; k <= 5; ++k) {
      std::string head(j, 'x');
      for (std::size_t r = 0; r < k; ++r) head += "yx";
      CHECK(pair_opt(seq("xy", head + "yy"), CostModel::Partial) == k + 1);
      if (k > 0) CHECK(pair_opt(seq("xy", head + "x"), CostModel::Partial) == k);
    }
  for (CostModel model : {CostModel::Full, CostModel::Partial})
    for (std::size_t n = 0; n <= 12; ++n)
      lup::test::for_each_sequence(2, n, [&](const RequestSequence& s) {
        CHECK(pair_opt(s, model) == opt_dp(s, model).total_cost);
      });
  CHECK_THROWS_AS(pair_opt(seq("abc", "c"), CostModel::Full), MalformedSequence);
}

TEST_CASE("move-on-repeat strategy") {
  CHECK(move_on_repeat(seq("xy", "yyyxx"), CostModel::Full).total() == 7);
  CHECK(move_on_repeat(seq("xy", "yxxxx"), CostModel::Full).total() == 6);
  for (std::size_t n = 0; n <= 10; ++n)
    lup::test::for_each_sequence(2, n, [&](const RequestSequence& s) {
      CHECK(move_on_repeat(s, CostModel::Partial).total() ==
            pair_opt(s, CostModel::Partial));
    });
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = lup::test::random_sequence(rng, 4, 12);
    CHECK(move_on_repeat(s, CostModel::Full).total() >= opt_dp(s, CostModel::Full).total_cost);
  }
}

TEST_CASE("phase partition") {
  SUBCASE("form a") {
    const auto d = partition_phases(seq("xy", "xyy"));
    REQUIRE(d.phases.size() == 1);
    CHECK(d.phases[0].type == 1);
    CHECK(d.phases[0].form == PhaseForm::A);
    CHECK(d.phases[0].j == 1);
    CHECK(d.residual.empty());
  }
  SUBCASE("form c without leading x") {
    const auto d = partition_phases(seq("xy", "yxx"));
    REQUIRE(d.phases.size() == 1);
    CHECK(d.phases[0].form == PhaseForm::C);
    CHECK(d.phases[0].j == 0);
    CHECK(d.phases[0].k == 1);
  }
  SUBCASE("type changes after a phase ending with yy") {
    const auto d = partition_phases(seq("xy", "yxyyxx"));
    REQUIRE(d.phases.size() == 2);
    CHECK(d.phases[0].form == PhaseForm::B);
    CHECK(d.phases[0].j == 0);
    CHECK(d.phases[0].k == 1);
    CHECK(d.phases[0].type == 1);
    CHECK(d.phases[1].type == 2);
    CHECK(d.phases[1].form == PhaseForm::A);
    CHECK(d.phases[1].j == 0);
    CHECK(d.phases[1].begin == 4);
    CHECK(d.phases[1].end == 6);
  }
  SUBCASE("round trip") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = lup::test::random_sequence(rng, 2, rng() % 40);
      const auto d = partition_phases(s);
      CHECK(expand_phases(d, s.initial.at(1), s.initial.at(2)) == s.requests);
      std::size_t at = 0;
      for (const auto& p : d.phases) {
        CHECK(p.begin == at);
        at = p.end;
      }
      CHECK(d.residual_begin == at);
      CHECK(at + d.residual.size() == s.length());
    }
  }
  CHECK_THROWS_AS(partition_phases(seq("abc", "ab")), MalformedSequence);
}

TEST_CASE("dp capacity follows the environment") {
  CHECK(dp_capacity() == 6);
  setenv("LUP_MAX_L", "7", 1);
  CHECK(dp_capacity() == 7);
  unsetenv("LUP_MAX_L");
  CHECK(dp_capacity() == 6);
}
