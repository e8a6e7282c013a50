#include <doctest.h>

#include <json.hpp>

#include "lup/algorithms.hpp"
#include "lup/analysis.hpp"
#include "lup/generators.hpp"
#include "support.hpp"

using namespace lup;
using lup::test::seq;

TEST_CASE("ratios") {
  const Ratio r = Ratio::of(100, 60);
  CHECK(r.num == 5);
  CHECK(r.den == 3);
  CHECK(r.fraction() == "5/3");
  CHECK(r.decimal() == "1.666667");
  CHECK(Ratio::of(0, 5).fraction() == "0/1");
  CHECK_THROWS_AS(Ratio::of(1, 0), Error);
}

TEST_CASE("run reports") {
  const auto alpha = gen_alpha(10);
  const RunReport r = run("mtfo", alpha, CostModel::Partial, OptMode::Auto);
  CHECK(r.ledger.total() == 40);
  REQUIRE(r.opt);
  CHECK(*r.opt == 20);
  CHECK(r.ratio()->value() == 2.0);

  const auto both = concat(gen_alpha(10), gen_beta2(20));
  const RunReport t = run("ts", both, CostModel::Partial, OptMode::Pair);
  CHECK(t.ledger.total() == 100);
  CHECK(*t.opt == 60);
  CHECK(t.ratio()->fraction() == "5/3");

  const RunReport e = run("mtf", RequestSequence(ListState::identity(2), {}),
                          CostModel::Full, OptMode::Auto);
  CHECK(e.ledger.total() == 0);
  CHECK(!e.ratio());

  const RunReport b = run("best3", both, CostModel::Partial, OptMode::None);
  CHECK(b.ledger.total() == 100);
  CHECK(!b.opt);

  const auto big = gen_random(8, 20, 1);
  CHECK_THROWS_AS(run("mtf", big, CostModel::Full, OptMode::Dp), CapacityError);
  const RunReport a = run("mtf", big, CostModel::Full, OptMode::Auto);
  CHECK(a.opt_is_upper_bound);
  CHECK(!run("mtf", gen_random(4, 20, 1), CostModel::Full, OptMode::Auto).opt_is_upper_bound);
}

TEST_CASE("report serialisation") {
  const RunReport r = run("mtfo", gen_alpha(10), CostModel::Partial, OptMode::Auto,
                          {"alpha", "k=10"});
  CHECK(csv_header() == "family,params,algorithm,model,n,l,access,exchanges,total,opt,ratio");
  CHECK(to_csv(r) == "alpha,k=10,mtfo,partial,81,2,40,0,40,20,2.000000");
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["total"] == 40);
  CHECK(j["opt"] == 20);
  CHECK(j["family"] == "alpha");

  CHECK(parse_opt_mode("opt:dp") == OptMode::Dp);
  CHECK(parse_opt_mode("pair") == OptMode::Pair);
  CHECK_THROWS_AS(parse_opt_mode("opt:guess"), Error);
}

TEST_CASE("projection") {
  const auto s = seq("abc", "abcac");
  const auto p = project(s, 0, 2);
  CHECK(p.requests == std::vector<Item>{0, 1, 0, 1});
  CHECK(p.list_size() == 2);
  CHECK(project(seq("abc", ""), 0, 1).empty());
  // Relative initial order is kept: c before a in [c, b, a].
  const RequestSequence rev(ListState({2, 1, 0}), {0, 2});
  const auto q = project(rev, 0, 2);
  CHECK(q.initial.at(1) == 1);
}

TEST_CASE("factoring") {
  std::mt19937_64 rng(1);
  CHECK(factoring_check("mtf", gen_random(4, 20, 3)));
  CHECK(factoring_check("ts", gen_random(3, 15, 4)));
  CHECK(factoring_check("mtfo", RequestSequence(ListState::identity(3), {})));
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = lup::test::random_sequence(rng, 1 + rng() % 5, rng() % 30);
    for (const char* alg : {"mtf", "ts", "mtfo", "mtfe"}) {
      const auto c = factoring_costs(alg, s);
      CHECK(c.whole == c.sum_of_pairs);
    }
  }
  CHECK_THROWS_AS(factoring_check("bit:3", gen_random(3, 5, 1)), UnsupportedAlgorithm);
}

TEST_CASE("potential audit") {
  for (std::size_t n = 0; n <= 8; ++n)
    lup::test::for_each_sequence(2, n, [&](const RequestSequence& s) {
      const auto audit = potential_audit(s, opt_dp(s, CostModel::Full));
      CHECK(audit.violations == 0);
      CHECK(audit.phi_initial == 0);
      CHECK(audit.mtf_odd + audit.mtf_even <= 4 * audit.opt);
    });
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = lup::test::random_sequence(rng, 4, 12);
    const auto sol = opt_dp(s, CostModel::Full);
    const auto audit = potential_audit(s, sol);
    CHECK(audit.violations == 0);
    CHECK(audit.opt == sol.total_cost);
    for (const auto& e : audit.events) CHECK(e.within_bound());
  }
}

TEST_CASE("potential weights") {
  const auto xy = ListState::identity(2);
  const ListState yx({1, 0});
  CHECK(potential(xy, xy, {0, 0}, xy, {1, 1}) == 0);
  // x before y online, y before x in OPT: weight 1 when y's bit is 1, else 2.
  CHECK(potential(yx, xy, {0, 1}, xy, {1, 0}) == 3);
}

TEST_CASE("phase cost table") {
  const auto a = phase_cost_table(seq("xy", "xyy"));
  REQUIRE(a.rows.size() == 1);
  CHECK(a.rows[0].mtf_odd + a.rows[0].mtf_even == 3);
  CHECK(a.rows[0].ts == 2);
  CHECK(a.rows[0].opt == 1);
  CHECK(a.rows[0].sum() == 5 * a.rows[0].opt);

  const auto c = phase_cost_table(seq("xy", "xyxx"));
  REQUIRE(c.rows.size() == 1);
  CHECK(c.rows[0].critical());
  CHECK(c.rows[0].mtf2() == 3);
  CHECK(c.rows[0].opt == 1);

  CHECK(phase_cost_table(seq("xy", "")).rows.empty());

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = lup::test::random_sequence(rng, 2, rng() % 50);
    const auto t = phase_cost_table(s);
    for (const auto& row : t.rows) CHECK(row.sum() <= 5 * row.opt);
    CHECK(t.total.mtf_odd + t.residual.mtf_odd ==
          simulate("mtfo", s, CostModel::Partial).total());
  }
}
