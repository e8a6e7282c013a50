#include <doctest.h>

#include "lup/algorithms.hpp"
#include "lup/generators.hpp"
#include "lup/offline.hpp"
#include "support.hpp"

using namespace lup;

namespace {

std::string text(const RequestSequence& s, const std::string& names) {
  std::string out;
  for (Item r : s.requests) out += names[r];
  return out;
}

}  // namespace

TEST_CASE("bitstring rounds") {
  CHECK(text(gen_bitstring("0"), "xy") == "yyyxx");
  CHECK(text(gen_bitstring("011"), "xy") == "yyyxxyxxxxyxxxx");
  CHECK(gen_bitstring("").empty());
  CHECK(gen_bitstring(std::vector<bool>{true, false}).length() == 10);
  CHECK_THROWS_AS(gen_bitstring("012"), Error);
}

TEST_CASE("alpha and beta2") {
  CHECK(text(gen_alpha(1), "xy") == "xyxxxyxxx");
  CHECK(text(gen_alpha(0), "xy") == "x");
  CHECK(gen_alpha(3).length() == 25);
  CHECK(text(gen_beta2(1), "xy") == "yyxx");
  CHECK(gen_beta2(0).empty());
  CHECK(gen_beta2(2).length() == 8);
}

TEST_CASE("l-item families spelled out") {
  // a1 = 'a', a2 = 'b'
  CHECK(text(gen_beta_l(2, 1), "ab") == "abaabbbabbaa");
  CHECK(text(gen_gamma(2, 1), "ab") == "bbbaaabbbaaa");
  CHECK(text(gen_delta(2, 1), "ab") == "abaaabbbbabbbaaa");
  for (std::size_t l : {2u, 3u, 7u})
    for (std::size_t m : {1u, 2u}) {
      CHECK(gen_beta_l(l, m).length() == 6 * l * m);
      CHECK(gen_gamma(l, m).length() == 6 * l * m);
      CHECK(gen_delta(l, m).length() == 8 * l * m);
    }
  CHECK(gen_delta(4, 1).initial == ListState::identity(4));
  CHECK_THROWS_AS(gen_beta_l(1, 1), Error);
  CHECK_THROWS_AS(gen_gamma(3, 0), Error);
}

TEST_CASE("cost ratios on the l-item families") {
  const Cost beta_odd = simulate("mtfo", gen_beta_l(30, 4), CostModel::Full).total();
  const Cost beta_ts = simulate("ts", gen_beta_l(30, 4), CostModel::Full).total();
  CHECK(beta_odd == 12900);
  CHECK(beta_ts == 11160);

  const auto gamma = gen_gamma(30, 3);
  const double gamma_ratio =
      static_cast<double>(simulate("ts", gamma, CostModel::Full).total()) /
      simulate("mtfo", gamma, CostModel::Full).total();
  CHECK(std::abs(gamma_ratio - 4.0 / 3.0) <= 0.1 * 4.0 / 3.0);

  const auto delta = gen_delta(30, 4);
  const double delta_ratio =
      static_cast<double>(simulate("mtfo", delta, CostModel::Full).total()) /
      move_on_repeat(delta, CostModel::Full).total();
  CHECK(std::abs(delta_ratio - 2.5) <= 0.25);
}

TEST_CASE("random sequences") {
  CHECK(gen_random(3, 0, 1).empty());
  CHECK(gen_random(4, 50, 9).requests == gen_random(4, 50, 9).requests);
  CHECK(gen_random(4, 50, 9).requests != gen_random(4, 50, 10).requests);
  CHECK(gen_random(3, 8, 7).requests == std::vector<Item>{0, 0, 0, 0, 1, 0, 0, 1});
  CHECK_THROWS_AS(gen_random(0, 3, 1), Error);
}

TEST_CASE("concat") {
  const auto s = concat(gen_alpha(1), gen_beta2(1));
  CHECK(s.length() == 13);
  CHECK_THROWS_AS(concat(gen_alpha(1), gen_gamma(3, 1)), MalformedSequence);
}

TEST_CASE("family specs") {
  for (const char* name : {"bitstring", "alpha", "beta2", "beta", "gamma", "delta", "random"})
    CHECK(to_string(parse_family(name)) == name);
  CHECK_THROWS_AS(parse_family("omega"), Error);

  FamilySpec spec;
  spec.family = Family::BetaL;
  spec.l = 5;
  spec.m = 3;
  CHECK(generate(spec).length() == expected_length(spec));
  CHECK(expected_length(spec) == 90);
  spec.family = Family::Alpha;
  spec.k = 4;
  CHECK(spec.describe() == "k=4");
  CHECK(expected_length(spec) == 33);
  spec.family = Family::Random;
  spec.l = 0;
  CHECK_THROWS_AS(generate(spec), Error);
}
