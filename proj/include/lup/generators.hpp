// Deterministic constructors for the adversarial sequence families, plus
// seeded random sequences.
//
// Two-item families run on [x, y] with x = 0 and y = 1. The l-item families
// run on the identity order [a_1, ..., a_l] with a_i = i - 1.

#ifndef LUP_GENERATORS_HPP
#define LUP_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lup/core.hpp"

namespace lup {

inline constexpr Item kItemX = 0;
inline constexpr Item kItemY = 1;

// One five-request round per bit: 0 -> y y y x x, 1 -> y x x x x.
RequestSequence gen_bitstring(const std::vector<bool>& bits);
RequestSequence gen_bitstring(const std::string& bits);

// x (y x x x  y x x x)^k
RequestSequence gen_alpha(std::size_t k);

// (y y x x)^k
RequestSequence gen_beta2(std::size_t k);

// (a_1..a_l, a_1^2..a_l^2, a_l..a_1, a_l^2..a_1^2)^m
RequestSequence gen_beta_l(std::size_t l, std::size_t m);

// (a_l^3, a_{l-1}^3, ..., a_1^3)^(2s)
RequestSequence gen_gamma(std::size_t l, std::size_t s);

// (a_1..a_l, a_1^3..a_l^3, a_l..a_1, a_l^3..a_1^3)^m
RequestSequence gen_delta(std::size_t l, std::size_t m);

// Uniform i.i.d. requests over l items from the identity order.
RequestSequence gen_random(std::size_t l, std::size_t n, std::uint64_t seed);

// Appends b's requests to a's. Both must share the initial order.
RequestSequence concat(const RequestSequence& a, const RequestSequence& b);

enum class Family { Bitstring, Alpha, Beta2, BetaL, Gamma, Delta, Random };

std::string to_string(Family family);
// Accepts bitstring, alpha, beta2, beta, gamma, delta, random.
Family parse_family(const std::string& name);

struct FamilySpec {
  Family family = Family::Random;
  std::string bits;  // Bitstring
  std::size_t k = 0;  // Alpha, Beta2
  std::size_t l = 0;  // BetaL, Gamma, Delta, Random
  std::size_t m = 0;  // BetaL, Delta
  std::size_t s = 0;  // Gamma
  std::size_t n = 0;  // Random
  std::uint64_t seed = 0;

  // Parameters rendered as "k=3", "l=40;m=5", ...
  std::string describe() const;
};

// Throws Error on out-of-range parameters.
RequestSequence generate(const FamilySpec& spec);
std::size_t expected_length(const FamilySpec& spec);

}  // namespace lup

#endif  // LUP_GENERATORS_HPP
