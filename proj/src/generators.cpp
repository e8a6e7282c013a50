#include "lup/generators.hpp"

#include <random>

namespace lup {

namespace {

RequestSequence two_item(std::vector<Item> requests) {
  return RequestSequence(ListState::identity(2), std::move(requests));
}

void require_list(std::size_t l, std::size_t reps, const char* family,
                  const char* reps_name) {
  if (l < 2) throw Error(std::string(family) + " needs l >= 2");
  if (reps < 1)
    throw Error(std::string(family) + " needs " + reps_name + " >= 1");
}

void repeat(std::vector<Item>& out, Item item, std::size_t times) {
  out.insert(out.end(), times, item);
}

// a_1..a_l, a_1^r..a_l^r, a_l..a_1, a_l^r..a_1^r
std::vector<Item> sweep_phase(std::size_t l, std::size_t r) {
  std::vector<Item> out;
  out.reserve(2 * l * (r + 1));
  for (std::size_t i = 0; i < l; ++i) out.push_back(static_cast<Item>(i));
  for (std::size_t i = 0; i < l; ++i) repeat(out, static_cast<Item>(i), r);
  for (std::size_t i = l; i-- > 0;) out.push_back(static_cast<Item>(i));
  for (std::size_t i = l; i-- > 0;) repeat(out, static_cast<Item>(i), r);
  return out;
}

}  // namespace

RequestSequence gen_bitstring(const std::vector<bool>& bits) {
  std::vector<Item> out;
  out.reserve(5 * bits.size());
  for (bool bit : bits) {
    if (bit) {
      out.insert(out.end(), {kItemY, kItemX, kItemX, kItemX, kItemX});
    } else {
      out.insert(out.end(), {kItemY, kItemY, kItemY, kItemX, kItemX});
    }
  }
  return two_item(std::move(out));
}

RequestSequence gen_bitstring(const std::string& bits) {
  std::vector<bool> parsed;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw Error("defining bitstring must consist of 0/1, got '" + bits + "'");
    parsed.push_back(c == '1');
  }
  return gen_bitstring(parsed);
}

RequestSequence gen_alpha(std::size_t k) {
  std::vector<Item> out{kItemX};
  out.reserve(8 * k + 1);
  for (std::size_t i = 0; i < 2 * k; ++i)
    out.insert(out.end(), {kItemY, kItemX, kItemX, kItemX});
  return two_item(std::move(out));
}

RequestSequence gen_beta2(std::size_t k) {
  std::vector<Item> out;
  out.reserve(4 * k);
  for (std::size_t i = 0; i < k; ++i)
    out.insert(out.end(), {kItemY, kItemY, kItemX, kItemX});
  return two_item(std::move(out));
}

RequestSequence gen_beta_l(std::size_t l, std::size_t m) {
  require_list(l, m, "beta", "m");
  const auto phase = sweep_phase(l, 2);
  std::vector<Item> out;
  out.reserve(phase.size() * m);
  for (std::size_t i = 0; i < m; ++i)
    out.insert(out.end(), phase.begin(), phase.end());
  return RequestSequence(ListState::identity(l), std::move(out));
}

RequestSequence gen_gamma(std::size_t l, std::size_t s) {
  require_list(l, s, "gamma", "s");
  std::vector<Item> out;
  out.reserve(6 * l * s);
  for (std::size_t rep = 0; rep < 2 * s; ++rep)
    for (std::size_t i = l; i-- > 0;) repeat(out, static_cast<Item>(i), 3);
  return RequestSequence(ListState::identity(l), std::move(out));
}

RequestSequence gen_delta(std::size_t l, std::size_t m) {
  require_list(l, m, "delta", "m");
  const auto phase = sweep_phase(l, 3);
  std::vector<Item> out;
  out.reserve(phase.size() * m);
  for (std::size_t i = 0; i < m; ++i)
    out.insert(out.end(), phase.begin(), phase.end());
  return RequestSequence(ListState::identity(l), std::move(out));
}

RequestSequence gen_random(std::size_t l, std::size_t n, std::uint64_t seed) {
  if (l < 1) throw Error("random sequences need l >= 1");
  // Plain modulo reduction keeps the output identical across standard
  // libraries; the bias is negligible for small l.
  std::mt19937_64 rng(seed);
  std::vector<Item> out(n);
  for (auto& r : out) r = static_cast<Item>(rng() % l);
  return RequestSequence(ListState::identity(l), std::move(out));
}

RequestSequence concat(const RequestSequence& a, const RequestSequence& b) {
  if (!(a.initial == b.initial))
    throw MalformedSequence("concatenated sequences start from different lists");
  std::vector<Item> out = a.requests;
  out.insert(out.end(), b.requests.begin(), b.requests.end());
  return RequestSequence(a.initial, std::move(out));
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Bitstring:
      return "bitstring";
    case Family::Alpha:
      return "alpha";
    case Family::Beta2:
      return "beta2";
    case Family::BetaL:
      return "beta";
    case Family::Gamma:
      return "gamma";
    case Family::Delta:
      return "delta";
    case Family::Random:
      return "random";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::Bitstring, Family::Alpha, Family::Beta2,
                   Family::BetaL, Family::Gamma, Family::Delta, Family::Random})
    if (to_string(f) == name) return f;
  throw Error("unknown sequence family '" + name + "'");
}

std::string FamilySpec::describe() const {
  switch (family) {
    case Family::Bitstring:
      return "bits=" + bits;
    case Family::Alpha:
    case Family::Beta2:
      return "k=" + std::to_string(k);
    case Family::BetaL:
    case Family::Delta:
      return "l=" + std::to_string(l) + ";m=" + std::to_string(m);
    case Family::Gamma:
      return "l=" + std::to_string(l) + ";s=" + std::to_string(s);
    case Family::Random:
      return "l=" + std::to_string(l) + ";n=" + std::to_string(n) +
             ";seed=" + std::to_string(seed);
  }
  return {};
}

RequestSequence generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Bitstring:
      return gen_bitstring(spec.bits);
    case Family::Alpha:
      return gen_alpha(spec.k);
    case Family::Beta2:
      return gen_beta2(spec.k);
    case Family::BetaL:
      return gen_beta_l(spec.l, spec.m);
    case Family::Gamma:
      return gen_gamma(spec.l, spec.s);
    case Family::Delta:
      return gen_delta(spec.l, spec.m);
    case Family::Random:
      return gen_random(spec.l, spec.n, spec.seed);
  }
  throw Error("unknown family");
}

std::size_t expected_length(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Bitstring:
      return 5 * spec.bits.size();
    case Family::Alpha:
      return 8 * spec.k + 1;
    case Family::Beta2:
      return 4 * spec.k;
    case Family::BetaL:
      return 6 * spec.l * spec.m;
    case Family::Gamma:
      return 6 * spec.l * spec.s;
    case Family::Delta:
      return 8 * spec.l * spec.m;
    case Family::Random:
      return spec.n;
  }
  return 0;
}

}  // namespace lup
