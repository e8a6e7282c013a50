#include "lup/algorithms.hpp"

#include <charconv>
#include <random>

namespace lup {

Cost MoveToFront::serve(Item item, CostModel model) {
  const Cost cost = access(list_, item, model);
  list_.move_to_front(item);
  return cost;
}

void Timestamp::reset(const ListState& initial) {
  list_ = initial;
  clock_ = 0;
  last_.assign(initial.size(), kNever);
  previous_.assign(initial.size(), kNever);
}

Cost Timestamp::serve(Item item, CostModel model) {
  const Cost cost = access(list_, item, model);
  const std::uint64_t now = clock_++;
  const std::uint64_t since = last_[item];
  if (since != kNever) {
    const std::size_t pos = list_.position(item);
    for (std::size_t p = 1; p < pos; ++p) {
      const Item other = list_.at(p);
      // At most one request to `other` after `since` means its second most
      // recent request (if any) happened before `since`.
      if (previous_[other] == kNever || previous_[other] < since) {
        list_.move_forward(item, p);
        break;
      }
    }
  }
  previous_[item] = last_[item];
  last_[item] = now;
  return cost;
}

MoveToFrontEveryOther MoveToFrontEveryOther::odd() {
  return MoveToFrontEveryOther(Start::Odd, {});
}

MoveToFrontEveryOther MoveToFrontEveryOther::even() {
  return MoveToFrontEveryOther(Start::Even, {});
}

MoveToFrontEveryOther MoveToFrontEveryOther::with_bits(
    std::vector<std::uint8_t> bits) {
  for (auto& b : bits) b = b ? 1 : 0;
  return MoveToFrontEveryOther(Start::Explicit, std::move(bits));
}

void MoveToFrontEveryOther::reset(const ListState& initial) {
  list_ = initial;
  switch (start_) {
    case Start::Odd:
      bits_.assign(initial.size(), 1);
      break;
    case Start::Even:
      bits_.assign(initial.size(), 0);
      break;
    case Start::Explicit:
      if (start_bits_.size() != initial.size())
        throw UnsupportedAlgorithm(
            "mtf2 start bits cover " + std::to_string(start_bits_.size()) +
            " items but the list holds " + std::to_string(initial.size()));
      bits_ = start_bits_;
      break;
  }
}

Cost MoveToFrontEveryOther::serve(Item item, CostModel model) {
  const Cost cost = access(list_, item, model);
  bits_[item] ^= 1;
  if (bits_[item] == 0) list_.move_to_front(item);
  return cost;
}

std::string MoveToFrontEveryOther::id() const {
  switch (start_) {
    case Start::Odd:
      return "mtfo";
    case Start::Even:
      return "mtfe";
    case Start::Explicit:
      break;
  }
  std::string id = "mtf2:";
  for (auto b : start_bits_) id += b ? '1' : '0';
  return id;
}

std::vector<std::uint8_t> RandomBit::draw_bits(std::uint64_t seed,
                                               std::size_t size) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits(size);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
  return bits;
}

void RandomBit::reset(const ListState& initial) {
  inner_ = MoveToFrontEveryOther::with_bits(draw_bits(seed_, initial.size()));
  inner_->reset(initial);
}

std::unique_ptr<OnlineAlgorithm> RandomBit::clone() const {
  return std::make_unique<RandomBit>(*this);
}

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& id) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw UnsupportedAlgorithm("bad numeric parameter in algorithm id '" + id +
                               "'");
  return value;
}

}  // namespace

std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& id) {
  if (id == "mtf") return std::make_unique<MoveToFront>();
  if (id == "ts") return std::make_unique<Timestamp>();
  if (id == "mtfo")
    return std::make_unique<MoveToFrontEveryOther>(MoveToFrontEveryOther::odd());
  if (id == "mtfe")
    return std::make_unique<MoveToFrontEveryOther>(
        MoveToFrontEveryOther::even());
  if (id.rfind("mtf2:", 0) == 0) {
    std::vector<std::uint8_t> bits;
    for (char c : id.substr(5)) {
      if (c != '0' && c != '1')
        throw UnsupportedAlgorithm("mtf2 bitstring must be 0/1: '" + id + "'");
      bits.push_back(c == '1');
    }
    return std::make_unique<MoveToFrontEveryOther>(
        MoveToFrontEveryOther::with_bits(std::move(bits)));
  }
  if (id.rfind("bit:", 0) == 0)
    return std::make_unique<RandomBit>(parse_u64(id.substr(4), id));
  throw UnsupportedAlgorithm("unknown algorithm id '" + id + "'");
}

std::vector<Cost> simulate_costs(OnlineAlgorithm& algorithm,
                                 const RequestSequence& seq, CostModel model) {
  algorithm.reset(seq.initial);
  std::vector<Cost> costs;
  costs.reserve(seq.length());
  for (Item r : seq.requests) costs.push_back(algorithm.serve(r, model));
  return costs;
}

CostLedger simulate(OnlineAlgorithm& algorithm, const RequestSequence& seq,
                    CostModel model) {
  algorithm.reset(seq.initial);
  CostLedger ledger;
  for (Item r : seq.requests) ledger.access += algorithm.serve(r, model);
  return ledger;
}

CostLedger simulate(const std::string& algorithm_id,
                    const RequestSequence& seq, CostModel model) {
  auto algorithm = make_algorithm(algorithm_id);
  return simulate(*algorithm, seq, model);
}

}  // namespace lup
