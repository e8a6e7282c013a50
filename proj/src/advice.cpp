#include "lup/advice.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "lup/algorithms.hpp"
#include "lup/offline.hpp"

namespace lup {

bool AdviceTape::read() {
  if (cursor_ >= bits_.size())
    throw InvalidAdvice("advice tape exhausted after " +
                        std::to_string(bits_.size()) + " bits");
  return bits_[cursor_++];
}

std::vector<bool> AdviceTape::read(std::size_t count) {
  if (cursor_ + count > bits_.size())
    throw InvalidAdvice("advice tape exhausted: need " + std::to_string(count) +
                        " bits at offset " + std::to_string(cursor_) +
                        " of " + std::to_string(bits_.size()));
  std::vector<bool> out(bits_.begin() + static_cast<std::ptrdiff_t>(cursor_),
                        bits_.begin() +
                            static_cast<std::ptrdiff_t>(cursor_ + count));
  cursor_ += count;
  return out;
}

std::string AdviceTape::to_ascii() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out += b ? '1' : '0';
  return out;
}

AdviceTape AdviceTape::from_ascii(const std::string& text) {
  AdviceTape tape;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1')
      throw InvalidAdvice(std::string("advice tape holds non-bit character '") +
                          c + "'");
    tape.append(c == '1');
  }
  return tape;
}

std::string AdviceTape::to_packed() const {
  std::string out;
  const std::uint64_t n = bits_.size();
  for (int i = 0; i < 8; ++i) out += static_cast<char>(n >> (8 * i) & 0xff);
  std::uint8_t byte = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    byte = static_cast<std::uint8_t>(byte << 1 | bits_[i]);
    if (i % 8 == 7) {
      out += static_cast<char>(byte);
      byte = 0;
    }
  }
  if (bits_.size() % 8)
    out += static_cast<char>(byte << (8 - bits_.size() % 8));
  return out;
}

AdviceTape AdviceTape::from_packed(const std::string& bytes) {
  if (bytes.size() < 8) throw InvalidAdvice("packed tape shorter than header");
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i)
    n |= std::uint64_t{static_cast<unsigned char>(bytes[i])} << (8 * i);
  if (bytes.size() - 8 != (n + 7) / 8)
    throw InvalidAdvice("packed tape length does not match its header");
  AdviceTape tape;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto byte = static_cast<unsigned char>(bytes[8 + i / 8]);
    tape.append(byte >> (7 - i % 8) & 1);
  }
  return tape;
}

const char* algorithm_id(Selector selector) {
  switch (selector) {
    case Selector::Ts:
      return "ts";
    case Selector::MtfOdd:
      return "mtfo";
    case Selector::MtfEven:
      return "mtfe";
  }
  return "?";
}

Selector read_selector(AdviceTape& tape) {
  const bool high = tape.read();
  const bool low = tape.read();
  const int code = high << 1 | low;
  if (code == 0b11) throw InvalidAdvice("selector code 11 is not assigned");
  return static_cast<Selector>(code);
}

void write_selector(AdviceTape& tape, Selector selector) {
  const auto code = static_cast<std::uint8_t>(selector);
  tape.append(code >> 1 & 1);
  tape.append(code & 1);
}

Best3Costs best3_costs(const RequestSequence& seq, CostModel model) {
  Timestamp ts;
  auto odd = MoveToFrontEveryOther::odd();
  auto even = MoveToFrontEveryOther::even();
  return {simulate(ts, seq, model), simulate(odd, seq, model),
          simulate(even, seq, model)};
}

Selector best3_oracle(const RequestSequence& seq, CostModel model) {
  const Best3Costs costs = best3_costs(seq, model);
  Selector best = Selector::Ts;
  Cost best_cost = costs.ts.total();
  if (costs.mtf_odd.total() < best_cost) {
    best = Selector::MtfOdd;
    best_cost = costs.mtf_odd.total();
  }
  if (costs.mtf_even.total() < best_cost) best = Selector::MtfEven;
  return best;
}

CostLedger best3_follower(AdviceTape& tape, const RequestSequence& seq,
                          CostModel model) {
  const Selector selector = read_selector(tape);
  return simulate(algorithm_id(selector), seq, model);
}

AdviceTape subset_oracle(const RequestSequence& seq, CostModel model) {
  const SubsetTransferSolution solution = opt_subset_transfer_dp(seq, model);
  AdviceTape tape;
  for (const auto& bits : solution.transfers) tape.append(bits);
  return tape;
}

CostLedger subset_follower(AdviceTape& tape, const RequestSequence& seq,
                           CostModel model) {
  ListState list = seq.initial;
  CostLedger ledger;
  for (Item r : seq.requests) {
    const std::size_t pos = list.position(r);
    const std::vector<bool> flags = tape.read(pos - 1);
    std::vector<Item> kept, moved;
    for (std::size_t p = 1; p < pos; ++p)
      (flags[p - 1] ? moved : kept).push_back(list.at(p));
    std::vector<Item> order = std::move(kept);
    order.push_back(r);
    order.insert(order.end(), moved.begin(), moved.end());
    for (std::size_t p = pos + 1; p <= list.size(); ++p)
      order.push_back(list.at(p));
    ledger.paid_exchanges += paid_rearrange(list, ListState(std::move(order)));
    ledger.access += access(list, r, model);
  }
  return ledger;
}

namespace {

double x_log2_x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

}  // namespace

double advice_lower_bound_rate(double gamma) {
  if (!(gamma > 1.0) || gamma > 15.0 / 14.0 + 1e-12)
    throw std::domain_error("competitive ratio must lie in (1, 15/14]");
  const double wrong = 7.0 * gamma - 7.0;
  const double right = 8.0 - 7.0 * gamma;
  const double rate = (1.0 + x_log2_x(wrong) + x_log2_x(right)) / 5.0;
  // Rounding leaves a tiny negative value at gamma = 15/14.
  return rate < 0.0 ? 0.0 : rate;
}

double advice_lower_bound(double gamma, std::size_t n) {
  return advice_lower_bound_rate(gamma) * static_cast<double>(n);
}

}  // namespace lup
