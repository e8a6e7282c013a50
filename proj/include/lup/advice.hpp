// Advice tapes, the offline oracles that write them, and the online
// followers that read them.

#ifndef LUP_ADVICE_HPP
#define LUP_ADVICE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lup/core.hpp"

namespace lup {

class AdviceTape {
 public:
  AdviceTape() = default;
  explicit AdviceTape(std::vector<bool> bits) : bits_(std::move(bits)) {}

  void append(bool bit) { bits_.push_back(bit); }
  void append(const std::vector<bool>& bits) {
    bits_.insert(bits_.end(), bits.begin(), bits.end());
  }

  // Throws InvalidAdvice past the end of the tape.
  bool read();
  std::vector<bool> read(std::size_t count);

  std::size_t size() const { return bits_.size(); }
  std::size_t consumed() const { return cursor_; }
  void rewind() { cursor_ = 0; }
  const std::vector<bool>& bits() const { return bits_; }

  // '0'/'1' characters; whitespace is ignored when parsing.
  std::string to_ascii() const;
  static AdviceTape from_ascii(const std::string& text);

  // Little-endian u64 bit count, then bits packed MSB-first into bytes.
  std::string to_packed() const;
  static AdviceTape from_packed(const std::string& bytes);

 private:
  std::vector<bool> bits_;
  std::size_t cursor_ = 0;
};

// Two-bit choice among the three algorithms.
enum class Selector : std::uint8_t { Ts = 0b00, MtfOdd = 0b01, MtfEven = 0b10 };

const char* algorithm_id(Selector selector);
// Reads two bits, high bit first. Code 11 throws InvalidAdvice.
Selector read_selector(AdviceTape& tape);
void write_selector(AdviceTape& tape, Selector selector);

struct Best3Costs {
  CostLedger ts, mtf_odd, mtf_even;
};

Best3Costs best3_costs(const RequestSequence& seq, CostModel model);

// Simulates all three and picks the cheapest; ties go to the smaller code.
Selector best3_oracle(const RequestSequence& seq, CostModel model);

// Reads the selector, then runs the selected algorithm online.
CostLedger best3_follower(AdviceTape& tape, const RequestSequence& seq,
                          CostModel model);

// Tape of per-request subset-transfer bit vectors taken from the optimal
// subset-transfer schedule. Throws CapacityError above the DP limit.
AdviceTape subset_oracle(const RequestSequence& seq, CostModel model);

// Before each request to an item at position i, reads i-1 bits and moves the
// flagged items (front to back) to just behind it, paying the Kendall-tau
// distance of that move; then accesses the item.
CostLedger subset_follower(AdviceTape& tape, const RequestSequence& seq,
                           CostModel model);

// Lower bound on advice bits per request for any algorithm with competitive
// ratio gamma, 1 < gamma <= 15/14. Throws std::domain_error outside.
double advice_lower_bound_rate(double gamma);
double advice_lower_bound(double gamma, std::size_t n);

}  // namespace lup

#endif  // LUP_ADVICE_HPP
