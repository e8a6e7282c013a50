// Online list-update algorithms behind a serve-one-request interface.
//
// Every algorithm here uses free exchanges only, so the ledger it produces
// never carries paid exchanges.

#ifndef LUP_ALGORITHMS_HPP
#define LUP_ALGORITHMS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lup/core.hpp"

namespace lup {

class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;

  // Starts a fresh run from `initial`; all per-item state is cleared.
  virtual void reset(const ListState& initial) = 0;
  // Serves one request and returns its access cost.
  virtual Cost serve(Item item, CostModel model) = 0;

  virtual const ListState& list() const = 0;
  virtual std::string id() const = 0;
  virtual std::unique_ptr<OnlineAlgorithm> clone() const = 0;
};

class MoveToFront final : public OnlineAlgorithm {
 public:
  void reset(const ListState& initial) override { list_ = initial; }
  Cost serve(Item item, CostModel model) override;
  const ListState& list() const override { return list_; }
  std::string id() const override { return "mtf"; }
  std::unique_ptr<OnlineAlgorithm> clone() const override {
    return std::make_unique<MoveToFront>(*this);
  }

 private:
  ListState list_;
};

// TIMESTAMP: an accessed item x is inserted in front of the first item y
// (scanning from the front) that precedes x and was requested at most once
// since the previous request to x. First requests never move anything.
class Timestamp final : public OnlineAlgorithm {
 public:
  void reset(const ListState& initial) override;
  Cost serve(Item item, CostModel model) override;
  const ListState& list() const override { return list_; }
  std::string id() const override { return "ts"; }
  std::unique_ptr<OnlineAlgorithm> clone() const override {
    return std::make_unique<Timestamp>(*this);
  }

 private:
  static constexpr std::uint64_t kNever = UINT64_MAX;

  ListState list_;
  std::uint64_t clock_ = 0;
  std::vector<std::uint64_t> last_;      // most recent request time
  std::vector<std::uint64_t> previous_;  // the one before that
};

// Move-To-Front-Every-Other-Access. Each item carries a bit that is flipped on
// every access; the item moves to the front exactly when the flip leaves 0.
// All-ones start bits give MTF-Odd, all-zeros give MTF-Even.
class MoveToFrontEveryOther final : public OnlineAlgorithm {
 public:
  enum class Start { Odd, Even, Explicit };

  static MoveToFrontEveryOther odd();
  static MoveToFrontEveryOther even();
  // Bits indexed by item id; their count must match the list size at reset.
  static MoveToFrontEveryOther with_bits(std::vector<std::uint8_t> bits);

  void reset(const ListState& initial) override;
  Cost serve(Item item, CostModel model) override;
  const ListState& list() const override { return list_; }
  std::string id() const override;
  std::unique_ptr<OnlineAlgorithm> clone() const override {
    return std::make_unique<MoveToFrontEveryOther>(*this);
  }

  std::uint8_t bit(Item item) const { return bits_.at(item); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

 private:
  MoveToFrontEveryOther(Start start, std::vector<std::uint8_t> bits)
      : start_(start), start_bits_(std::move(bits)) {}

  Start start_;
  std::vector<std::uint8_t> start_bits_;
  std::vector<std::uint8_t> bits_;
  ListState list_;
};

// BIT: MTF-every-other with start bits drawn from a seeded generator. The
// draw happens at reset, so a fixed seed replays identically.
class RandomBit final : public OnlineAlgorithm {
 public:
  explicit RandomBit(std::uint64_t seed) : seed_(seed) {}

  void reset(const ListState& initial) override;
  Cost serve(Item item, CostModel model) override {
    return inner_->serve(item, model);
  }
  const ListState& list() const override { return inner_->list(); }
  std::string id() const override { return "bit:" + std::to_string(seed_); }
  std::unique_ptr<OnlineAlgorithm> clone() const override;

  const std::vector<std::uint8_t>& bits() const { return inner_->bits(); }

  // The start bits this seed produces for a list of `size` items.
  static std::vector<std::uint8_t> draw_bits(std::uint64_t seed,
                                             std::size_t size);

 private:
  std::uint64_t seed_;
  std::optional<MoveToFrontEveryOther> inner_;
};

// Parses mtf, ts, mtfo, mtfe, mtf2:<bitstring>, bit:<seed>. Throws
// UnsupportedAlgorithm for anything else.
std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& id);

// Serves the whole sequence from its initial order.
CostLedger simulate(OnlineAlgorithm& algorithm, const RequestSequence& seq,
                    CostModel model);

// Per-request access costs, same run as simulate().
std::vector<Cost> simulate_costs(OnlineAlgorithm& algorithm,
                                 const RequestSequence& seq, CostModel model);

CostLedger simulate(const std::string& algorithm_id,
                    const RequestSequence& seq, CostModel model);

}  // namespace lup

#endif  // LUP_ALGORITHMS_HPP
