// Experiment runner, competitive-ratio reports, projection/factoring checks
// and the amortized-cost audit of the MTF-Odd/MTF-Even pair.

#ifndef LUP_ANALYSIS_HPP
#define LUP_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lup/core.hpp"
#include "lup/offline.hpp"

namespace lup {

// Exact non-negative ratio kept as a reduced fraction.
struct Ratio {
  Cost num = 0;
  Cost den = 1;

  static Ratio of(Cost num, Cost den);
  double value() const { return static_cast<double>(num) / den; }
  std::string fraction() const;  // "5/3"
  std::string decimal() const;   // "1.666667"
};

enum class OptMode {
  None,
  Auto,      // exact DP when the list fits, otherwise Strategy
  Dp,        // opt_dp
  Subset,    // opt_subset_transfer_dp
  Pair,      // pair_opt, two items only
  Strategy,  // move-on-repeat offline schedule, an upper bound on OPT
};

// Accepts none, auto, dp, subset, pair, strategy, with or without "opt:".
OptMode parse_opt_mode(const std::string& text);
std::string to_string(OptMode mode);

struct RunReport {
  std::string family = "custom";
  std::string params;
  std::string algorithm;
  CostModel model = CostModel::Full;
  std::size_t n = 0;
  std::size_t l = 0;
  CostLedger ledger;
  std::optional<Cost> opt;
  // True when opt came from an offline strategy rather than an exact
  // optimum, making the ratio a lower bound on the competitive ratio.
  bool opt_is_upper_bound = false;

  std::optional<Ratio> ratio() const;
};

struct SequenceDescriptor {
  std::string family = "custom";
  std::string params;
};

// Runs `algorithm` (any id make_algorithm accepts, or "best3" which consults
// best3_oracle) on the sequence and attaches the requested OPT. CapacityError
// propagates when an exact optimum is requested for a list that is too long.
RunReport run(const std::string& algorithm, const RequestSequence& seq,
              CostModel model, OptMode opt_mode = OptMode::Auto,
              const SequenceDescriptor& descriptor = {});

std::optional<Cost> opt_cost(const RequestSequence& seq, CostModel model,
                             OptMode mode, bool* is_upper_bound = nullptr);

// family,params,algorithm,model,n,l,access,exchanges,total,opt,ratio
std::string csv_header();
std::string to_csv(const RunReport& report);
// One JSON object with the CSV field names.
std::string to_json(const RunReport& report);

// The subsequence of requests to `first`/`second`, relabelled so that
// first -> 0 and second -> 1, starting from their relative initial order.
RequestSequence project(const RequestSequence& seq, Item first, Item second);

// Partial-model cost on the whole sequence equals the sum over all item
// pairs of the cost on the projected sequences. Only mtf, ts, mtfo, mtfe
// are accepted; others throw UnsupportedAlgorithm.
bool factoring_check(const std::string& algorithm, const RequestSequence& seq);

struct PairwiseCosts {
  Cost whole = 0;
  Cost sum_of_pairs = 0;
};
PairwiseCosts factoring_costs(const std::string& algorithm,
                              const RequestSequence& seq);

// Weighted inversions of MTF-Odd's and MTF-Even's lists against OPT's list.
// An inversion (a, b) has a before b in the online list and b before a in
// OPT's; it weighs 1 if the online bit of b is 1, else 2.
Cost potential(const ListState& opt_list, const ListState& odd_list,
               const std::vector<std::uint8_t>& odd_bits,
               const ListState& even_list,
               const std::vector<std::uint8_t>& even_bits);

struct AuditEvent {
  enum class Kind { Online, Offline };

  Kind kind = Kind::Online;
  std::size_t request = 0;
  Cost online_cost = 0;  // MTFO_t + MTFE_t, zero for offline events
  Cost opt_cost = 0;     // OPT_t
  Cost phi_before = 0;
  Cost phi_after = 0;

  std::int64_t amortized() const {
    return static_cast<std::int64_t>(online_cost) +
           static_cast<std::int64_t>(phi_after) -
           static_cast<std::int64_t>(phi_before);
  }
  bool within_bound() const {
    return amortized() <= 4 * static_cast<std::int64_t>(opt_cost);
  }
};

struct PotentialAudit {
  std::vector<AuditEvent> events;
  Cost phi_initial = 0;
  Cost phi_final = 0;
  Cost mtf_odd = 0;
  Cost mtf_even = 0;
  Cost opt = 0;
  std::size_t violations = 0;
};

// Replays OPT's paid exchanges and accesses (full cost model) alongside
// MTF-Odd and MTF-Even. Each adjacent swap of OPT is an offline event with
// OPT_t = 1; each request is an online event with OPT_t its access cost.
// Throws MalformedSequence when the trace does not fit the sequence.
PotentialAudit potential_audit(const RequestSequence& seq,
                               const DpSolution& opt_trace);

struct PhaseRow {
  Phase phase;
  std::string label;  // e.g. "x^2(yx)^1yy"
  Cost mtf_odd = 0;
  Cost mtf_even = 0;
  Cost ts = 0;
  Cost opt = 0;

  Cost mtf2() const { return std::max(mtf_odd, mtf_even); }
  Cost sum() const { return mtf_odd + mtf_even + ts; }
  bool critical() const { return phase.form == PhaseForm::C && phase.k == 1; }
};

struct PhaseTable {
  std::vector<PhaseRow> rows;
  PhaseRow total;  // summed over complete phases
  PhaseRow residual;
};

// Partial-model costs of MTF-Odd, MTF-Even, TS and the optimal two-item
// algorithm, split at phase boundaries. Two-item sequences only.
PhaseTable phase_cost_table(const RequestSequence& seq);

std::string phase_label(const Phase& phase, char front, char back);

}  // namespace lup

#endif  // LUP_ANALYSIS_HPP
