#include "lup/analysis.hpp"

#include <cstdio>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "lup/advice.hpp"
#include "lup/algorithms.hpp"

namespace lup {

Ratio Ratio::of(Cost num, Cost den) {
  if (den == 0) throw Error("ratio with zero denominator");
  const Cost g = std::gcd(num, den);
  return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

std::string Ratio::fraction() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string Ratio::decimal() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value());
  return buf;
}

OptMode parse_opt_mode(const std::string& text) {
  const std::string name = text.rfind("opt:", 0) == 0 ? text.substr(4) : text;
  if (name == "none") return OptMode::None;
  if (name == "auto") return OptMode::Auto;
  if (name == "dp") return OptMode::Dp;
  if (name == "subset") return OptMode::Subset;
  if (name == "pair") return OptMode::Pair;
  if (name == "strategy") return OptMode::Strategy;
  throw Error("unknown opt mode '" + text + "'");
}

std::string to_string(OptMode mode) {
  switch (mode) {
    case OptMode::None:
      return "none";
    case OptMode::Auto:
      return "auto";
    case OptMode::Dp:
      return "opt:dp";
    case OptMode::Subset:
      return "opt:subset";
    case OptMode::Pair:
      return "opt:pair";
    case OptMode::Strategy:
      return "opt:strategy";
  }
  return "?";
}

std::optional<Ratio> RunReport::ratio() const {
  if (!opt || *opt == 0) return std::nullopt;
  return Ratio::of(ledger.total(), *opt);
}

std::optional<Cost> opt_cost(const RequestSequence& seq, CostModel model,
                             OptMode mode, bool* is_upper_bound) {
  if (is_upper_bound) *is_upper_bound = false;
  if (mode == OptMode::Auto)
    mode = seq.list_size() <= dp_capacity() ? OptMode::Dp : OptMode::Strategy;
  switch (mode) {
    case OptMode::None:
    case OptMode::Auto:
      return std::nullopt;
    case OptMode::Dp:
      return opt_dp(seq, model).total_cost;
    case OptMode::Subset:
      return opt_subset_transfer_dp(seq, model).solution.total_cost;
    case OptMode::Pair:
      return pair_opt(seq, model);
    case OptMode::Strategy:
      if (is_upper_bound) *is_upper_bound = true;
      return move_on_repeat(seq, model).total();
  }
  return std::nullopt;
}

RunReport run(const std::string& algorithm, const RequestSequence& seq,
              CostModel model, OptMode opt_mode,
              const SequenceDescriptor& descriptor) {
  RunReport report;
  report.family = descriptor.family;
  report.params = descriptor.params;
  report.algorithm = algorithm;
  report.model = model;
  report.n = seq.length();
  report.l = seq.list_size();
  if (algorithm == "best3") {
    AdviceTape tape;
    write_selector(tape, best3_oracle(seq, model));
    report.ledger = best3_follower(tape, seq, model);
  } else {
    report.ledger = simulate(algorithm, seq, model);
  }
  report.opt = opt_cost(seq, model, opt_mode, &report.opt_is_upper_bound);
  return report;
}

std::string csv_header() {
  return "family,params,algorithm,model,n,l,access,exchanges,total,opt,ratio";
}

std::string to_csv(const RunReport& r) {
  std::ostringstream out;
  out << r.family << ',' << r.params << ',' << r.algorithm << ','
      << to_string(r.model) << ',' << r.n << ',' << r.l << ','
      << r.ledger.access << ',' << r.ledger.paid_exchanges << ','
      << r.ledger.total() << ',';
  if (r.opt) out << *r.opt;
  out << ',';
  if (auto ratio = r.ratio()) out << ratio->decimal();
  return out.str();
}

std::string to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["params"] = r.params;
  j["algorithm"] = r.algorithm;
  j["model"] = to_string(r.model);
  j["n"] = r.n;
  j["l"] = r.l;
  j["access"] = r.ledger.access;
  j["exchanges"] = r.ledger.paid_exchanges;
  j["total"] = r.ledger.total();
  j["opt"] = r.opt ? nlohmann::ordered_json(*r.opt) : nlohmann::ordered_json();
  if (auto ratio = r.ratio())
    j["ratio"] = std::stod(ratio->decimal());
  else
    j["ratio"] = nullptr;
  return j.dump();
}

RequestSequence project(const RequestSequence& seq, Item first, Item second) {
  if (first == second)
    throw MalformedSequence("projection needs two distinct items");
  const bool first_ahead = seq.initial.position(first) <
                           seq.initial.position(second);
  std::vector<Item> requests;
  for (Item r : seq.requests) {
    if (r == first) requests.push_back(0);
    if (r == second) requests.push_back(1);
  }
  return RequestSequence(ListState(first_ahead ? std::vector<Item>{0, 1}
                                               : std::vector<Item>{1, 0}),
                         std::move(requests));
}

PairwiseCosts factoring_costs(const std::string& algorithm,
                              const RequestSequence& seq) {
  if (algorithm != "mtf" && algorithm != "ts" && algorithm != "mtfo" &&
      algorithm != "mtfe")
    throw UnsupportedAlgorithm("factoring check needs a projective algorithm "
                               "(mtf, ts, mtfo, mtfe), got '" +
                               algorithm + "'");
  PairwiseCosts costs;
  costs.whole = simulate(algorithm, seq, CostModel::Partial).total();
  const auto l = static_cast<Item>(seq.list_size());
  for (Item a = 0; a < l; ++a)
    for (Item b = a + 1; b < l; ++b)
      costs.sum_of_pairs +=
          simulate(algorithm, project(seq, a, b), CostModel::Partial).total();
  return costs;
}

bool factoring_check(const std::string& algorithm, const RequestSequence& seq) {
  const PairwiseCosts costs = factoring_costs(algorithm, seq);
  return costs.whole == costs.sum_of_pairs;
}

namespace {

Cost weighted_inversions(const ListState& opt_list, const ListState& online,
                         const std::vector<std::uint8_t>& bits) {
  Cost phi = 0;
  const auto& order = online.order();
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (opt_list.precedes(order[j], order[i]))
        phi += bits[order[j]] ? 1 : 2;
  return phi;
}

}  // namespace

Cost potential(const ListState& opt_list, const ListState& odd_list,
               const std::vector<std::uint8_t>& odd_bits,
               const ListState& even_list,
               const std::vector<std::uint8_t>& even_bits) {
  return weighted_inversions(opt_list, odd_list, odd_bits) +
         weighted_inversions(opt_list, even_list, even_bits);
}

PotentialAudit potential_audit(const RequestSequence& seq,
                               const DpSolution& opt_trace) {
  if (opt_trace.trace.size() != seq.length())
    throw MalformedSequence("OPT trace covers " +
                            std::to_string(opt_trace.trace.size()) +
                            " requests, sequence has " +
                            std::to_string(seq.length()));
  for (const DpStep& step : opt_trace.trace)
    if (step.target.size() != seq.list_size())
      throw MalformedSequence("OPT trace lists do not match the sequence");

  auto odd = MoveToFrontEveryOther::odd();
  auto even = MoveToFrontEveryOther::even();
  odd.reset(seq.initial);
  even.reset(seq.initial);
  ListState opt_list = seq.initial;

  auto phi = [&] {
    return potential(opt_list, odd.list(), odd.bits(), even.list(),
                     even.bits());
  };

  PotentialAudit audit;
  audit.phi_initial = phi();
  Cost current = audit.phi_initial;
  for (std::size_t t = 0; t < seq.length(); ++t) {
    for (std::size_t pos : adjacent_swap_path(opt_list, opt_trace.trace[t].target)) {
      opt_list.swap_adjacent(pos);
      AuditEvent event;
      event.kind = AuditEvent::Kind::Offline;
      event.request = t;
      event.opt_cost = 1;
      event.phi_before = current;
      event.phi_after = current = phi();
      audit.opt += 1;
      audit.events.push_back(event);
    }
    const Item r = seq.requests[t];
    AuditEvent event;
    event.kind = AuditEvent::Kind::Online;
    event.request = t;
    event.opt_cost = access(opt_list, r, CostModel::Full);
    const Cost odd_cost = odd.serve(r, CostModel::Full);
    const Cost even_cost = even.serve(r, CostModel::Full);
    event.online_cost = odd_cost + even_cost;
    event.phi_before = current;
    event.phi_after = current = phi();
    audit.mtf_odd += odd_cost;
    audit.mtf_even += even_cost;
    audit.opt += event.opt_cost;
    audit.events.push_back(event);
  }
  audit.phi_final = current;
  for (const auto& e : audit.events)
    if (!e.within_bound()) ++audit.violations;
  return audit;
}

std::string phase_label(const Phase& phase, char front, char back) {
  std::string label;
  if (phase.j > 0) label += std::string(1, front) + "^" + std::to_string(phase.j);
  if (phase.k > 0)
    label += std::string("(") + back + front + ")^" + std::to_string(phase.k);
  if (phase.form == PhaseForm::C)
    label += front;
  else
    label += std::string(2, back);
  return label;
}

PhaseTable phase_cost_table(const RequestSequence& seq) {
  const PhaseDecomposition phases = partition_phases(seq);
  auto odd = MoveToFrontEveryOther::odd();
  auto even = MoveToFrontEveryOther::even();
  Timestamp ts;
  const auto odd_costs = simulate_costs(odd, seq, CostModel::Partial);
  const auto even_costs = simulate_costs(even, seq, CostModel::Partial);
  const auto ts_costs = simulate_costs(ts, seq, CostModel::Partial);
  const auto opt_costs = pair_opt_costs(seq, CostModel::Partial);

  auto fill = [&](PhaseRow& row, std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      row.mtf_odd += odd_costs[t];
      row.mtf_even += even_costs[t];
      row.ts += ts_costs[t];
      row.opt += opt_costs[t];
    }
  };

  // Items are named by their role: x is in front initially.
  PhaseTable table;
  table.total.label = "total";
  for (const Phase& phase : phases.phases) {
    PhaseRow row;
    row.phase = phase;
    const bool x_front = phase.type == 1;
    row.label = phase_label(phase, x_front ? 'x' : 'y', x_front ? 'y' : 'x');
    fill(row, phase.begin, phase.end);
    table.total.mtf_odd += row.mtf_odd;
    table.total.mtf_even += row.mtf_even;
    table.total.ts += row.ts;
    table.total.opt += row.opt;
    table.rows.push_back(std::move(row));
  }
  table.residual.label = "residual";
  fill(table.residual, phases.residual_begin, seq.length());
  return table;
}

}  // namespace lup
