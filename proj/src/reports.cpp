#include "lup/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lup/advice.hpp"
#include "lup/algorithms.hpp"
#include "lup/analysis.hpp"
#include "lup/generators.hpp"
#include "lup/offline.hpp"

namespace lup {

void ReportTable::add(std::vector<std::string> row, std::optional<bool> check) {
  rows.push_back(std::move(row));
  checks.push_back(check);
}

bool ReportTable::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const auto& c) { return c && !*c; });
}

namespace {

std::string check_text(const std::optional<bool>& check) {
  if (!check) return "";
  return *check ? "ok" : "MISMATCH";
}

std::string num(Cost value) { return std::to_string(value); }

std::string fixed(double value, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, value);
  return buf;
}

}  // namespace

std::string ReportTable::to_csv() const {
  std::ostringstream out;
  for (const auto& c : columns) out << c << ',';
  out << "check\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& cell : rows[r]) out << cell << ',';
    out << check_text(checks[r]) << '\n';
  }
  return out.str();
}

std::string ReportTable::to_json_lines() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    for (std::size_t c = 0; c < columns.size(); ++c)
      j[columns[c]] = c < rows[r].size() ? rows[r][c] : "";
    j["check"] = check_text(checks[r]);
    out << j.dump() << '\n';
  }
  return out.str();
}

std::string ReportTable::to_pretty() const {
  std::vector<std::size_t> width(columns.size() + 1, 0);
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  width.back() = 5;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size() && c < columns.size(); ++c)
      width[c] = std::max(width[c], rows[r][c].size());
    width.back() = std::max(width.back(), check_text(checks[r]).size());
  }
  auto line = [&](const std::vector<std::string>& cells, const std::string& chk) {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      out += cell + std::string(width[c] - cell.size() + 2, ' ');
    }
    out += chk;
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + '\n';
  };
  std::string out = "== " + suite + " ==\n";
  out += line(columns, "check");
  for (std::size_t r = 0; r < rows.size(); ++r)
    out += line(rows[r], check_text(checks[r]));
  out += ok() ? "result: all checked cells match\n"
              : "result: MISMATCH in checked cells\n";
  return out;
}

const std::vector<std::string>& report_suites() {
  static const std::vector<std::string> suites = {
      "table1",     "table2",   "table3",    "table4",
      "ratio-partial", "ratio-full", "mtf2-2.5", "advice-bound"};
  return suites;
}

namespace {

std::string order_name(const ListState& list, const char* names) {
  std::string out;
  for (Item item : list.order()) out += names[item];
  return out;
}

std::string bits_id(int a, int b) {
  return std::string("mtf2:") + static_cast<char>('0' + a) +
         static_cast<char>('0' + b);
}

// Items a = 0, b = 1.
RequestSequence ab_sequence(const std::string& text, bool b_first = false) {
  std::vector<Item> reqs;
  for (char c : text) reqs.push_back(c == 'a' ? 0 : 1);
  return RequestSequence(b_first ? ListState({1, 0}) : ListState::identity(2),
                         std::move(reqs));
}

ReportTable table1() {
  ReportTable t{"table1", {"bits_ab", "cost", "expected_cost", "final_order",
                           "expected_order"}, {}, {}};
  const char* expected_order[] = {"ab", "ab", "ba", "ab"};
  const auto seq = ab_sequence("baba");
  for (int code = 0; code < 4; ++code) {
    const int a = code >> 1, b = code & 1;
    auto alg = make_algorithm(bits_id(a, b));
    const Cost cost = simulate(*alg, seq, CostModel::Partial).total();
    const std::string order = order_name(alg->list(), "ab");
    t.add({std::to_string(a) + std::to_string(b), num(cost),
           "3", order, expected_order[code]},
          cost == 3 && order == expected_order[code]);
  }
  return t;
}

ReportTable table2() {
  ReportTable t{"table2", {"initial", "bits_ab", "cost", "other_bits",
                           "other_cost", "total", "expected_total"}, {}, {}};
  const Cost expected[] = {3, 4, 4, 3};
  const auto seq = ab_sequence("baa");
  for (int code = 0; code < 4; ++code) {
    const int a = code >> 1, b = code & 1;
    const Cost one = simulate(bits_id(a, b), seq, CostModel::Partial).total();
    const Cost other =
        simulate(bits_id(1 - a, 1 - b), seq, CostModel::Partial).total();
    t.add({"[ab]", std::to_string(a) + std::to_string(b),
           num(one), std::to_string(1 - a) + std::to_string(1 - b),
           num(other), num(one + other), num(expected[code])},
          one + other == expected[code]);
  }
  // With b in front each algorithm is bounded separately over all bit states.
  const auto flipped = ab_sequence("baa", true);
  Cost worst_one = 0, worst_joint = 0;
  for (int code = 0; code < 4; ++code) {
    const int a = code >> 1, b = code & 1;
    const Cost one = simulate(bits_id(a, b), flipped, CostModel::Partial).total();
    const Cost other =
        simulate(bits_id(1 - a, 1 - b), flipped, CostModel::Partial).total();
    worst_one = std::max(worst_one, one);
    worst_joint = std::max(worst_joint, one + other);
  }
  t.add({"[ba]", "any", num(worst_one), "any", num(worst_one),
         num(2 * worst_one), "4"},
        2 * worst_one == 4);
  t.add({"[ba] joint", "any", "", "complement", "", num(worst_joint), "<=4"},
        worst_joint <= 4);
  return t;
}

enum class Shape { A, BEven, BOdd, CEven, COdd };

// One type-1 phase x (yx)^k tail, after the history "y y x x" so that every
// algorithm has seen both items and the list is [x, y].
struct PhaseCase {
  std::vector<Item> requests;
  std::size_t begin = 0;
};

PhaseCase phase_case(Shape shape, std::size_t i) {
  PhaseCase c;
  c.requests = {kItemY, kItemY, kItemX, kItemX};
  c.begin = c.requests.size();
  c.requests.push_back(kItemX);  // j = 1
  std::size_t k = 0;
  switch (shape) {
    case Shape::A:
      break;
    case Shape::BEven:
    case Shape::CEven:
      k = 2 * i;
      break;
    case Shape::BOdd:
    case Shape::COdd:
      k = 2 * i - 1;
      break;
  }
  for (std::size_t r = 0; r < k; ++r) c.requests.insert(c.requests.end(), {kItemY, kItemX});
  if (shape == Shape::CEven || shape == Shape::COdd)
    c.requests.push_back(kItemX);
  else
    c.requests.insert(c.requests.end(), {kItemY, kItemY});
  return c;
}

Cost phase_cost(const std::vector<Cost>& costs, std::size_t begin) {
  Cost total = 0;
  for (std::size_t t = begin; t < costs.size(); ++t) total += costs[t];
  return total;
}

struct PhaseMeasure {
  Cost alg_min = 0, alg_max = 0, sum = 0, mtf2 = 0, ts = 0, opt = 0;
};

// Worst case over the four start-bit states; the second MTF2 algorithm always
// runs on the complementary bits.
PhaseMeasure measure_phase(const PhaseCase& c) {
  const RequestSequence seq(ListState::identity(2), c.requests);
  PhaseMeasure m;
  for (int code = 0; code < 4; ++code) {
    const int a = code >> 1, b = code & 1;
    auto one = make_algorithm(bits_id(a, b));
    auto other = make_algorithm(bits_id(1 - a, 1 - b));
    const Cost x = phase_cost(simulate_costs(*one, seq, CostModel::Partial), c.begin);
    const Cost y =
        phase_cost(simulate_costs(*other, seq, CostModel::Partial), c.begin);
    m.alg_min = std::max(m.alg_min, std::min(x, y));
    m.alg_max = std::max(m.alg_max, std::max(x, y));
    m.sum = std::max(m.sum, x + y);
    m.mtf2 = std::max(m.mtf2, std::max(x, y));
  }
  Timestamp ts;
  m.ts = phase_cost(simulate_costs(ts, seq, CostModel::Partial), c.begin);
  m.sum += m.ts;
  m.opt = phase_cost(pair_opt_costs(seq, CostModel::Partial), c.begin);
  return m;
}

ReportTable table3() {
  ReportTable t{"table3", {"phase", "i", "alg_min", "alg_max", "ts", "sum",
                           "opt", "alg_min_bound", "alg_max_bound",
                           "expected_ts", "sum_bound", "expected_opt",
                           "sum/opt"}, {}, {}};
  struct Row {
    Shape shape;
    const char* label;
    std::function<Cost(Cost)> min_bound, max_bound, ts, bound, opt;
  };
  const std::vector<Row> rows = {
      {Shape::A, "x^j yy", [](Cost) { return 1; }, [](Cost) { return 2; },
       [](Cost) { return 2; }, [](Cost) { return 5; }, [](Cost) { return 1; }},
      {Shape::BEven, "x^j (yx)^2i yy", [](Cost i) { return 3 * i + 1; },
       [](Cost i) { return 3 * i + 2; }, [](Cost i) { return 4 * i; },
       [](Cost i) { return 10 * i + 3; }, [](Cost i) { return 2 * i + 1; }},
      {Shape::BOdd, "x^j (yx)^(2i-2) yxyy", [](Cost i) { return 3 * i - 1; },
       [](Cost i) { return 3 * i + 1; }, [](Cost i) { return 4 * i - 2; },
       [](Cost i) { return 10 * i - 2; }, [](Cost i) { return 2 * i; }},
      {Shape::CEven, "x^j (yx)^2i x", [](Cost i) { return 3 * i; },
       [](Cost i) { return 3 * i + 1; }, [](Cost i) { return 4 * i - 1; },
       [](Cost i) { return 10 * i; }, [](Cost i) { return 2 * i; }},
      {Shape::COdd, "x^j (yx)^(2i-2) yxx", [](Cost i) { return 3 * i - 2; },
       [](Cost i) { return 3 * i; }, [](Cost i) { return 4 * i - 3; },
       [](Cost i) { return 10 * i - 5; }, [](Cost i) { return 2 * i - 1; }},
  };
  for (const Row& row : rows) {
    const std::size_t max_i = row.shape == Shape::A ? 1 : 4;
    for (std::size_t i = 1; i <= max_i; ++i) {
      const PhaseMeasure m = measure_phase(phase_case(row.shape, i));
      const bool ok = m.alg_min <= row.min_bound(i) &&
                      m.alg_max <= row.max_bound(i) && m.ts == row.ts(i) &&
                      m.opt == row.opt(i) &&
                      m.sum <= row.bound(i) && m.sum <= 5 * m.opt &&
                      (row.shape != Shape::A || m.sum == 5);
      t.add({row.label, row.shape == Shape::A ? "-" : std::to_string(i),
             num(m.alg_min), num(m.alg_max), num(m.ts), num(m.sum), num(m.opt),
             "<=" + num(row.min_bound(i)), "<=" + num(row.max_bound(i)),
             num(row.ts(i)), (row.shape == Shape::A ? "=" : "<=") + num(row.bound(i)),
             num(row.opt(i)), Ratio::of(m.sum, m.opt).decimal()},
            ok);
    }
  }
  return t;
}

ReportTable table4() {
  ReportTable t{"table4", {"phase", "i", "mtf2", "opt", "mtf2_bound",
                           "expected_opt", "ratio", "ratio_bound"}, {}, {}};
  struct Row {
    Shape shape;
    const char* label;
    std::size_t i_offset;  // COdd with k = 2i+1 uses i + 1 in phase_case
    std::function<Cost(Cost)> bound, opt;
    bool critical;
  };
  const std::vector<Row> rows = {
      {Shape::A, "x^j yy", 0, [](Cost) { return 2; }, [](Cost) { return 1; },
       false},
      {Shape::BEven, "x^j (yx)^2i yy", 0, [](Cost i) { return 3 * i + 2; },
       [](Cost i) { return 2 * i + 1; }, false},
      {Shape::BOdd, "x^j (yx)^(2i-2) yxyy", 0,
       [](Cost i) { return 3 * (i - 1) + 4; }, [](Cost i) { return 2 * i; },
       false},
      {Shape::CEven, "x^j (yx)^2i x", 0, [](Cost i) { return 3 * i + 1; },
       [](Cost i) { return 2 * i; }, false},
      {Shape::COdd, "x^j (yx)^2i yxx", 1, [](Cost i) { return 3 * i + 3; },
       [](Cost i) { return 2 * i + 1; }, false},
      {Shape::COdd, "x^j yxx (critical)", 0, [](Cost) { return 3; },
       [](Cost) { return 1; }, true},
  };
  for (const Row& row : rows) {
    const bool single = row.shape == Shape::A || row.critical;
    const std::size_t max_i = single ? 1 : 4;
    for (std::size_t i = 1; i <= max_i; ++i) {
      const PhaseMeasure m = measure_phase(phase_case(row.shape, i + row.i_offset));
      const Cost ratio_bound = row.critical ? 3 : 2;
      const bool ok = m.opt == row.opt(i) &&
                      (row.critical ? m.mtf2 == 3 : m.mtf2 <= row.bound(i)) &&
                      m.mtf2 <= ratio_bound * m.opt;
      t.add({row.label, single ? "-" : std::to_string(i), num(m.mtf2),
             num(m.opt), (row.critical ? "=" : "<=") + num(row.bound(i)),
             num(row.opt(i)), Ratio::of(m.mtf2, m.opt).decimal(),
             "<=" + num(ratio_bound)},
            ok);
    }
  }
  return t;
}

ReportTable ratio_partial(const ReportOptions& o) {
  ReportTable t{"ratio-partial", {"sequence", "algorithm", "cost", "expected",
                                  "opt", "expected_opt", "ratio"}, {}, {}};
  const Cost k = o.k_alpha;
  const auto alpha = gen_alpha(k);
  const auto both = concat(alpha, gen_beta2(2 * k));
  const std::string alpha_name = "alpha(k=" + num(k) + ")";
  const std::string both_name = alpha_name + ".beta2(k=" + num(2 * k) + ")";

  const Cost alpha_opt = opt_dp(alpha, CostModel::Partial).total_cost;
  const Cost both_opt = opt_dp(both, CostModel::Partial).total_cost;
  for (const char* alg : {"mtfo", "mtfe", "ts"}) {
    const Cost cost = simulate(alg, alpha, CostModel::Partial).total();
    const Cost expected = std::string(alg) == "ts" ? 2 * k : 4 * k;
    t.add({alpha_name, alg, num(cost), num(expected), num(alpha_opt),
           num(2 * k), Ratio::of(cost, alpha_opt).decimal()},
          cost == expected && alpha_opt == 2 * k);
  }
  for (const char* alg : {"ts", "mtfo", "mtfe"}) {
    const Cost cost = simulate(alg, both, CostModel::Partial).total();
    const Ratio ratio = Ratio::of(cost, both_opt);
    t.add({both_name, alg, num(cost), num(10 * k), num(both_opt), num(6 * k),
           ratio.decimal()},
          cost == 10 * k && both_opt == 6 * k && ratio.num == 5 &&
              ratio.den == 3);
  }
  return t;
}

ReportTable ratio_full(const ReportOptions& o) {
  ReportTable t{"ratio-full", {"sequence", "algorithm", "cost",
                               "leading_term", "opt_strategy", "ratio"}, {}, {}};
  const Cost l = o.l, s = o.s, m = o.m;
  const auto beta = gen_beta_l(l, m);
  const auto gamma = gen_gamma(l, s);
  const auto both = concat(beta, gamma);
  const std::string beta_name = "beta(l=" + num(l) + ";m=" + num(m) + ")";
  const std::string gamma_name = "gamma(l=" + num(l) + ";s=" + num(s) + ")";
  const Cost l2 = l * l;

  struct Part {
    const RequestSequence* seq;
    std::string name;
    Cost ts2, mtf2x2, opt2;  // leading terms, doubled to stay integral
  };
  const Part parts[] = {
      {&beta, beta_name, 4 * l2 * m, 7 * l2 * m, 4 * l2 * m},
      {&gamma, gamma_name, 8 * l2 * s, 6 * l2 * s, 4 * l2 * s},
  };
  for (const Part& p : parts) {
    const Cost opt = move_on_repeat(*p.seq, CostModel::Full).total();
    for (const char* alg : {"ts", "mtfo", "mtfe"}) {
      const Cost cost = simulate(alg, *p.seq, CostModel::Full).total();
      const Cost lead2 = std::string(alg) == "ts" ? p.ts2 : p.mtf2x2;
      t.add({p.name, alg, num(cost), fixed(lead2 / 2.0, 1), num(opt),
             Ratio::of(cost, opt).decimal()},
            std::nullopt);
    }
    t.add({p.name, "opt-strategy", num(opt), fixed(p.opt2 / 2.0, 1), num(opt),
           "1.000000"},
          std::nullopt);
  }

  const std::string both_name = beta_name + "." + gamma_name;
  const Cost opt = move_on_repeat(both, CostModel::Full).total();
  Cost best = UINT64_MAX;
  for (const char* alg : {"ts", "mtfo", "mtfe"}) {
    const Cost cost = simulate(alg, both, CostModel::Full).total();
    best = std::min(best, cost);
    t.add({both_name, alg, num(cost), "", num(opt),
           Ratio::of(cost, opt).decimal()},
          std::nullopt);
  }
  const Ratio ratio = Ratio::of(best, opt);
  t.add({both_name, "min(ts,mtfo,mtfe)", num(best), ">=1.55 (limit 1.6)",
         num(opt), ratio.decimal()},
        100 * best >= 155 * opt);
  return t;
}

// Worst additive slack of MTF-Odd over 2.5 * OPT on all two-item sequences up
// to `max_n`, doubled to stay integral: max(2 * MTFO - 5 * OPT).
std::int64_t mtf2_two_item_slack2(std::size_t max_n, CostModel model) {
  std::int64_t worst = 0;
  for (const auto& start : {ListState({0, 1}), ListState({1, 0})}) {
    OptFrontier frontier(start, model, OptFrontier::Moves::Unrestricted, 2);
    std::vector<Item> reqs;
    std::function<void()> dfs = [&] {
      const RequestSequence seq(start, reqs);
      const auto mtfo = static_cast<std::int64_t>(
          simulate("mtfo", seq, model).total());
      worst = std::max(worst, 2 * mtfo - 5 * static_cast<std::int64_t>(
                                              frontier.cost()));
      if (reqs.size() == max_n) return;
      for (Item r : {Item{0}, Item{1}}) {
        reqs.push_back(r);
        frontier.push(r);
        dfs();
        frontier.pop();
        reqs.pop_back();
      }
    };
    dfs();
  }
  return worst;
}

ReportTable mtf2_ratio(const ReportOptions& o) {
  ReportTable t{"mtf2-2.5", {"sequence", "measure", "value", "expected"}, {}, {}};
  const Cost l = o.l, m = o.m;
  const auto delta = gen_delta(l, m);
  const std::string name = "delta(l=" + num(l) + ";m=" + num(m) + ")";
  const Cost odd = simulate("mtfo", delta, CostModel::Full).total();
  const Cost opt = move_on_repeat(delta, CostModel::Full).total();
  t.add({name, "mtfo", num(odd), num(m * (5 * l * l + 3 * l))},
        odd == m * (5 * l * l + 3 * l));
  t.add({name, "opt-strategy", num(opt), num(m * (2 * l * l + 6 * l))},
        opt == m * (2 * l * l + 6 * l));
  const Ratio ratio = Ratio::of(odd, opt);
  const Ratio formula = Ratio::of(5 * l + 3, 2 * l + 6);
  t.add({name, "mtfo/opt-strategy", ratio.fraction() + " = " + ratio.decimal(),
         formula.fraction() + " (limit 2.5)"},
        ratio.num == formula.num && ratio.den == formula.den);

  // MTF-Even sees one request to every item first, which sets all its bits.
  std::vector<Item> prefix(l);
  for (Item i = 0; i < l; ++i) prefix[i] = i;
  const auto primed = concat(RequestSequence(ListState::identity(l), prefix), delta);
  const Cost even = simulate("mtfe", primed, CostModel::Full).total();
  const Cost primed_opt = move_on_repeat(primed, CostModel::Full).total();
  t.add({"a1..al." + name, "mtfe/opt-strategy",
         Ratio::of(even, primed_opt).decimal(), "-> 2.5"},
        std::nullopt);

  for (CostModel model : {CostModel::Partial, CostModel::Full}) {
    const std::int64_t slack2 = mtf2_two_item_slack2(12, model);
    t.add({"all two-item n<=12", "max(mtfo - 2.5*opt_dp) " + to_string(model),
           fixed(slack2 / 2.0, 1), "<=3"},
          slack2 <= 6);
  }
  return t;
}

ReportTable advice_bound(const ReportOptions& o) {
  ReportTable t{"advice-bound", {"gamma", "bits_per_request", "expected"}, {}, {}};
  std::vector<double> gammas = {o.gamma, 1.01, 1.02, 1.05, 15.0 / 14.0};
  std::vector<double> seen;
  for (double g : gammas) {
    if (std::any_of(seen.begin(), seen.end(),
                    [&](double s) { return std::abs(s - g) < 1e-12; }))
      continue;
    seen.push_back(g);
    const double rate = advice_lower_bound_rate(g);
    std::optional<bool> check;
    std::string expected;
    if (std::abs(g - 1.01) < 1e-12) {
      expected = "0.1268 +- 0.0005";
      check = std::abs(rate - 0.1268) <= 0.0005;
    } else if (std::abs(g - 15.0 / 14.0) < 1e-12) {
      expected = "0";
      check = rate == 0.0;
    }
    t.add({fixed(g, 6), fixed(rate, 6), expected}, check);
  }
  return t;
}

}  // namespace

ReportTable run_report(const std::string& suite, const ReportOptions& options) {
  if (suite == "table1") return table1();
  if (suite == "table2") return table2();
  if (suite == "table3") return table3();
  if (suite == "table4") return table4();
  if (suite == "ratio-partial") return ratio_partial(options);
  if (suite == "ratio-full") return ratio_full(options);
  if (suite == "mtf2-2.5") return mtf2_ratio(options);
  if (suite == "advice-bound") return advice_bound(options);
  throw Error("unknown report suite '" + suite + "'");
}

}  // namespace lup
