#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lup/advice.hpp"
#include "lup/analysis.hpp"
#include "lup/compressor.hpp"
#include "lup/generators.hpp"
#include "lup/offline.hpp"
#include "lup/reports.hpp"
#include "lup/sequence_file.hpp"

namespace lup::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& data,
                std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << data;
}

SequenceFile load_sequence(const std::string& path) {
  return SequenceFile::parse_string(read_file(path));
}

AdviceTape load_tape(const std::string& path, const std::string& format) {
  const std::string data = read_file(path);
  return format == "packed" ? AdviceTape::from_packed(data)
                            : AdviceTape::from_ascii(data);
}

std::string tape_bytes(const AdviceTape& tape, const std::string& format) {
  return format == "packed" ? tape.to_packed() : tape.to_ascii() + "\n";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

nlohmann::ordered_json json_cell(const std::string& cell) {
  if (!cell.empty() && cell.find_first_not_of("0123456789") == std::string::npos)
    return std::stoull(cell);
  if (!cell.empty() && cell.find_first_not_of("0123456789.") == std::string::npos &&
      std::count(cell.begin(), cell.end(), '.') == 1 && cell.front() != '.' &&
      cell.back() != '.')
    return std::stod(cell);
  if (cell == "true" || cell == "false") return cell == "true";
  return cell;
}

// A flat table rendered as CSV, JSON lines or aligned text.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string render(bool json, bool pretty) const {
    std::ostringstream out;
    if (json) {
      for (const auto& row : rows) {
        nlohmann::ordered_json j;
        for (std::size_t c = 0; c < columns.size(); ++c)
          j[columns[c]] = json_cell(c < row.size() ? row[c] : "");
        out << j.dump() << '\n';
      }
    } else if (pretty) {
      std::vector<std::size_t> w(columns.size());
      for (std::size_t c = 0; c < columns.size(); ++c) w[c] = columns[c].size();
      for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < w.size(); ++c)
          w[c] = std::max(w[c], row[c].size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < columns.size(); ++c) {
          const std::string cell = c < cells.size() ? cells[c] : "";
          s += cell;
          if (c + 1 < columns.size()) s += std::string(w[c] - cell.size() + 2, ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s + '\n';
      };
      out << line(columns);
      for (const auto& row : rows) out << line(row);
    } else {
      auto join = [](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) s += (c ? "," : "") + cells[c];
        return s + '\n';
      };
      out << join(columns);
      for (const auto& row : rows) out << join(row);
    }
    return out.str();
  }
};

struct OutputFlags {
  bool json = false;
  bool pretty = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_flag("--json", flags.json, "JSON lines instead of CSV");
  cmd->add_flag("--pretty", flags.pretty, "aligned plain text");
}

CostModel model_option(const std::string& text) {
  try {
    return parse_cost_model(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
  std::string family;
  FamilySpec spec;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  FamilySpec spec = a.spec;
  try {
    spec.family = parse_family(a.family);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  RequestSequence seq;
  try {
    seq = generate(spec);
  } catch (const CapacityError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  SequenceFile file;
  file.names = default_names(seq.list_size());
  file.sequence = seq;
  file.family = to_string(spec.family);
  file.params = spec.describe();
  write_file(a.out, file.to_string(), out);
  const std::size_t expected = expected_length(spec);
  const bool ok = expected == seq.length();
  err << "length " << seq.length() << ", closed form " << expected << ": "
      << (ok ? "ok" : "MISMATCH") << '\n';
  return ok ? kOk : kVerificationFailure;
}

// ---- run ----------------------------------------------------------------

struct RunArgs {
  std::vector<std::string> algorithms;
  std::string input;
  std::string model = "full";
  std::string opt = "auto";
  std::string advice;
  std::string tape_format = "ascii";
  OutputFlags output;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
  const SequenceFile file = load_sequence(a.input);
  const CostModel model = model_option(a.model);
  OptMode mode;
  try {
    mode = parse_opt_mode(a.opt);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const SequenceDescriptor desc{file.family.empty() ? "custom" : file.family,
                                file.params};
  Table table{split_csv(csv_header()), {}};
  for (const std::string& alg : a.algorithms) {
    RunReport report;
    if (!a.advice.empty() && (alg == "best3" || alg == "subset")) {
      AdviceTape tape = load_tape(a.advice, a.tape_format);
      report.family = desc.family;
      report.params = desc.params;
      report.algorithm = alg;
      report.model = model;
      report.n = file.sequence.length();
      report.l = file.sequence.list_size();
      report.ledger = alg == "best3"
                          ? best3_follower(tape, file.sequence, model)
                          : subset_follower(tape, file.sequence, model);
      report.opt = opt_cost(file.sequence, model, mode, &report.opt_is_upper_bound);
    } else if (alg == "subset") {
      throw UsageError("--alg subset needs an --advice tape");
    } else {
      report = run(alg, file.sequence, model, mode, desc);
    }
    if (a.output.json)
      out << to_json(report) << '\n';
    else
      table.rows.push_back(split_csv(to_csv(report)));
  }
  if (!a.output.json) out << table.render(false, a.output.pretty);
  return kOk;
}

// ---- opt ----------------------------------------------------------------

struct OptArgs {
  std::string input;
  std::string model = "full";
  std::string mode = "dp";
  bool trace = false;
  OutputFlags output;
};

std::string order_tokens(const ListState& list, const SequenceFile& file) {
  std::string s;
  for (Item item : list.order()) s += (s.empty() ? "" : " ") + file.names[item];
  return s;
}

int cmd_opt(const OptArgs& a, std::ostream& out) {
  const SequenceFile file = load_sequence(a.input);
  const RequestSequence& seq = file.sequence;
  const CostModel model = model_option(a.model);
  OptMode mode;
  try {
    mode = parse_opt_mode(a.mode);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (mode == OptMode::None) throw UsageError("opt needs a mode other than none");

  std::optional<DpSolution> solution;
  if (mode == OptMode::Dp) solution = opt_dp(seq, model);
  if (mode == OptMode::Subset) solution = opt_subset_transfer_dp(seq, model).solution;

  if (a.trace) {
    if (!solution) throw UsageError("--trace needs --mode dp or subset");
    Table table{{"t", "request", "order", "access", "exchanges"}, {}};
    for (std::size_t t = 0; t < seq.length(); ++t) {
      const DpStep& step = solution->trace[t];
      table.rows.push_back({std::to_string(t + 1), file.names[seq.requests[t]],
                            order_tokens(step.target, file),
                            std::to_string(step.access),
                            std::to_string(step.exchanges)});
    }
    out << table.render(a.output.json, a.output.pretty);
    return kOk;
  }

  bool upper = false;
  const Cost total = solution ? solution->total_cost
                              : *opt_cost(seq, model, mode, &upper);
  Table table{{"mode", "model", "n", "l", "total", "exact"},
              {{to_string(mode), to_string(model), std::to_string(seq.length()),
                std::to_string(seq.list_size()), std::to_string(total),
                upper ? "false" : "true"}}};
  out << table.render(a.output.json, a.output.pretty);
  return kOk;
}

// ---- advice -------------------------------------------------------------

struct AdviceArgs {
  std::string kind = "best3";
  std::string input;
  std::string model = "full";
  std::string tape;
  std::string tape_format = "ascii";
  std::string out;
  OutputFlags output;
};

void check_advice_args(const AdviceArgs& a) {
  if (a.kind != "best3" && a.kind != "subset")
    throw UsageError("--kind must be best3 or subset");
  if (a.tape_format != "ascii" && a.tape_format != "packed")
    throw UsageError("--tape-format must be ascii or packed");
}

int cmd_advice_write(const AdviceArgs& a, std::ostream& out, std::ostream& err) {
  check_advice_args(a);
  const SequenceFile file = load_sequence(a.input);
  const CostModel model = model_option(a.model);
  AdviceTape tape;
  if (a.kind == "best3") {
    write_selector(tape, best3_oracle(file.sequence, model));
  } else {
    tape = subset_oracle(file.sequence, model);
  }
  write_file(a.out, tape_bytes(tape, a.tape_format), out);
  err << a.kind << " tape: " << tape.size() << " bits\n";
  return kOk;
}

int cmd_advice_read(const AdviceArgs& a, std::ostream& out) {
  check_advice_args(a);
  AdviceTape tape = load_tape(a.tape, a.tape_format);
  Table table{{"kind", "bits", "consumed", "selected", "access", "exchanges",
               "total"},
              {}};
  if (a.input.empty()) {
    std::string selected;
    if (a.kind == "best3") {
      selected = algorithm_id(read_selector(tape));
      tape.rewind();
    }
    table.rows.push_back({a.kind, std::to_string(tape.size()), "0", selected,
                          "", "", ""});
  } else {
    const SequenceFile file = load_sequence(a.input);
    const CostModel model = model_option(a.model);
    std::string selected;
    if (a.kind == "best3") {
      selected = algorithm_id(read_selector(tape));
      tape.rewind();
    }
    const CostLedger ledger = a.kind == "best3"
                                  ? best3_follower(tape, file.sequence, model)
                                  : subset_follower(tape, file.sequence, model);
    table.rows.push_back({a.kind, std::to_string(tape.size()),
                          std::to_string(tape.consumed()), selected,
                          std::to_string(ledger.access),
                          std::to_string(ledger.paid_exchanges),
                          std::to_string(ledger.total())});
  }
  out << table.render(a.output.json, a.output.pretty);
  return kOk;
}

// ---- project ------------------------------------------------------------

struct ProjectArgs {
  std::string input;
  std::string first;
  std::string second;
  std::string out;
};

int cmd_project(const ProjectArgs& a, std::ostream& out) {
  const SequenceFile file = load_sequence(a.input);
  SequenceFile projected;
  projected.sequence = project(file.sequence, file.id_of(a.first),
                               file.id_of(a.second));
  projected.names = {a.first, a.second};
  if (projected.sequence.initial.at(1) != 0)
    std::swap(projected.names[0], projected.names[1]);
  write_file(a.out, projected.to_string(), out);
  return kOk;
}

// ---- phases -------------------------------------------------------------

struct PhasesArgs {
  std::string input;
  OutputFlags output;
};

int cmd_phases(const PhasesArgs& a, std::ostream& out) {
  const SequenceFile file = load_sequence(a.input);
  if (file.sequence.list_size() != 2)
    throw UsageError("phases needs a two-item sequence");
  const PhaseTable t = phase_cost_table(file.sequence);
  Table table{{"phase", "type", "form", "j", "k", "begin", "end", "label",
               "mtfo", "mtfe", "ts", "opt"},
              {}};
  auto row = [&](const std::string& name, const PhaseRow& r, bool is_phase) {
    const Phase& p = r.phase;
    table.rows.push_back(
        {name, is_phase ? std::to_string(p.type) : "",
         is_phase ? std::string(1, static_cast<char>(p.form)) : "",
         is_phase ? std::to_string(p.j) : "", is_phase ? std::to_string(p.k) : "",
         is_phase ? std::to_string(p.begin) : "",
         is_phase ? std::to_string(p.end) : "", r.label,
         std::to_string(r.mtf_odd), std::to_string(r.mtf_even),
         std::to_string(r.ts), std::to_string(r.opt)});
  };
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    row(std::to_string(i + 1), t.rows[i], true);
  row("total", t.total, false);
  row("residual", t.residual, false);
  out << table.render(a.output.json, a.output.pretty);
  return kOk;
}

// ---- report -------------------------------------------------------------

struct ReportArgs {
  std::string suite;
  ReportOptions options;
  OutputFlags output;
};

int cmd_report(const ReportArgs& a, std::ostream& out) {
  const auto& suites = report_suites();
  std::vector<std::string> selected;
  if (a.suite == "all") {
    selected = suites;
  } else if (std::find(suites.begin(), suites.end(), a.suite) != suites.end()) {
    selected = {a.suite};
  } else {
    throw UsageError("unknown report suite '" + a.suite + "'");
  }
  bool ok = true;
  for (const auto& suite : selected) {
    ReportTable table;
    try {
      table = run_report(suite, a.options);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    ok = ok && table.ok();
    if (a.output.json)
      out << table.to_json_lines();
    else if (a.output.pretty)
      out << table.to_pretty();
    else
      out << table.to_csv();
  }
  return ok ? kOk : kVerificationFailure;
}

// ---- compress / decompress ----------------------------------------------

struct CompressArgs {
  std::string input;
  std::string out;
  std::string algorithm = "mtf";
};

int cmd_compress(const CompressArgs& a, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(a.input);
  Encoded encoded;
  try {
    container_algorithm_code(a.algorithm);
    encoded = compress(text, a.algorithm);
  } catch (const UnsupportedAlgorithm& e) {
    throw UsageError(e.what());
  }
  const std::string bytes = write_container(encoded);
  write_file(a.out, bytes, out);
  err << text.size() << " bytes -> " << bytes.size() << " bytes ("
      << encoded.bits.size() << " code bits)\n";
  return kOk;
}

int cmd_decompress(const CompressArgs& a, std::ostream& out) {
  const Encoded encoded = read_container(read_file(a.input));
  write_file(a.out, decompress(encoded), out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"List update: online algorithms, offline optima and advice"};
  app.name("lup");
  app.require_subcommand(1);
  std::function<int()> action;

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a sequence family");
  g->add_option("--family", gen.family,
                "bitstring|alpha|beta2|beta|gamma|delta|random")
      ->required();
  g->add_option("--bits", gen.spec.bits, "defining bitstring");
  g->add_option("--k", gen.spec.k, "repetitions (alpha, beta2)");
  g->add_option("--l", gen.spec.l, "list length");
  g->add_option("--m", gen.spec.m, "repetitions (beta, delta)");
  g->add_option("--s", gen.spec.s, "repetitions (gamma)");
  g->add_option("--n", gen.spec.n, "length (random)");
  g->add_option("--seed", gen.spec.seed, "seed (random)");
  g->add_option("-o,--out", gen.out, "output file, default stdout");
  g->callback([&] { action = [&] { return cmd_gen(gen, out, err); }; });

  RunArgs run_args;
  auto* r = app.add_subcommand("run", "simulate algorithms on a sequence file");
  r->add_option("--alg", run_args.algorithms,
                "mtf|ts|mtfo|mtfe|mtf2:<bits>|bit:<seed>|best3|subset")
      ->required()
      ->delimiter(',');
  r->add_option("-i,--input", run_args.input, "sequence file")->required();
  r->add_option("--model", run_args.model, "full|partial");
  r->add_option("--opt", run_args.opt, "none|auto|dp|subset|pair|strategy");
  r->add_option("--advice", run_args.advice, "advice tape for best3/subset");
  r->add_option("--tape-format", run_args.tape_format, "ascii|packed");
  add_output_flags(r, run_args.output);
  r->callback([&] { action = [&] { return cmd_run(run_args, out); }; });

  OptArgs opt_args;
  auto* o = app.add_subcommand("opt", "offline optimum of a sequence file");
  o->add_option("-i,--input", opt_args.input, "sequence file")->required();
  o->add_option("--model", opt_args.model, "full|partial");
  o->add_option("--mode", opt_args.mode, "dp|subset|pair|strategy|auto");
  o->add_flag("--trace", opt_args.trace, "print the optimal schedule");
  add_output_flags(o, opt_args.output);
  o->callback([&] { action = [&] { return cmd_opt(opt_args, out); }; });

  AdviceArgs adv;
  auto* a = app.add_subcommand("advice", "write or read advice tapes");
  a->require_subcommand(1);
  auto* aw = a->add_subcommand("write", "run an oracle and write its tape");
  aw->add_option("--kind", adv.kind, "best3|subset");
  aw->add_option("-i,--input", adv.input, "sequence file")->required();
  aw->add_option("--model", adv.model, "full|partial");
  aw->add_option("--tape-format", adv.tape_format, "ascii|packed");
  aw->add_option("-o,--out", adv.out, "tape file, default stdout");
  aw->callback([&] { action = [&] { return cmd_advice_write(adv, out, err); }; });
  auto* ar = a->add_subcommand("read", "decode a tape, optionally follow it");
  ar->add_option("--kind", adv.kind, "best3|subset");
  ar->add_option("--tape", adv.tape, "tape file")->required();
  ar->add_option("--tape-format", adv.tape_format, "ascii|packed");
  ar->add_option("-i,--input", adv.input, "sequence to serve with the tape");
  ar->add_option("--model", adv.model, "full|partial");
  add_output_flags(ar, adv.output);
  ar->callback([&] { action = [&] { return cmd_advice_read(adv, out); }; });

  ProjectArgs proj;
  auto* p = app.add_subcommand("project", "restrict a sequence to two items");
  p->add_option("-i,--input", proj.input, "sequence file")->required();
  p->add_option("--first", proj.first, "item token")->required();
  p->add_option("--second", proj.second, "item token")->required();
  p->add_option("-o,--out", proj.out, "output file, default stdout");
  p->callback([&] { action = [&] { return cmd_project(proj, out); }; });

  PhasesArgs ph;
  auto* phs = app.add_subcommand("phases", "phase decomposition and per-phase costs");
  phs->add_option("-i,--input", ph.input, "two-item sequence file")->required();
  add_output_flags(phs, ph.output);
  phs->callback([&] { action = [&] { return cmd_phases(ph, out); }; });

  ReportArgs rep;
  auto* rp = app.add_subcommand("report", "recompute a reference table");
  rp->add_option("suite", rep.suite,
                 "table1|table2|table3|table4|ratio-partial|ratio-full|"
                 "mtf2-2.5|advice-bound|all")
      ->required();
  rp->add_option("--gamma", rep.options.gamma, "competitive ratio (advice-bound)");
  rp->add_option("--k", rep.options.k_alpha, "alpha repetitions (ratio-partial)");
  rp->add_option("--l", rep.options.l, "list length");
  rp->add_option("--s", rep.options.s, "gamma repetitions");
  rp->add_option("--m", rep.options.m, "beta/delta repetitions");
  add_output_flags(rp, rep.output);
  rp->callback([&] { action = [&] { return cmd_report(rep, out); }; });

  CompressArgs comp;
  auto* c = app.add_subcommand("compress", "list-update compression");
  c->add_option("-i,--input", comp.input, "input file")->required();
  c->add_option("-o,--out", comp.out, "container file, default stdout");
  c->add_option("--alg", comp.algorithm, "mtf|ts|mtfo|mtfe|best3");
  c->callback([&] { action = [&] { return cmd_compress(comp, out, err); }; });

  CompressArgs decomp;
  auto* d = app.add_subcommand("decompress", "invert compress");
  d->add_option("-i,--input", decomp.input, "container file")->required();
  d->add_option("-o,--out", decomp.out, "output file, default stdout");
  d->callback([&] { action = [&] { return cmd_decompress(decomp, out); }; });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace lup::cli
