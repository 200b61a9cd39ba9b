// Copyright 2026 The oddrank authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oddrank/cli.hpp"

#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oddrank/named_states.hpp"
#include "oddrank/state_io.hpp"
#include "oddrank/tables.hpp"
#include "oddrank/verify.hpp"

namespace oddrank {

namespace {

using nlohmann::json;

struct InputOpts {
  std::string state_name;
  std::string file;
  std::optional<int> n;
  std::optional<int> l;
  std::string mode = "auto";
};

NumericMode parse_mode(const std::string& mode) {
  if (mode == "auto") return NumericMode::kAuto;
  if (mode == "float") return NumericMode::kFloat;
  if (mode == "rational") return NumericMode::kRational;
  throw std::invalid_argument("mode must be auto, float or rational");
}

AnyState load_state(const InputOpts& in) {
  if (!in.file.empty() && !in.state_name.empty()) {
    throw std::invalid_argument("give exactly one of --state and --file");
  }
  if (!in.file.empty()) return read_state_file(in.file);
  if (!in.state_name.empty()) {
    return make_named_state(in.state_name, in.n, in.l, parse_mode(in.mode));
  }
  throw std::invalid_argument("an input state is required (--state or --file)");
}

std::string input_description(const InputOpts& in) {
  return in.file.empty() ? in.state_name : in.file;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string scalar_to_text(const complex_t& z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real();
  if (z.imag() != 0.0) {
    os << (std::signbit(z.imag()) ? '-' : '+') << std::setprecision(17)
       << std::abs(z.imag()) << 'i';
  }
  return os.str();
}

std::string scalar_to_text(const ComplexRational& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

json scalar_to_json(const complex_t& z) {
  return json::array({z.real(), z.imag()});
}

json scalar_to_json(const ComplexRational& z) {
  std::ostringstream re, im;
  re << z.real();
  im << z.imag();
  return json::array({re.str(), im.str()});
}

json tolerance_json(const ToleranceConfig& tol) {
  return {{"rank_epsilon", tol.rank_epsilon},
          {"residual_epsilon", tol.residual_epsilon}};
}

std::string signature_text(const std::vector<int>& ranks) {
  std::string s = "(";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ranks[i]);
  }
  return s + ")";
}

struct RankRow {
  int qubit = 0;
  Rank rank;
  std::string p, t, q;
  json jp, jt, jq;
  double abs_det = 0.0;
  double tangle = 0.0;
};

int cmd_rank(const InputOpts& in, std::vector<int> qubits,
             const ToleranceConfig& tol, const std::string& format,
             std::ostream& out) {
  const AnyState state = load_state(in);
  const int n = num_qubits(state);
  if (qubits.empty()) {
    qubits.resize(static_cast<std::size_t>(n));
    std::iota(qubits.begin(), qubits.end(), 1);
  }

  std::vector<RankRow> rows;
  std::visit(
      [&](const auto& st) {
        for (int q : qubits) {
          const auto cm = coefficient_matrix(st, q);
          RankRow row;
          row.qubit = q;
          row.rank = matrix_rank(cm, tol);
          row.p = scalar_to_text(cm.m(0, 0));
          row.t = scalar_to_text(cm.m(0, 1));
          row.q = scalar_to_text(cm.m(1, 1));
          row.jp = scalar_to_json(cm.m(0, 0));
          row.jt = scalar_to_json(cm.m(0, 1));
          row.jq = scalar_to_json(cm.m(1, 1));
          row.abs_det = scalar_abs_double(cm.determinant());
          row.tangle = row.abs_det / (cm.state_norm2 * cm.state_norm2);
          rows.push_back(std::move(row));
        }
      },
      state);

  if (format == "structured") {
    json doc{{"command", "rank"},
             {"input", input_description(in)},
             {"n", n},
             {"convention", "qubit1=MSB"},
             {"mode", mode_name(state)},
             {"tolerance", tolerance_json(tol)}};
    json jrows = json::array();
    for (const auto& r : rows) {
      jrows.push_back({{"qubit", r.qubit},
                       {"rank", r.rank.value},
                       {"boundary", r.rank.boundary},
                       {"P", r.jp},
                       {"T", r.jt},
                       {"Q", r.jq},
                       {"abs_det", r.abs_det},
                       {"tangle_proxy", r.tangle}});
    }
    doc["qubits"] = std::move(jrows);
    out << doc.dump(2) << '\n';
  } else {
    out << "state: " << input_description(in) << " (n=" << n
        << ", mode=" << mode_name(state) << ", convention qubit1=MSB)\n";
    out << "rank_epsilon: " << fmt_double(tol.rank_epsilon) << "\n\n";
    out << "qubit  rank  boundary  |det M|                 P / T / Q\n";
    for (const auto& r : rows) {
      out << std::setw(5) << r.qubit << "  " << std::setw(4) << r.rank.value
          << "  " << std::setw(8) << (r.rank.boundary ? "YES" : "no") << "  "
          << std::setw(22) << fmt_double(r.abs_det) << "  " << r.p << " / "
          << r.t << " / " << r.q << '\n';
    }
  }
  return 0;
}

int cmd_classify(const InputOpts& in, std::optional<int> k,
                 const ToleranceConfig& tol, const std::string& format,
                 std::ostream& out) {
  const AnyState state = load_state(in);
  const int n = num_qubits(state);
  const int kk = k.value_or(n);

  const FamilySignature sig = std::visit(
      [&](const auto& st) { return family_signature(st, kk, tol); }, state);

  if (format == "structured") {
    json doc{{"command", "classify"},
             {"input", input_description(in)},
             {"n", n},
             {"k", kk},
             {"convention", "qubit1=MSB"},
             {"mode", mode_name(state)},
             {"tolerance", tolerance_json(tol)},
             {"ranks", sig.ranks},
             {"boundary", json::array()},
             {"family", family_label(sig)}};
    for (bool b : sig.boundary) doc["boundary"].push_back(b);
    out << doc.dump(2) << '\n';
  } else {
    out << "state: " << input_description(in) << " (n=" << n
        << ", mode=" << mode_name(state) << ", convention qubit1=MSB)\n";
    out << "rank_epsilon: " << fmt_double(tol.rank_epsilon) << '\n';
    out << "signature over qubits 1.." << kk << ": "
        << signature_text(sig.ranks);
    if (sig.any_boundary()) out << "  [boundary warning]";
    out << '\n';
    out << "family: " << family_label(sig) << '\n';
  }
  return 0;
}

int cmd_verify(long trials, std::vector<int> ns, std::uint64_t seed,
               const ToleranceConfig& tol, const std::string& format,
               bool corrupt, std::ostream& out) {
  SuiteConfig config;
  config.trials = trials;
  if (!ns.empty()) config.ns = std::move(ns);
  config.seed = seed;
  config.tol = tol;
  config.corrupt_covariance = corrupt;

  const CovarianceReport cov = run_covariance_suite(config);
  const LemmaReport lem = run_lemma_suite(config);
  const OracleReport oracle = run_alt_oracle_suite(config);

  const double gate = tol.residual_epsilon;
  const bool pass = cov.max_matrix_residual < gate &&
                    cov.max_det_residual < gate && cov.rank_mismatches == 0 &&
                    lem.max_lemma1 < gate && lem.max_lemma2 < gate &&
                    oracle.max_relative < gate;

  if (format == "structured") {
    json doc{
        {"command", "verify"},
        {"seed", seed},
        {"trials_per_n", config.trials},
        {"ns", config.ns},
        {"convention", "qubit1=MSB"},
        {"tolerance", tolerance_json(tol)},
        {"covariance",
         {{"trials", cov.trials},
          {"max_matrix_residual", cov.max_matrix_residual},
          {"max_det_residual", cov.max_det_residual},
          {"rank_mismatches", cov.rank_mismatches},
          {"boundary_trials", cov.boundary_trials}}},
        {"lemmas",
         {{"trials", lem.trials},
          {"max_lemma1", lem.max_lemma1},
          {"max_lemma2", lem.max_lemma2}}},
        {"alt_oracle",
         {{"trials", oracle.trials}, {"max_relative", oracle.max_relative}}},
        {"pass", pass}};
    out << doc.dump(2) << '\n';
  } else {
    out << "verification (seed=" << seed << ", trials=" << config.trials
        << " per n, n =";
    for (int n : config.ns) out << ' ' << n;
    out << ")\n";
    out << "  covariance: trials=" << cov.trials
        << "  max matrix residual=" << fmt_double(cov.max_matrix_residual)
        << "  max det residual=" << fmt_double(cov.max_det_residual)
        << "  rank mismatches=" << cov.rank_mismatches
        << "  boundary trials=" << cov.boundary_trials << '\n';
    out << "  lemmas:     trials=" << lem.trials
        << "  max lemma1=" << fmt_double(lem.max_lemma1)
        << "  max lemma2=" << fmt_double(lem.max_lemma2) << '\n';
    out << "  alt oracle: trials=" << oracle.trials
        << "  max relative=" << fmt_double(oracle.max_relative) << '\n';
    out << "  gate: residual_epsilon=" << fmt_double(gate) << '\n';
    out << "RESULT: " << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? 0 : 1;
}

void print_table(const TableReport& report, std::ostream& out) {
  out << "table " << report.table_id << ": " << report.caption << '\n';
  std::size_t wf = 6, ws = 5;
  for (const auto& r : report.rows) {
    wf = std::max(wf, r.family.size());
    ws = std::max(ws, r.state_name.size());
  }
  out << "  " << std::left << std::setw(static_cast<int>(wf)) << "family"
      << "  " << std::setw(static_cast<int>(ws)) << "state"
      << "  expected   computed   ok\n";
  for (const auto& r : report.rows) {
    out << "  " << std::left << std::setw(static_cast<int>(wf)) << r.family
        << "  " << std::setw(static_cast<int>(ws)) << r.state_name << "  "
        << std::setw(9) << signature_text(r.expected) << "  " << std::setw(9)
        << signature_text(r.computed) << "  " << (r.pass ? "pass" : "FAIL")
        << '\n';
  }
  out << std::right;
  long passed = 0;
  for (const auto& r : report.rows) passed += r.pass ? 1 : 0;
  out << "  " << passed << '/' << report.rows.size() << " rows pass\n";
}

json table_json(const TableReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"family", r.family},
                    {"state", r.state_name},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"pass", r.pass}});
  }
  return {{"table", report.table_id},
          {"caption", report.caption},
          {"qubits", report.qubits},
          {"rows", std::move(rows)},
          {"all_pass", report.all_pass}};
}

int cmd_tables(const std::string& id, const std::string& format,
               std::ostream& out) {
  std::vector<TableReport> reports;
  if (id == "all") {
    for (const auto& t : table_catalog()) reports.push_back(reproduce_table(t));
  } else {
    reports.push_back(reproduce_table(id));
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.all_pass;

  if (format == "structured") {
    json doc{{"command", "tables"},
             {"convention", "qubit1=MSB"},
             {"mode", "rational"},
             {"all_pass", all_pass},
             {"tables", json::array()}};
    for (const auto& r : reports) doc["tables"].push_back(table_json(r));
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      print_table(r, out);
      out << '\n';
    }
    out << "RESULT: " << (all_pass ? "PASS" : "FAIL") << '\n';
  }
  return all_pass ? 0 : 1;
}

int cmd_gen(const InputOpts& in, const std::string& out_path,
            std::ostream& out) {
  if (in.state_name.empty()) {
    throw std::invalid_argument("gen requires --state NAME");
  }
  const AnyState state = load_state(in);
  if (out_path == "-") {
    write_state(out, state);
  } else {
    write_state_file(out_path, state);
    out << "wrote " << in.state_name << " (n=" << num_qubits(state)
        << ", mode=" << mode_name(state) << ") to " << out_path << '\n';
  }
  return 0;
}

void add_input_options(CLI::App* sub, InputOpts& in) {
  auto* state = sub->add_option("--state", in.state_name,
                                "named state (GHZ, W, Dicke, zero, "
                                "basis:<bits>, Phi1..Phi4, table5:<r1><r2>, "
                                "A-BC, B-AC, C-AB, A-B-C)");
  auto* file = sub->add_option("--file", in.file, "state file to read");
  state->excludes(file);
  file->excludes(state);
  sub->add_option("--n", in.n, "qubit count for named states (odd, >= 3)");
  sub->add_option("--l", in.l, "Dicke excitation count");
  sub->add_option("--mode", in.mode, "numeric mode: auto, float or rational")
      ->check(CLI::IsMember({"auto", "float", "rational"}));
}

void add_format_option(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"per-qubit rank invariants and SLOCC family classification "
               "for odd-n qubit pure states"};
  app.require_subcommand(1);

  // rank
  InputOpts rank_in;
  std::vector<int> rank_qubits;
  double rank_tol = -1.0;
  std::string rank_format = "text";
  auto* rank = app.add_subcommand(
      "rank", "per-qubit ranks, coefficient matrices and |det M|");
  add_input_options(rank, rank_in);
  rank->add_option("--qubits", rank_qubits, "qubits to report (default: all)")
      ->delimiter(',');
  rank->add_option("--tol", rank_tol, "override rank_epsilon");
  add_format_option(rank, rank_format);

  // classify
  InputOpts cls_in;
  std::optional<int> cls_k;
  double cls_tol = -1.0;
  std::string cls_format = "text";
  auto* classify = app.add_subcommand(
      "classify", "family signature and label over qubits 1..k");
  add_input_options(classify, cls_in);
  classify->add_option("--k", cls_k, "signature prefix length (default: n)");
  classify->add_option("--tol", cls_tol, "override rank_epsilon");
  add_format_option(classify, cls_format);

  // verify
  long ver_trials = 200;
  std::vector<int> ver_ns;
  std::uint64_t ver_seed = 42;
  double ver_tol = -1.0;
  std::string ver_format = "text";
  bool ver_corrupt = false;
  auto* verify = app.add_subcommand(
      "verify", "randomized covariance, lemma and oracle suites");
  verify->add_option("--trials", ver_trials, "trials per n (default 200)");
  verify->add_option("--n", ver_ns, "qubit counts, e.g. 3,5,7 (default 3,5)")
      ->delimiter(',');
  verify->add_option("--seed", ver_seed, "RNG seed (default 42)");
  verify->add_option("--tol", ver_tol, "override residual_epsilon");
  add_format_option(verify, ver_format);
  verify
      ->add_flag("--corrupt-covariance", ver_corrupt,
                 "self-test hook: break the covariance formula")
      ->group("");

  // tables
  std::string table_id = "all";
  std::string tab_format = "text";
  auto* tables = app.add_subcommand(
      "tables", "reproduce the published family tables");
  tables->add_option("--table", table_id, "table id: 1, 2, 3, 4, 5 or all");
  add_format_option(tables, tab_format);

  // gen
  InputOpts gen_in;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "emit a named state to a state file");
  add_input_options(gen, gen_in);
  gen->add_option("--out,-o", gen_out, "output path ('-' for stdout)")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("oddrank");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rank->parsed()) {
      ToleranceConfig tol;
      if (rank_tol > 0) tol.rank_epsilon = rank_tol;
      return cmd_rank(rank_in, rank_qubits, tol, rank_format, out);
    }
    if (classify->parsed()) {
      ToleranceConfig tol;
      if (cls_tol > 0) tol.rank_epsilon = cls_tol;
      return cmd_classify(cls_in, cls_k, tol, cls_format, out);
    }
    if (verify->parsed()) {
      ToleranceConfig tol;
      if (ver_tol > 0) tol.residual_epsilon = ver_tol;
      return cmd_verify(ver_trials, ver_ns, ver_seed, tol, ver_format,
                        ver_corrupt, out);
    }
    if (tables->parsed()) return cmd_tables(table_id, tab_format, out);
    if (gen->parsed()) return cmd_gen(gen_in, gen_out, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace oddrank
