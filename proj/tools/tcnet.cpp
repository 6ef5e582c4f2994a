// tcnet — command-line front end of the treechild shared library.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or budget error, 3 internal-consistency failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "treechild/treechild.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

struct GlobalConfig {
  std::string format = "text";
  std::string manifest_path;
  std::string output_path;
  int jobs = 0;
  int max_enum_len = 24;
  long max_dp_n = 2000;
  long max_series_order = 4096;
};

int exit_code_for(tc_status status) {
  switch (status) {
    case TC_OK: return kExitOk;
    case TC_ERR_INVALID_ARGUMENT:
    case TC_ERR_BUDGET_EXCEEDED: return kExitUsage;
    case TC_ERR_INCONSISTENT:
    case TC_ERR_INTERNAL: return kExitInconsistent;
  }
  return kExitInconsistent;
}

int fail(tc_status status) {
  if (status == TC_ERR_INCONSISTENT)
    std::cerr << "tcnet: INTERNAL CONSISTENCY FAILURE (a cross-checked route "
                 "disagreed): "
              << tc_last_error_message() << "\n";
  else
    std::cerr << "tcnet: error: " << tc_last_error_message() << "\n";
  return exit_code_for(status);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  tc_string_free(s);
  return out;
}

class Output {
 public:
  explicit Output(const GlobalConfig& cfg) {
    if (!cfg.output_path.empty()) {
      file_.open(cfg.output_path);
      if (!file_) throw CLI::ValidationError("--output: cannot open file");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_manifest(const GlobalConfig& cfg, const std::string& command,
                    double seconds, int exit_code) {
  if (cfg.manifest_path.empty()) return;
  json doc;
  doc["tool"] = "tcnet";
  doc["version"] = tc_version();
  doc["command"] = command;
  doc["jobs"] = cfg.jobs;
  doc["budgets"] = {{"max_enum_len", cfg.max_enum_len},
                    {"max_dp_n", cfg.max_dp_n},
                    {"max_series_order", cfg.max_series_order}};
  doc["seconds"] = seconds;
  doc["exit_code"] = exit_code;
  std::ofstream out(cfg.manifest_path);
  out << doc.dump(2) << "\n";
}

// ---- enumerate ------------------------------------------------------

struct EnumerateArgs {
  std::string cls;
  int n = 0;
  int k = -1;
  bool list = false;
  bool h_all_letters = false;
};

int run_enumerate(const GlobalConfig& cfg, const EnumerateArgs& args) {
  Output out(cfg);
  const char cls = args.cls[0];
  const int k = args.k >= 0 ? args.k : args.n;
  char* count_str = nullptr;
  tc_status st = tc_words_count(cls, args.n, k, cfg.max_enum_len,
                                args.h_all_letters ? 1 : 0, &count_str);
  if (st != TC_OK) return fail(st);
  const std::string count = take_string(count_str);

  std::vector<std::string> words;
  if (args.list) {
    char** arr = nullptr;
    size_t len = 0;
    st = tc_words_list(cls, args.n, k, cfg.max_enum_len,
                       args.h_all_letters ? 1 : 0, &arr, &len);
    if (st != TC_OK) return fail(st);
    words.reserve(len);
    for (size_t i = 0; i < len; ++i) words.emplace_back(arr[i]);
    tc_string_array_free(arr, len);
  }

  if (cfg.format == "json") {
    json doc;
    doc["class"] = std::string(1, cls);
    doc["n"] = args.n;
    doc["k"] = k;
    doc["count"] = count;
    if (args.list) doc["words"] = words;
    out.stream() << doc.dump() << "\n";
  } else if (args.list) {
    for (const auto& w : words) out.stream() << w << "\n";
  } else {
    out.stream() << count << "\n";
  }
  return kExitOk;
}

// ---- count ----------------------------------------------------------

struct CountArgs {
  std::string model = "paths";
  std::string seq;
  long n = 0;
  long k = 0;
  bool table = false;
  long max_n = 0;
  bool dyck = false;
};

int run_count(const GlobalConfig& cfg, const CountArgs& args) {
  Output out(cfg);
  auto one = [&](long n, long k, char** value) {
    if (n > cfg.max_dp_n) {
      std::cerr << "tcnet: error: n exceeds --max-dp-n budget\n";
      return TC_ERR_BUDGET_EXCEEDED;
    }
    if (args.seq == "b")
      return args.dyck ? tc_b_count_dyck(n, k, value) : tc_b_count(n, k, value);
    return tc_c_count(n, k, value);
  };

  if (args.table) {
    const long limit = args.max_n > 0 ? args.max_n : args.n;
    std::ostringstream csv;
    csv << "n,k,value\n";
    for (long n = 0; n <= limit; ++n)
      for (long k = 0; k <= n; ++k) {
        char* v = nullptr;
        const tc_status st = one(n, k, &v);
        if (st != TC_OK) return fail(st);
        csv << n << "," << k << "," << take_string(v) << "\n";
      }
    out.stream() << csv.str();
    return kExitOk;
  }

  char* v = nullptr;
  const tc_status st = one(args.n, args.k, &v);
  if (st != TC_OK) return fail(st);
  const std::string value = take_string(v);
  if (cfg.format == "json") {
    json doc{{"model", args.model}, {"seq", args.seq}, {"n", args.n},
             {"k", args.k},         {"value", value}};
    out.stream() << doc.dump() << "\n";
  } else {
    out.stream() << value << "\n";
  }
  return kExitOk;
}

// ---- tc -------------------------------------------------------------

int run_tc(const GlobalConfig& cfg, long n, long k) {
  Output out(cfg);
  char* v = nullptr;
  const tc_status st = tc_network_count(n, k, &v);
  if (st != TC_OK) return fail(st);
  const std::string value = take_string(v);
  if (cfg.format == "json") {
    json doc{{"n", n}, {"k", k}, {"tree_child_networks", value}};
    out.stream() << doc.dump() << "\n";
  } else {
    out.stream() << value << "\n";
  }
  return kExitOk;
}

// ---- verify identity --------------------------------------------------

struct VerifyArgs {
  std::string mode = "both";
  long max_n = 150;
  long max_k = 20;
  long order = 0;
};

int run_verify_identity(const GlobalConfig& cfg, const VerifyArgs& args) {
  Output out(cfg);
  bool all_passed = true;
  json doc;
  doc["mode"] = args.mode;

  auto print_report = [&](const char* which, tc_report* rep) {
    json lines = json::array();
    for (size_t i = 0; i < tc_report_line_count(rep); ++i) {
      if (cfg.format == "text")
        out.stream() << which << ": " << tc_report_line(rep, i) << "\n";
      lines.push_back(tc_report_line(rep, i));
    }
    doc[which] = {{"passed", tc_report_passed(rep) == 1}, {"lines", lines}};
    all_passed = all_passed && tc_report_passed(rep) == 1;
    tc_report_free(rep);
  };

  if (args.mode == "tableaux" || args.mode == "both") {
    tc_report* rep = nullptr;
    const tc_status st = tc_verify_tableau_identity(args.max_n, &rep);
    if (st != TC_OK) return fail(st);
    print_report("tableaux", rep);
  }
  if (args.mode == "series" || args.mode == "both") {
    tc_report* rep = nullptr;
    const tc_status st = tc_verify_series_identity(
        args.max_k, args.order,
        cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::thread::hardware_concurrency()),
        &rep);
    if (st != TC_OK) return fail(st);
    print_report("series", rep);
  }

  doc["passed"] = all_passed;
  if (cfg.format == "json") out.stream() << doc.dump() << "\n";
  else out.stream() << (all_passed ? "PASS" : "FAIL") << "\n";
  return all_passed ? kExitOk : kExitVerifyFailed;
}

// ---- series -----------------------------------------------------------

struct SeriesArgs {
  std::string which;
  long k = 0;
  long order = 16;
};

int run_series(const GlobalConfig& cfg, const SeriesArgs& args) {
  Output out(cfg);
  if (args.order > cfg.max_series_order) {
    std::cerr << "tcnet: error: order exceeds --max-series-order budget\n";
    return kExitUsage;
  }
  tc_series* s = nullptr;
  const tc_status st = tc_series_compute(args.which[0], args.k, args.order, &s);
  if (st != TC_OK) return fail(st);
  std::vector<std::string> coeffs;
  for (long i = 0; i < tc_series_order(s); ++i) {
    char* c = nullptr;
    if (tc_series_coeff(s, i, &c) != TC_OK) {
      tc_series_free(s);
      return fail(TC_ERR_INTERNAL);
    }
    coeffs.push_back(take_string(c));
  }
  tc_series_free(s);

  if (cfg.format == "json") {
    json doc{{"which", args.which}, {"k", args.k}, {"order", args.order},
             {"coeffs", coeffs}};
    out.stream() << doc.dump() << "\n";
  } else if (cfg.format == "csv") {
    out.stream() << "power,coefficient\n";
    for (size_t i = 0; i < coeffs.size(); ++i)
      out.stream() << i << "," << coeffs[i] << "\n";
  } else {
    for (size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != "0")
        out.stream() << (args.which == "C" ? "w^" : "z^") << i << ": "
                     << coeffs[i] << "\n";
  }
  return kExitOk;
}

// ---- dist -------------------------------------------------------------

struct DistArgs {
  std::string param;
  long n = 0;
  std::string emit = "text";
  bool converge = false;
  std::vector<long> n_list;
  int r_max = 4;
};

int run_dist(const GlobalConfig& cfg, const DistArgs& args) {
  Output out(cfg);
  const char param = args.param[0];

  if (args.converge) {
    std::vector<long> ns =
        args.n_list.empty() ? std::vector<long>{125, 250, 500, 1000, 2000}
                            : args.n_list;
    char* raw = nullptr;
    const tc_status st =
        tc_convergence_report(param, ns.data(), ns.size(), args.r_max, &raw);
    if (st != TC_OK) return fail(st);
    const json doc = json::parse(take_string(raw));
    if (args.emit == "json" || cfg.format == "json") {
      out.stream() << doc.dump() << "\n";
    } else {
      out.stream() << "param,n,r,moment,target,gap\n";
      for (const auto& row : doc["rows"])
        out.stream() << doc["param"].get<std::string>() << "," << row["n"]
                     << "," << row["r"] << "," << row["moment"] << ","
                     << row["target"] << "," << row["gap"] << "\n";
    }
    return kExitOk;
  }

  if (args.n > cfg.max_dp_n) {
    std::cerr << "tcnet: error: n exceeds --max-dp-n budget\n";
    return kExitUsage;
  }
  tc_dist* d = nullptr;
  const tc_status st = tc_dist_compute(param, args.n, &d);
  if (st != TC_OK) return fail(st);

  struct Row {
    long m;
    double decimal;
    std::string fraction;
  };
  std::vector<Row> rows;
  for (long m = tc_dist_support_min(d); m <= tc_dist_support_max(d); ++m) {
    char* f = nullptr;
    double dec = 0.0;
    if (tc_dist_mass(d, m, &f) != TC_OK ||
        tc_dist_mass_double(d, m, &dec) != TC_OK) {
      tc_dist_free(d);
      return fail(TC_ERR_INTERNAL);
    }
    rows.push_back({m, dec, take_string(f)});
  }
  tc_dist_free(d);

  if (args.emit == "json" || cfg.format == "json") {
    json doc;
    doc["param"] = std::string(1, param);
    doc["n"] = args.n;
    json jrows = json::array();
    for (const auto& r : rows)
      jrows.push_back({{"m", r.m}, {"p", r.decimal}, {"exact", r.fraction}});
    doc["masses"] = std::move(jrows);
    out.stream() << doc.dump() << "\n";
  } else if (args.emit == "csv" || cfg.format == "csv") {
    out.stream() << "m,probability,exact\n";
    char buf[32];
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%.12g", r.decimal);
      out.stream() << r.m << "," << buf << "," << r.fraction << "\n";
    }
  } else {
    char buf[32];
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%.12g", r.decimal);
      out.stream() << r.m << "\t" << buf << "\t" << r.fraction << "\n";
    }
  }
  return kExitOk;
}

// ---- tableau ------------------------------------------------------------

struct TableauArgs {
  std::string from_word;
  std::string cls;
  int n = 0;
  int k = 0;
};

int run_tableau(const GlobalConfig& cfg, const TableauArgs& args) {
  Output out(cfg);
  char* doc = nullptr;
  const tc_status st =
      tc_word_to_tableau(args.from_word.c_str(), args.cls[0], args.n, args.k, &doc);
  if (st != TC_OK) return fail(st);
  const std::string text = take_string(doc);
  if (cfg.format == "text") {
    // rows arrive bottom-to-top; print top-to-bottom for reading
    const json parsed = json::parse(text);
    const auto& rows = parsed["rows"];
    for (int r = 2; r >= 0; --r) {
      for (const auto& cell : rows[r]) {
        if (cell.is_null())
          out.stream() << "  . ";
        else
          out.stream() << " " << std::setw(2) << cell.get<int>() << " ";
      }
      out.stream() << "\n";
    }
  } else {
    out.stream() << text << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and verification toolkit for tree-child "
               "network combinatorics"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = hardware)")
      ->envname("TCNET_JOBS");
  app.add_option("--manifest", cfg.manifest_path,
                 "Write a reproducibility manifest (JSON) to this path");
  app.add_option("--output", cfg.output_path, "Write results to a file");
  app.add_option("--max-enum-len", cfg.max_enum_len,
                 "Budget: largest total word length enumerated")
      ->envname("TCNET_MAX_ENUM_LEN")
      ->capture_default_str();
  app.add_option("--max-dp-n", cfg.max_dp_n,
                 "Budget: largest n for table computations")
      ->envname("TCNET_MAX_DP_N")
      ->capture_default_str();
  app.add_option("--max-series-order", cfg.max_series_order,
                 "Budget: largest series truncation order")
      ->envname("TCNET_MAX_SERIES_ORDER")
      ->capture_default_str();

  EnumerateArgs enum_args;
  auto* cmd_enum = app.add_subcommand("enumerate", "Enumerate a word class");
  cmd_enum->add_option("--class", enum_args.cls, "Word class")
      ->check(CLI::IsMember({"A", "B", "C", "H"}))
      ->required();
  cmd_enum->add_option("--n", enum_args.n, "Alphabet size")->required();
  cmd_enum->add_option("--k", enum_args.k, "Number of thrice-letters");
  cmd_enum->add_flag("--list", enum_args.list, "Print one word per line");
  cmd_enum->add_flag("--h-all-letters", enum_args.h_all_letters,
                     "Strict H reading: all n letters, not just seen ones");

  CountArgs count_args;
  auto* cmd_count = app.add_subcommand("count", "Weighted lattice-path counts");
  cmd_count->add_option("--model", count_args.model)
      ->check(CLI::IsMember({"paths"}))
      ->capture_default_str();
  cmd_count->add_option("--seq", count_args.seq, "Which family")
      ->check(CLI::IsMember({"b", "c"}))
      ->required();
  cmd_count->add_option("--n", count_args.n);
  cmd_count->add_option("--k", count_args.k);
  cmd_count->add_flag("--table", count_args.table, "Emit a CSV table");
  cmd_count->add_option("--max-n", count_args.max_n, "Table upper bound");
  cmd_count->add_flag("--dyck", count_args.dyck,
                      "Use the bicolored Dyck-path form of the b model");

  long tc_n = 0, tc_k = 0;
  auto* cmd_tc = app.add_subcommand("tc", "Count tree-child networks");
  cmd_tc->add_option("--n", tc_n, "Leaves")->required();
  cmd_tc->add_option("--k", tc_k, "Reticulation nodes")->required();

  VerifyArgs verify_args;
  auto* cmd_verify = app.add_subcommand("verify", "Verification suites");
  cmd_verify->require_subcommand(1);
  auto* cmd_identity =
      cmd_verify->add_subcommand("identity", "Check the count identity");
  cmd_identity->add_option("--mode", verify_args.mode)
      ->check(CLI::IsMember({"tableaux", "series", "both"}))
      ->capture_default_str();
  cmd_identity->add_option("--max-n", verify_args.max_n, "Tableaux bound")
      ->capture_default_str();
  cmd_identity->add_option("--max-k", verify_args.max_k, "Series bound")
      ->capture_default_str();
  cmd_identity->add_option("--order", verify_args.order,
                           "Series order (0 = per-k default 2k+40)");

  SeriesArgs series_args;
  auto* cmd_series = app.add_subcommand("series", "Print series coefficients");
  cmd_series->add_option("--which", series_args.which)
      ->check(CLI::IsMember({"D", "E", "B", "C"}))
      ->required();
  cmd_series->add_option("--k", series_args.k);
  cmd_series->add_option("--order", series_args.order)->capture_default_str();

  DistArgs dist_args;
  auto* cmd_dist = app.add_subcommand("dist", "Exact k=1 distributions");
  cmd_dist->add_option("--param", dist_args.param)
      ->check(CLI::IsMember({"X", "Y", "Z"}))
      ->required();
  cmd_dist->add_option("--n", dist_args.n);
  cmd_dist->add_option("--emit", dist_args.emit)
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd_dist->add_flag("--converge", dist_args.converge,
                     "Emit the moment-convergence table");
  cmd_dist->add_option("--n-list", dist_args.n_list, "Sizes for --converge")
      ->delimiter(',');
  cmd_dist->add_option("--r-max", dist_args.r_max, "Largest moment order")
      ->capture_default_str();

  TableauArgs tab_args;
  auto* cmd_tab = app.add_subcommand("tableau", "Word/tableau correspondence");
  cmd_tab->add_option("--from-word", tab_args.from_word)->required();
  cmd_tab->add_option("--class", tab_args.cls)
      ->check(CLI::IsMember({"A", "B", "C"}))
      ->required();
  cmd_tab->add_option("--n", tab_args.n)->required();
  cmd_tab->add_option("--k", tab_args.k);

  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    if (i) command_line += ' ';
    command_line += argv[i];
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitUsage;
  try {
    if (cmd_enum->parsed()) code = run_enumerate(cfg, enum_args);
    else if (cmd_count->parsed()) code = run_count(cfg, count_args);
    else if (cmd_tc->parsed()) code = run_tc(cfg, tc_n, tc_k);
    else if (cmd_verify->parsed()) code = run_verify_identity(cfg, verify_args);
    else if (cmd_series->parsed()) code = run_series(cfg, series_args);
    else if (cmd_dist->parsed()) code = run_dist(cfg, dist_args);
    else if (cmd_tab->parsed()) code = run_tableau(cfg, tab_args);
  } catch (const std::exception& e) {
    std::cerr << "tcnet: error: " << e.what() << "\n";
    code = kExitUsage;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(cfg, command_line, seconds, code);
  return code;
}
