#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsl/report.hpp"

namespace qsl {

// Hard board-size ceilings for the command line. Counting stays cheap a bit
// longer than anything that walks or stores every solution. --cap can lower
// these per run but never raise them.
inline constexpr int kCliCountCap = 16;
inline constexpr int kCliExhaustiveCap = 13;

namespace cli_detail {

struct BoardRange {
  int lo = 0;
  int hi = 0;
};

inline int parse_int_strict(std::string_view text, const char* what) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument(std::string(what) + ": invalid integer '" + std::string(text) +
                                "'");
  }
  return value;
}

// Accepts "N" or an inclusive range "A..B".
inline BoardRange parse_board_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int_strict(text, "--n");
    return {n, n};
  }
  BoardRange range;
  range.lo = parse_int_strict(std::string_view(text).substr(0, dots), "--n");
  range.hi = parse_int_strict(std::string_view(text).substr(dots + 2), "--n");
  if (range.lo > range.hi) {
    throw std::invalid_argument("--n: empty range '" + text + "'");
  }
  return range;
}

inline std::string default_threads_text() {
  if (const char* env = std::getenv("QSL_THREADS"); env != nullptr && *env != '\0') {
    return env;
  }
  return "auto";
}

inline int parse_threads_text(const std::string& text) {
  if (text == "auto") return resolve_threads(0);
  int value = 0;
  try {
    value = parse_int_strict(text, "--threads");
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("--threads expects a positive integer or 'auto', got '" + text +
                                "'");
  }
  if (value <= 0) throw std::invalid_argument("--threads must be positive");
  return value;
}

inline int effective_cap(std::optional<int> user_cap, int hard_cap, std::ostream& err) {
  if (!user_cap) return hard_cap;
  if (*user_cap > hard_cap) {
    err << "warning: --cap " << *user_cap << " exceeds the hard limit " << hard_cap
        << "; clamping\n";
    return hard_cap;
  }
  return *user_cap;
}

// Returns a non-zero exit code with a message when the range does not fit
// the command's domain and cap.
inline int reject_range(BoardRange range, int min_n, int cap, const char* command,
                        std::ostream& err) {
  if (range.lo < min_n) {
    err << command << ": n must be >= " << min_n << "\n";
    return 2;
  }
  if (range.hi > cap) {
    err << command << ": n=" << range.hi << " exceeds the cap of " << cap << "\n";
    return 2;
  }
  return 0;
}

inline ReferenceTable load_reference_table(const std::string& path) {
  if (path.empty()) return builtin_reference_table();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read reference file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_reference_table(buffer.str());
}

inline int report_discrepancies(const std::vector<ResultRecord>& records,
                                const ReferenceTable& table, std::ostream& err) {
  const std::vector<Discrepancy> mismatches = cross_check(records, table);
  for (const Discrepancy& d : mismatches) {
    err << "cross-check mismatch at n=" << d.n << ": computed " << d.computed << ", reference "
        << d.expected << "\n";
  }
  return mismatches.empty() ? 0 : 1;
}

inline std::string squares_text(const Configuration& c) {
  std::string out;
  for (Square sq : c.squares()) {
    out += "(" + std::to_string(sq.row) + "," + std::to_string(sq.col) + ")";
  }
  return out.empty() ? "(empty)" : out;
}

inline int run_count(BoardRange range, Format format, int threads, int cap,
                     const std::string& reference_path, std::ostream& out, std::ostream& err) {
  if (const int code = reject_range(range, 1, cap, "count", err)) return code;
  std::vector<ResultRecord> records;
  for (int n = range.lo; n <= range.hi; ++n) {
    records.push_back(total_record(n, count_solutions(BoardSize(n), threads, cap)));
  }
  out << emit(records, format);
  return report_discrepancies(records, load_reference_table(reference_path), err);
}

inline int run_decompose(BoardRange range, Format format, int threads, int cap,
                         const std::string& reference_path, std::ostream& out,
                         std::ostream& err) {
  if (const int code = reject_range(range, 2, cap, "decompose", err)) return code;
  std::vector<ResultRecord> records;
  for (int n = range.lo; n <= range.hi; ++n) {
    SearchStats stats;
    const ClassCounts counts = decompose(BoardSize(n), threads, cap, &stats);
    ResultRecord record = make_record(counts);
    record.stats = RecordStats{stats.nodes_visited, stats.method};
    record.verdicts.push_back({"routes_agree", true, ""});
    record.verdicts.push_back({"class_identities", true, ""});
    records.push_back(std::move(record));
  }
  out << emit(records, format);
  return report_discrepancies(records, load_reference_table(reference_path), err);
}

inline int run_verify(int n_max, Format format, int threads, int cap, std::ostream& out,
                      std::ostream& err) {
  if (n_max < 2) {
    err << "verify: --n-max must be at least 2\n";
    return 2;
  }
  if (const int code = reject_range({2, n_max}, 2, cap, "verify", err)) return code;
  std::vector<Verdict> verdicts;
  for (int n = 2; n <= n_max; ++n) {
    const BoardSize board{n};
    detail::append_divisibility_verdicts(verdicts, board, threads, kDefaultCountCap);

    const EvennessCheck evenness = verify_evenness(board, cap);
    verdicts.push_back(
        {"evenness_pairing", n, evenness.ok, false, "pairs=" + std::to_string(evenness.pairs)});

    const auto violations = reflection_fixed_violations(board, cap);
    std::string detail_text;
    if (!violations.empty()) {
      detail_text = "fixed by " + std::string(to_string(violations.front().second)) + ": " +
                    squares_text(violations.front().first);
    }
    verdicts.push_back({"no_reflection_fixed", n, violations.empty(), false, detail_text});

    if (n >= 4 && (n % 4 == 0 || n % 4 == 1)) {
      verdicts.push_back({"fr_sum", n, verify_fr_sum(board), false, ""});
      verdicts.push_back({"mirror_buckets", n, verify_mirror_buckets(board), false, ""});

      std::vector<BorderReport> reports;
      reports.reserve(static_cast<std::size_t>(n));
      for (int ell = 1; ell <= n; ++ell) reports.push_back(verify_pairing(board, ell));
      if (n >= 6) {
        bool all_ok = true;
        std::string failing;
        for (const BorderReport& b : reports) {
          if (!b.pairing_ok) {
            all_ok = false;
            failing += (failing.empty() ? "ell=" : ",") + std::to_string(b.ell);
          }
        }
        verdicts.push_back({"border_pairing", n, all_ok, false, failing});
      } else {
        // The small boards are kept out of the main statement precisely
        // because an empty complement is mirror-fixed there.
        std::string ells;
        for (const BorderReport& b : reports) {
          if (b.fixed_point_witness && b.fixed_point_witness->empty()) {
            ells += (ells.empty() ? "empty complement at ell=" : ",") + std::to_string(b.ell);
          }
        }
        verdicts.push_back({"border_boundary_empty_complement", n, !ells.empty(), true, ells});
      }
    }
  }
  out << emit_verdicts(verdicts, format);
  int failures = 0;
  for (const Verdict& v : verdicts) {
    if (!v.pass) ++failures;
  }
  if (failures > 0) err << failures << " verdict(s) failed\n";
  return failures > 0 ? 1 : 0;
}

inline int run_buckets(int n, Format format, int cap, std::ostream& out, std::ostream& err) {
  if (n < 4 || (n % 4 != 0 && n % 4 != 1)) {
    err << "buckets: border analysis is defined for n = 4k or 4k+1 with n >= 4\n";
    return 2;
  }
  if (n > cap) {
    err << "buckets: n=" << n << " exceeds the cap of " << cap << "\n";
    return 2;
  }
  const BoardSize board{n};
  std::vector<BorderReport> reports;
  reports.reserve(static_cast<std::size_t>(n));
  for (int ell = 1; ell <= n; ++ell) reports.push_back(verify_pairing(board, ell));
  out << emit_border_reports(reports, format);
  int failures = 0;
  for (const BorderReport& b : reports) {
    if (b.completions != b.complements || !b.closure_ok) {
      err << "bucket ell=" << b.ell << ": structural invariant violated\n";
      ++failures;
    }
    if (n >= 6 && !b.pairing_ok) {
      err << "bucket ell=" << b.ell << ": pairing failed\n";
      ++failures;
    }
  }
  return failures > 0 ? 1 : 0;
}

struct CommonOptions {
  std::string format = "table";
  std::string threads = default_threads_text();
  int cap = 0;
  CLI::Option* cap_option = nullptr;

  void attach(CLI::App* sub) {
    sub->add_option("--format", format, "output format: json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--threads", threads,
                    "worker threads: a positive integer or 'auto' (default: QSL_THREADS or auto)");
    cap_option = sub->add_option("--cap", cap, "lower the board-size cap for this run")
                     ->check(CLI::PositiveNumber);
  }

  std::optional<int> user_cap() const {
    return cap_option != nullptr && cap_option->count() > 0 ? std::optional<int>(cap)
                                                            : std::nullopt;
  }
};

}  // namespace cli_detail

// Parses and runs one command line (without the program name). Returns the
// process exit code: 0 for success, 1 for a failed verification or reference
// mismatch, 2 for usage errors, impossible values, or capacity violations.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"n-queens counting, symmetry decomposition, and divisibility checking"};
  app.name("qsl");
  app.require_subcommand(1);

  std::string count_n, decompose_n;
  int verify_n_max = 0;
  int buckets_n = 0;
  std::string count_reference, decompose_reference;
  cli_detail::CommonOptions count_opts, decompose_opts, verify_opts, buckets_opts;

  CLI::App* count_cmd = app.add_subcommand("count", "count solutions of one or more boards");
  count_cmd->add_option("--n", count_n, "board size N or inclusive range A..B")->required();
  count_cmd->add_option("--reference-file", count_reference,
                        "CSV of known totals to cross-check against (replaces the built-in table)");
  count_opts.attach(count_cmd);

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "split counts by symmetry class, computed two ways");
  decompose_cmd->add_option("--n", decompose_n, "board size N or inclusive range A..B")
      ->required();
  decompose_cmd->add_option("--reference-file", decompose_reference,
                            "CSV of known totals to cross-check against");
  decompose_opts.attach(decompose_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run every divisibility and pairing check up to a bound");
  verify_cmd->add_option("--n-max", verify_n_max, "largest board size to check")->required();
  verify_opts.attach(verify_cmd);

  CLI::App* buckets_cmd =
      app.add_subcommand("buckets", "per-border-orbit completion counts and pairing checks");
  buckets_cmd->add_option("--n", buckets_n, "board size (must be 4k or 4k+1)")->required();
  buckets_opts.attach(buckets_cmd);

  try {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("qsl");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& a : storage) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (count_cmd->parsed()) {
      const Format format = parse_format(count_opts.format);
      const int threads = cli_detail::parse_threads_text(count_opts.threads);
      const int cap = cli_detail::effective_cap(count_opts.user_cap(), kCliCountCap, err);
      return cli_detail::run_count(cli_detail::parse_board_range(count_n), format, threads, cap,
                                   count_reference, out, err);
    }
    if (decompose_cmd->parsed()) {
      const Format format = parse_format(decompose_opts.format);
      const int threads = cli_detail::parse_threads_text(decompose_opts.threads);
      const int cap =
          cli_detail::effective_cap(decompose_opts.user_cap(), kCliExhaustiveCap, err);
      return cli_detail::run_decompose(cli_detail::parse_board_range(decompose_n), format,
                                       threads, cap, decompose_reference, out, err);
    }
    if (verify_cmd->parsed()) {
      const Format format = parse_format(verify_opts.format);
      const int threads = cli_detail::parse_threads_text(verify_opts.threads);
      const int cap = cli_detail::effective_cap(verify_opts.user_cap(), kCliExhaustiveCap, err);
      return cli_detail::run_verify(verify_n_max, format, threads, cap, out, err);
    }
    if (buckets_cmd->parsed()) {
      const Format format = parse_format(buckets_opts.format);
      const int cap = cli_detail::effective_cap(buckets_opts.user_cap(), kCliExhaustiveCap, err);
      return cli_detail::run_buckets(buckets_n, format, cap, out, err);
    }
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const consistency_error& e) {
    err << "consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    err << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand selected\n";
  return 2;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace qsl
