#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "linedi/digraph_io.hpp"
#include "linedi/error.hpp"
#include "linedi/families.hpp"
#include "linedi/metrics.hpp"
#include "linedi/oeis.hpp"
#include "linedi/oeis_remote.hpp"
#include "linedi/report_io.hpp"
#include "linedi/sequences.hpp"

namespace linedi::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3, kDisagreement = 4 };

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceLimit:
    case ErrorKind::EnumerationCapExceeded: return kResource;
    case ErrorKind::MethodDisagreement: return kDisagreement;
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::DuplicateLabel:
    case ErrorKind::LabelCountMismatch:
    case ErrorKind::EmptyDigraph:
    case ErrorKind::ParamOutOfRange:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InvalidPartition:
    case ErrorKind::InvalidSpec:
    case ErrorKind::ParseError:
    case ErrorKind::TooFewTerms:
    case ErrorKind::InsufficientTerms: return kUsage;
    default: return kFailure;
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::vector<BigInt> parse_terms(const std::string& s) {
  std::vector<BigInt> out;
  for (const auto& tok : split_list(s)) {
    const std::size_t digits_from = tok[0] == '-' ? 1 : 0;
    if (tok.size() == digits_from || tok.find_first_not_of("0123456789", digits_from) != std::string::npos) {
      fail(ErrorKind::ParseError, "not an integer: '" + tok + "'");
    }
    out.emplace_back(tok);
  }
  return out;
}

inline Digraph read_input(const std::string& path) {
  if (path == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return read_text(text);
  }
  return read_text_file(path);
}

inline bool use_color(int fd) { return std::getenv("NO_COLOR") == nullptr && ::isatty(fd) == 1; }

inline void report_error(std::ostream& err, const std::string& msg, bool color) {
  err << (color ? "\033[31merror:\033[0m " : "error: ") << msg << "\n";
}

struct SequenceFlags {
  std::size_t k = 10;
  std::string method = "both";
  bool json = false;
  bool table = false;
  bool csv = false;
  std::string sep = " ";
  std::string db;
};

inline void add_sequence_flags(CLI::App* cmd, SequenceFlags& f) {
  cmd->add_option("--k", f.k, "Largest iterate index K")->capture_default_str();
  cmd->add_option("--method", f.method, "direct, recurrence or both")
      ->check(CLI::IsMember({"direct", "recurrence", "both"}))
      ->capture_default_str();
  auto* json = cmd->add_flag("--json", f.json, "Print the full report as JSON");
  auto* table = cmd->add_flag("--table", f.table, "Print a Markdown table row");
  cmd->add_flag("--csv", f.csv, "With --table, print CSV instead of Markdown");
  json->excludes(table);
  cmd->add_option("--sep", f.sep, "Separator between terms")->capture_default_str();
  cmd->add_option("--db", f.db, "Local OEIS snapshot (plain or .gz) used to annotate the sequence");
}

inline SequenceOptions sequence_options(const SequenceFlags& f) {
  SequenceOptions o;
  o.methods.direct = f.method != "recurrence";
  o.methods.walk_count = f.method != "direct";
  o.methods.recurrence = f.method != "direct";
  return o;
}

inline void print_sequence(std::ostream& out, SequenceReport& rep, const SequenceFlags& f,
                           const std::vector<std::string>& table_label) {
  if (!f.db.empty()) annotate_local(rep, oeis::LocalDatabase::load(f.db));
  if (f.json) {
    out << to_json(rep).dump(2) << "\n";
  } else if (f.table) {
    const std::vector<TableRow> rows{{table_label, rep.terms, [&] {
                                        std::vector<std::string> ids;
                                        for (const auto& m : rep.oeis_matches) ids.push_back(m.id);
                                        return ids;
                                      }()}};
    out << (f.csv ? csv_table(rows) : markdown_table(rows));
  } else {
    out << join(rep.terms, f.sep) << "\n";
  }
}

/// Runs one command line; argv[0] is the program name. Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line digraphs: families, inner metrics and order sequences", "linedi"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a digraph family in text format");
  std::string family, output;
  std::optional<std::size_t> p_sigma, p_n, p_d, p_l, p_r1, p_r2;
  gen->add_option("--family", family, "debruijn, kautz, ck, subkautz, sf, starcycle, pendant, unicyclic, radii")
      ->required()
      ->check(CLI::IsMember({"debruijn", "kautz", "ck", "subkautz", "sf", "starcycle", "pendant", "unicyclic", "radii"}));
  gen->add_option("--sigma", p_sigma, "Alphabet size (debruijn)");
  gen->add_option("--n", p_n, "Word length (debruijn) or cycle length");
  gen->add_option("--d", p_d, "Degree parameter");
  gen->add_option("--l", p_l, "Word length");
  gen->add_option("--r1", p_r1, "Inner out-radius (radii)");
  gen->add_option("--r2", p_r2, "Inner in-radius (radii)");
  gen->add_option("-o,--output", output, "Output file (default: stdout)");

  // seq
  auto* seq = app.add_subcommand("seq", "Orders of the iterated line digraphs of a digraph file");
  std::string input;
  SequenceFlags seq_flags;
  seq->add_option("input", input, "Digraph file, or - for stdin")->required();
  add_sequence_flags(seq, seq_flags);

  // forbid
  auto* forbid = app.add_subcommand("forbid", "Orders for De Bruijn words avoiding forbidden subwords");
  std::size_t f_sigma = 2, f_n = 1;
  std::string avoid;
  SequenceFlags forbid_flags;
  forbid->add_option("--sigma", f_sigma, "Alphabet size")->required();
  forbid->add_option("--n", f_n, "Vertex word length")->required();
  forbid->add_option("--avoid", avoid, "Comma-separated forbidden subwords");
  add_sequence_flags(forbid, forbid_flags);

  // table
  auto* table = app.add_subcommand("table", "Table of order sequences, one row per forbidden set");
  std::size_t t_sigma = 2, t_n = 1, t_k = 7;
  std::vector<std::string> t_rows;
  std::string t_db;
  bool t_csv = false;
  table->add_option("--sigma", t_sigma, "Alphabet size")->required();
  table->add_option("--n", t_n, "Vertex word length")->required();
  table->add_option("--row", t_rows, "Comma-separated forbidden subwords for one row (repeatable)")->required();
  table->add_option("--k", t_k, "Largest iterate index K")->capture_default_str();
  table->add_option("--db", t_db, "Local OEIS snapshot for the OEIS column");
  table->add_flag("--csv", t_csv, "CSV instead of Markdown");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Inner metric parameters as JSON");
  std::size_t m_line = 0;
  bool m_no_diag = false;
  metrics->add_option("input", input, "Digraph file, or - for stdin")->required();
  metrics->add_option("--line", m_line, "Apply the line digraph operator k times first")->capture_default_str();
  metrics->add_flag("--no-diagonal", m_no_diag, "Leave (u,u) pairs out of the mean inner distance");

  // diam
  auto* diam = app.add_subcommand("diam", "Inner diameters of the iterated line digraphs");
  SequenceFlags diam_flags;
  diam->add_option("input", input, "Digraph file, or - for stdin")->required();
  diam->add_option("--k", diam_flags.k, "Largest iterate index K")->capture_default_str();
  diam->add_flag("--json", diam_flags.json, "Print the full report as JSON");
  diam->add_option("--sep", diam_flags.sep, "Separator between terms")->capture_default_str();

  // recur
  auto* recur = app.add_subcommand("recur", "Minimal polynomial and order recurrence");
  std::size_t r_k = 20;
  recur->add_option("input", input, "Digraph file, or - for stdin")->required();
  recur->add_option("--k", r_k, "Terms n_0..n_K used to fit the recurrence")->capture_default_str();

  // oeis
  auto* oeis_cmd = app.add_subcommand("oeis", "Look a sequence up in OEIS");
  std::string o_terms, o_local;
  bool o_remote = false;
  std::size_t o_min = oeis::kDefaultMinOverlap, o_timeout = 10'000;
  oeis_cmd->add_option("--terms", o_terms, "Comma-separated terms")->required();
  auto* local_opt = oeis_cmd->add_option("--local", o_local, "Stripped snapshot file (plain or .gz)");
  auto* remote_opt = oeis_cmd->add_flag("--remote", o_remote, "Query the online search (OEIS_BASE_URL overrides)");
  local_opt->excludes(remote_opt);
  oeis_cmd->add_option("--min-overlap", o_min, "Minimum number of terms")->capture_default_str();
  oeis_cmd->add_option("--timeout-ms", o_timeout, "Remote request timeout")->capture_default_str();

  const bool color = use_color(STDERR_FILENO);
  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, e.what(), color);
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      auto need = [&](const std::optional<std::size_t>& v, const char* flag) {
        if (!v) fail(ErrorKind::ParamOutOfRange, "--family " + family + " requires " + flag);
        return *v;
      };
      Digraph g;
      if (family == "debruijn") g = de_bruijn(need(p_sigma, "--sigma"), need(p_n, "--n"));
      else if (family == "kautz") g = kautz(need(p_d, "--d"), need(p_l, "--l"));
      else if (family == "ck") g = cyclic_kautz(need(p_d, "--d"), need(p_l, "--l"));
      else if (family == "subkautz") g = sub_kautz(need(p_d, "--d"), need(p_l, "--l"));
      else if (family == "sf") g = square_free(need(p_d, "--d"), need(p_l, "--l"));
      else if (family == "starcycle") g = star_cycle(need(p_n, "--n"));
      else if (family == "pendant") g = pendant_cycle(need(p_n, "--n"));
      else if (family == "unicyclic") g = unicyclic(need(p_n, "--n"), need(p_d, "--d"));
      else g = radii_digraph(need(p_r1, "--r1"), need(p_r2, "--r2"));
      const std::string text = write_text(g);
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!(f << text)) fail(ErrorKind::Internal, "cannot write '" + output + "'");
      }
    } else if (seq->parsed()) {
      const Digraph g = read_input(input);
      auto rep = order_sequence(g, seq_flags.k, sequence_options(seq_flags));
      if (rep.source.empty()) rep.source = input;
      print_sequence(out, rep, seq_flags, {rep.source});
    } else if (forbid->parsed()) {
      const ForbiddenWordSpec spec{f_sigma, f_n, split_list(avoid)};
      auto rep = forbidden_order_sequence(spec, forbid_flags.k, sequence_options(forbid_flags));
      print_sequence(out, rep, forbid_flags, spec.forbidden);
    } else if (table->parsed()) {
      std::optional<oeis::LocalDatabase> db;
      if (!t_db.empty()) db = oeis::LocalDatabase::load(t_db);
      std::vector<TableRow> rows;
      for (const auto& r : t_rows) {
        const ForbiddenWordSpec spec{t_sigma, t_n, split_list(r)};
        auto rep = forbidden_order_sequence(spec, t_k);
        if (db) annotate_local(rep, *db);
        rows.push_back(table_row(spec, rep));
      }
      out << (t_csv ? csv_table(rows) : markdown_table(rows));
    } else if (metrics->parsed()) {
      Digraph g = read_input(input);
      if (m_line > 0) g = line_iterate(g, m_line, {.keep_labels = false}).digraph;
      out << to_json(metric_report(g, {.include_diagonal = !m_no_diag})).dump(2) << "\n";
    } else if (diam->parsed()) {
      const Digraph g = read_input(input);
      auto rep = inner_diameter_report(g, diam_flags.k);
      if (rep.source.empty()) rep.source = input;
      if (diam_flags.json) {
        out << to_json(rep).dump(2) << "\n";
      } else {
        out << join(rep.terms, diam_flags.sep);
        if (rep.empty_at) out << diam_flags.sep << "(empty from k=" << *rep.empty_at << ")";
        out << "\n";
      }
    } else if (recur->parsed()) {
      const Digraph g = read_input(input);
      SequenceOptions o;
      o.polynomial_order_limit = static_cast<std::size_t>(-1);
      const auto rep = order_sequence(g, r_k, o);
      out << "m(x) = " << rep.polynomial->to_string() << "\n";
      if (rep.recurrence) {
        out << rep.recurrence->to_string() << "\n";
        out << "order = " << rep.recurrence->order << "\n";
        out << "start = " << rep.recurrence->start << "\n";
      } else {
        out << "no recurrence fits n_0..n_" << r_k << "\n";
      }
      out << "terms = " << join(rep.terms, " ") << "\n";
    } else if (oeis_cmd->parsed()) {
      const auto terms = parse_terms(o_terms);
      std::vector<oeis::OeisMatch> matches;
      if (o_remote) {
        matches = oeis::search_remote(terms, {true, std::chrono::milliseconds(o_timeout), {}});
      } else if (!o_local.empty()) {
        matches = oeis::match_local(terms, o_local, o_min);
      } else {
        fail(ErrorKind::ParamOutOfRange, "oeis needs --local PATH or --remote");
      }
      if (matches.empty()) out << "not in OEIS\n";
      for (const auto& m : matches) out << m.id << " offset " << m.offset << " length " << m.matched_length << "\n";
    }
  } catch (const Error& e) {
    report_error(err, e.what(), color);
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    report_error(err, e.what(), color);
    return kFailure;
  }
  return kOk;
}

}  // namespace linedi::cli
