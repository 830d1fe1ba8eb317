#pragma once

// Command-line front end. run() parses arguments, dispatches one subcommand
// and returns the process exit code:
//   0  success, every verification passed
//   1  a verification or oracle comparison failed
//   2  usage or input error

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "feynman/counting.hpp"
#include "feynman/cycle_oracle.hpp"
#include "feynman/generate.hpp"
#include "feynman/graph_json.hpp"
#include "feynman/identities.hpp"
#include "feynman/lie_dims.hpp"

namespace feynman::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

enum class OutputFormat { Tsv, Json };

struct RunConfig {
  std::string builtin;
  std::string input;
  int max_n = 10;
  double tolerance = kDefaultTolerance;
  bool oracle = false;
  OutputFormat format = OutputFormat::Tsv;
  bool validate = true;
  std::string which = "kw";
  int rank = 2;
  std::string family;  // positional argument of `generate`
};

/// Raised for bad flag values that CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string str(const BigInt& v) { return to_string(v); }
inline std::string str(const Rational& v) { return to_string(v); }

inline Json strings(const std::vector<BigInt>& values, std::size_t from = 0) {
  Json out = Json::array();
  for (std::size_t k = from; k < values.size(); ++k) out.push_back(to_string(values[k]));
  return out;
}

inline Json strings(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

inline std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value == 0.0 ? 0.0 : value);
  return buffer;
}

inline std::string format_complex(Complex z) {
  return format_real(z.real()) + (std::signbit(z.imag()) && z.imag() != 0.0 ? "-" : "+") +
         format_real(std::abs(z.imag())) + "i";
}

struct LoadedGraph {
  std::string id;
  EmbeddedGraph graph;
};

inline LoadedGraph load_graph(const RunConfig& config, std::istream& in, std::ostream& err) {
  if (!config.builtin.empty() && !config.input.empty()) {
    throw UsageError("--builtin and --input are mutually exclusive");
  }
  GraphSpec spec;
  std::string id;
  if (!config.builtin.empty()) {
    spec = generate_from_string(config.builtin);
    id = config.builtin;
  } else if (config.input.empty() || config.input == "-") {
    spec = parse_graph(in);
    id = "stdin";
  } else {
    std::ifstream file(config.input);
    if (!file) throw Error(Errc::ParseError, "cannot open " + config.input);
    spec = parse_graph(file);
    id = config.input;
  }
  EmbeddedGraph g = build_graph(spec);
  if (config.validate) {
    const ValidationReport report = validate_embedding(g);
    for (const auto& f : report.findings) {
      err << (f.severity == Severity::Error ? "error" : "warning") << ": " << f.code << ": " << f.message
          << "\n";
    }
    if (!report.ok) throw Error(Errc::BadGeometry, "drawing is not a valid planar embedding");
  }
  return {std::move(id), std::move(g)};
}

inline void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

inline int cmd_info(const RunConfig& config, const LoadedGraph& lg, std::ostream& out) {
  const auto& g = lg.graph;
  const std::size_t cycle_rank = g.num_edges() - g.num_vertices() + 1;
  const ValidationReport report = validate_embedding(g);
  if (config.format == OutputFormat::Json) {
    Json doc = Json::object();
    doc["graph"] = lg.id;
    doc["vertices"] = std::to_string(g.num_vertices());
    doc["edges"] = std::to_string(g.num_edges());
    doc["oriented_edges"] = std::to_string(g.num_oriented());
    doc["loops"] = std::to_string(g.num_loops());
    doc["cycle_rank"] = std::to_string(cycle_rank);
    doc["embedding_ok"] = report.ok;
    Json findings = Json::array();
    for (const auto& f : report.findings) {
      findings.push_back({{"severity", f.severity == Severity::Error ? "error" : "warning"},
                          {"code", f.code},
                          {"message", f.message}});
    }
    doc["findings"] = std::move(findings);
    emit(out, doc);
  } else {
    out << "graph\t" << lg.id << "\n"
        << "vertices\t" << g.num_vertices() << "\n"
        << "edges\t" << g.num_edges() << "\n"
        << "oriented_edges\t" << g.num_oriented() << "\n"
        << "loops\t" << g.num_loops() << "\n"
        << "cycle_rank\t" << cycle_rank << "\n"
        << "embedding_ok\t" << (report.ok ? "true" : "false") << "\n";
    for (const auto& f : report.findings) out << "finding\t" << f.code << "\t" << f.message << "\n";
  }
  return kSuccess;
}

inline int cmd_matrices(const RunConfig& config, const LoadedGraph& lg, std::ostream& out) {
  const auto t = edge_adjacency(lg.graph);
  const auto s = transition_matrix(lg.graph);
  const std::size_t n = t.order();
  if (config.format == OutputFormat::Json) {
    Json jt = Json::array(), js = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json rt = Json::array(), rs = Json::array();
      for (std::size_t j = 0; j < n; ++j) {
        rt.push_back(std::to_string(t(i, j)));
        rs.push_back(Json::array({format_real(s(i, j).real()), format_real(s(i, j).imag())}));
      }
      jt.push_back(std::move(rt));
      js.push_back(std::move(rs));
    }
    Json doc = Json::object();
    doc["graph"] = lg.id;
    doc["T"] = std::move(jt);
    doc["S"] = std::move(js);
    emit(out, doc);
  } else {
    out << "# T\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out << (j ? "\t" : "") << t(i, j);
      out << "\n";
    }
    out << "# S\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out << (j ? "\t" : "") << format_complex(s(i, j));
      out << "\n";
    }
  }
  return kSuccess;
}

inline bool same_counts(const CountRow& a, const CountRow& b) {
  return a.trace_t == b.trace_t && a.trace_s == b.trace_s && a.k_plus == b.k_plus && a.k_minus == b.k_minus &&
         a.theta_plus == b.theta_plus && a.theta_minus == b.theta_minus && a.theta == b.theta &&
         a.omega == b.omega;
}

inline int cmd_counts(const RunConfig& config, const LoadedGraph& lg, std::ostream& out, std::ostream& err) {
  const GraphAnalysis a = analyze(lg.graph, config.max_n, config.tolerance);
  int code = kSuccess;
  if (config.oracle) {
    const CountTable oracle = oracle_count_table(lg.graph, config.max_n, config.tolerance);
    for (int n = 1; n <= config.max_n; ++n) {
      if (!same_counts(oracle[n], a.counts[n])) {
        err << "oracle mismatch at N=" << n << "\n";
        code = kVerificationFailed;
      }
    }
  }
  static constexpr const char* kColumns[] = {"N", "TrT", "TrS", "K+", "K-", "theta+", "theta-", "theta", "Omega"};
  auto fields = [](const CountRow& r) {
    return std::vector<std::string>{std::to_string(r.n), str(r.trace_t),    str(r.trace_s),
                                    str(r.k_plus),       str(r.k_minus),    str(r.theta_plus),
                                    str(r.theta_minus),  str(r.theta),      str(r.omega)};
  };
  if (config.format == OutputFormat::Json) {
    Json rows = Json::array();
    for (const auto& r : a.counts.rows) {
      Json row = Json::object();
      const auto f = fields(r);
      for (std::size_t k = 0; k < f.size(); ++k) row[kColumns[k]] = f[k];
      rows.push_back(std::move(row));
    }
    Json doc = Json::object();
    doc["graph"] = lg.id;
    doc["max_n"] = std::to_string(config.max_n);
    doc["oracle"] = config.oracle ? (code == kSuccess ? "match" : "mismatch") : "off";
    doc["rows"] = std::move(rows);
    emit(out, doc);
  } else {
    for (std::size_t k = 0; k < std::size(kColumns); ++k) out << (k ? "\t" : "") << kColumns[k];
    out << "\n";
    for (const auto& r : a.counts.rows) {
      const auto f = fields(r);
      for (std::size_t k = 0; k < f.size(); ++k) out << (k ? "\t" : "") << f[k];
      out << "\n";
    }
  }
  return code;
}

inline int cmd_euler(const RunConfig& config, const LoadedGraph& lg, std::ostream& out) {
  const EulerPolynomial e = euler_polynomial(lg.graph);
  if (config.format == OutputFormat::Json) {
    Json doc = Json::object();
    doc["graph"] = lg.id;
    doc["coefficients"] = strings(e.a);
    emit(out, doc);
  } else {
    out << "N\ta(N)\n";
    for (std::size_t k = 0; k < e.a.size(); ++k) out << k << "\t" << str(e.a[k]) << "\n";
  }
  return kSuccess;
}

inline int cmd_zeta(const RunConfig& config, const LoadedGraph& lg, std::ostream& out) {
  ZetaKind kind;
  if (config.which == "ihara") {
    kind = ZetaKind::Ihara;
  } else if (config.which == "kw") {
    kind = ZetaKind::KacWard;
  } else {
    throw UsageError("--which must be ihara or kw");
  }
  const GraphAnalysis a = analyze(lg.graph, config.max_n, config.tolerance);
  const RationalSeries z = zeta_series(a, kind, config.max_n);
  if (config.format == OutputFormat::Json) {
    Json doc = Json::object();
    doc["graph"] = lg.id;
    doc["which"] = config.which;
    doc["order"] = std::to_string(config.max_n);
    doc["coefficients"] = strings(z.coefficients());
    emit(out, doc);
  } else {
    out << "# " << to_string(z) << "\n";
    out << "N\tcoefficient\n";
    for (int k = 0; k <= z.order(); ++k) out << k << "\t" << str(z[k]) << "\n";
  }
  return kSuccess;
}

inline int cmd_verify(const RunConfig& config, const LoadedGraph& lg, std::ostream& out) {
  const GraphAnalysis a = analyze(lg.graph, config.max_n, config.tolerance);
  VerifyOptions options;
  options.oracle = config.oracle;
  const IdentityReport report = verify_all(lg.graph, a, lg.id, options);
  if (config.format == OutputFormat::Json) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      Json j = Json::object();
      j["id"] = e.id;
      j["statement"] = e.statement;
      j["pass"] = e.pass;
      j["gating"] = e.gating;
      j["first_mismatch"] = e.first_mismatch ? Json(std::to_string(*e.first_mismatch)) : Json(nullptr);
      j["left"] = strings(e.left);
      j["right"] = strings(e.right);
      j["note"] = e.note;
      entries.push_back(std::move(j));
    }
    Json doc = Json::object();
    doc["graph"] = report.graph_id;
    doc["order"] = std::to_string(report.order);
    doc["all_pass"] = report.all_pass();
    doc["entries"] = std::move(entries);
    emit(out, doc);
  } else {
    out << "# graph " << report.graph_id << ", order " << report.order << "\n";
    out << "id\tresult\tfirst_mismatch\tstatement\tnote\n";
    for (const auto& e : report.entries) {
      const char* result = e.pass ? "pass" : (e.gating ? "FAIL" : "fail (advisory)");
      out << e.id << "\t" << result << "\t" << (e.first_mismatch ? std::to_string(*e.first_mismatch) : "-")
          << "\t" << e.statement << "\t" << (e.note.empty() ? "-" : e.note) << "\n";
    }
    out << "# " << (report.all_pass() ? "all identities hold" : "verification FAILED") << "\n";
  }
  return report.all_pass() ? kSuccess : kVerificationFailed;
}

inline int cmd_lie_dims(const RunConfig& config, const LoadedGraph& lg, std::ostream& out) {
  const GraphAnalysis a = analyze(lg.graph, config.max_n, config.tolerance);
  const SuperdimensionTable table = lie_dims_table(a, config.max_n);
  bool all_match = true;
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table.rows) {
    const auto& c = a.counts[r.n];
    const bool match = r.dim_l0 == c.theta_minus && r.dim_l1 == c.theta_plus;
    all_match = all_match && match;
    rows.push_back({std::to_string(r.n), str(r.t), str(r.t_prime), str(r.t0), str(r.t1), str(r.dim_l0),
                    str(r.dim_l1), str(c.theta_minus), str(c.theta_plus), match ? "✓" : "✗",
                    str(r.enveloping)});
  }
  static constexpr const char* kColumns[] = {"n",      "t",      "t'",     "t0",     "t1",          "dimL0",
                                             "dimL1",  "theta-", "theta+", "match",  "envelopingDim"};
  if (config.format == OutputFormat::Json) {
    Json jrows = Json::array();
    for (const auto& f : rows) {
      Json row = Json::object();
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (std::string_view(kColumns[k]) == "match") {
          row["match"] = f[k] == "✓";
        } else {
          row[kColumns[k]] = f[k];
        }
      }
      jrows.push_back(std::move(row));
    }
    Json doc = Json::object();
    doc["graph"] = lg.id;
    doc["all_match"] = all_match;
    doc["rows"] = std::move(jrows);
    emit(out, doc);
  } else {
    for (std::size_t k = 0; k < std::size(kColumns); ++k) out << (k ? "\t" : "") << kColumns[k];
    out << "\n";
    for (const auto& f : rows) {
      for (std::size_t k = 0; k < f.size(); ++k) out << (k ? "\t" : "") << f[k];
      out << "\n";
    }
  }
  return all_match ? kSuccess : kVerificationFailed;
}

inline int cmd_witt(const RunConfig& config, std::ostream& out) {
  if (config.rank < 0) throw UsageError("--rank must be >= 0");
  std::vector<BigInt> values;
  for (int n = 1; n <= config.max_n; ++n) values.push_back(witt(n, config.rank));
  if (config.format == OutputFormat::Json) {
    Json doc = Json::object();
    doc["rank"] = std::to_string(config.rank);
    doc["dimensions"] = strings(values);
    emit(out, doc);
  } else {
    out << "N\tM(N;" << config.rank << ")\n";
    for (std::size_t k = 0; k < values.size(); ++k) out << k + 1 << "\t" << str(values[k]) << "\n";
  }
  return kSuccess;
}

inline int cmd_generate(const RunConfig& config, std::ostream& out) {
  const std::string& name = !config.family.empty() ? config.family : config.builtin;
  if (name.empty()) throw UsageError("generate needs a family, e.g. `generate bouquet:3`");
  const GraphSpec spec = generate_from_string(name);
  build_graph(spec);
  emit(out, graph_to_json(spec));
  return kSuccess;
}

inline double default_tolerance() {
  const char* env = std::getenv("FW_TOLERANCE");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(value > 0.0)) throw UsageError("FW_TOLERANCE must be a positive number");
  return value;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config.tolerance = detail::default_tolerance();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  CLI::App app{"Signed cycle counts, Kac-Ward and Ihara determinants, and Lie superalgebra dimensions of "
               "planar graphs",
               "feynman"};
  app.require_subcommand(1);
  std::string format = "tsv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-n", config.max_n, "Largest cycle length / series order")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--builtin", config.builtin, "Builtin graph, e.g. bouquet:3, theta_chain:2, cycle:4, k4");
    sub->add_option("--input", config.input, "Graph JSON file, or - for stdin (the default)");
    sub->add_option("--tolerance", config.tolerance, "Integrality tolerance (env FW_TOLERANCE)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("!--no-validate", config.validate, "Skip the planar embedding check");
    add_common(sub);
  };

  auto* info = app.add_subcommand("info", "Graph summary and embedding check");
  add_graph(info);
  auto* matrices = app.add_subcommand("matrices", "Dump the edge adjacency matrix T and transition matrix S");
  add_graph(matrices);
  auto* counts = app.add_subcommand("counts", "Traces, signed walk counts and class counts up to --max-n");
  add_graph(counts);
  counts->add_flag("--oracle", config.oracle, "Cross-check against brute-force enumeration");
  auto* euler = app.add_subcommand("euler", "Coefficients of the Euler polynomial");
  add_graph(euler);
  auto* zeta = app.add_subcommand("zeta", "Ihara or Kac-Ward zeta series to order --max-n");
  add_graph(zeta);
  zeta->add_option("--which", config.which, "ihara or kw")->check(CLI::IsMember({"ihara", "kw"}));
  auto* verify = app.add_subcommand("verify", "Check every identity to order --max-n");
  add_graph(verify);
  verify->add_flag("--oracle", config.oracle, "Also compare enumeration against the closed forms");
  auto* lie = app.add_subcommand("lie-dims", "Superdimensions and the bivariate Witt cross-check");
  add_graph(lie);
  auto* witt = app.add_subcommand("witt", "Classical Witt dimensions M(N;R)");
  add_common(witt);
  witt->add_option("--rank", config.rank, "Number of generators R")->check(CLI::NonNegativeNumber);
  auto* generate = app.add_subcommand("generate", "Print a builtin graph as JSON");
  generate->add_option("family", config.family, "Family spec, e.g. bouquet:3");
  generate->add_option("--builtin", config.builtin, "Same as the positional family");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Tsv;

  std::ostringstream buffer;
  try {
    int code = kSuccess;
    if (*witt) {
      code = detail::cmd_witt(config, buffer);
    } else if (*generate) {
      code = detail::cmd_generate(config, buffer);
    } else {
      const detail::LoadedGraph lg = detail::load_graph(config, in, err);
      if (*info) code = detail::cmd_info(config, lg, buffer);
      if (*matrices) code = detail::cmd_matrices(config, lg, buffer);
      if (*counts) code = detail::cmd_counts(config, lg, buffer, err);
      if (*euler) code = detail::cmd_euler(config, lg, buffer);
      if (*zeta) code = detail::cmd_zeta(config, lg, buffer);
      if (*verify) code = detail::cmd_verify(config, lg, buffer);
      if (*lie) code = detail::cmd_lie_dims(config, lg, buffer);
    }
    out << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? kUsageError : kVerificationFailed;
  }
}

}  // namespace feynman::cli
