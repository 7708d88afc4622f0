// Command line front end: generate relation files, inspect them, run the
// verification suites, and print the built-in truncation demo.
//
// Exit codes: 0 on success, 1 when a verification or assertion fails,
// 2 on malformed input or infeasible requests.

#include "linrel/generator.hpp"
#include "linrel/hermitian.hpp"
#include "linrel/io.hpp"
#include "linrel/norms.hpp"
#include "linrel/relbound.hpp"
#include "linrel/rng.hpp"
#include "linrel/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;

struct GlobalArgs {
  double tol = -1.0;
  std::uint64_t seed = 42;
  std::string out;
  std::string field = "complex";
};

void write_or_print(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw linrel::DimensionError("cannot open file for writing: " + out_path);
  }
  out << text << "\n";
}

int run_gen(const GlobalArgs& globals, int n, int m,
            std::optional<int> dim_graph, std::optional<int> dim_mulpart,
            std::optional<int> dim_domain, bool hermitian) {
  linrel::GenOptions opts;
  opts.n = n;
  opts.m = m;
  opts.field = linrel::field_from_string(globals.field);
  opts.tol = globals.tol >= 0.0 ? globals.tol : 1e-9;
  if (dim_graph) opts.graph_dim = *dim_graph;
  if (dim_mulpart) opts.mulpart_dim = *dim_mulpart;
  if (dim_domain) opts.domain_dim = *dim_domain;
  opts.hermitian = hermitian;

  linrel::Rng rng(linrel::derive_seed(globals.seed, "gen", 0));
  const linrel::LinearRelation t = linrel::gen_relation(rng, opts);
  write_or_print(globals.out, linrel::relation_to_json(t));
  std::cerr << "generated relation: n=" << t.n() << " m=" << t.m()
            << " graph=" << t.graph_dim()
            << " domain=" << linrel::domain(t).dim()
            << " mulpart=" << linrel::mulpart(t).dim() << "\n";
  return kExitOk;
}

int run_check(const GlobalArgs& globals, const std::string& path,
              const std::string& x_json) {
  linrel::LinearRelation t = linrel::read_relation_file(path);
  if (globals.tol >= 0.0) {
    // Re-span the graph under the requested tolerance.
    t = linrel::LinearRelation(
        t.n(), t.m(),
        linrel::Subspace::span(t.graph().basis(), t.n() + t.m(), t.field(),
                               globals.tol));
  }
  std::string text;
  const auto line = [&text](const std::string& s) { text += s + "\n"; };

  line("file: " + path);
  line(std::string("field: ") + linrel::to_string(t.field()));
  line("n: " + std::to_string(t.n()) + "  m: " + std::to_string(t.m()));
  line("graph dim: " + std::to_string(t.graph_dim()));
  line("domain dim: " + std::to_string(linrel::domain(t).dim()));
  line("range dim: " + std::to_string(linrel::range(t).dim()));
  line("mulpart dim: " + std::to_string(linrel::mulpart(t).dim()));
  line("nullspace dim: " + std::to_string(linrel::nullspace(t).dim()));

  const linrel::NormReport norm = linrel::relation_norm(t);
  line("relation norm: " + linrel::format_sig(norm.value));
  const linrel::ArensDecomposition dec = linrel::arens_decompose(t);
  line("operator part graph dim: " +
       std::to_string(dec.operator_part.graph_dim()));
  line("multivalued part graph dim: " +
       std::to_string(dec.multivalued_part.graph_dim()));

  if (t.n() == t.m()) {
    const bool herm = linrel::is_hermitian(t);
    line(std::string("hermitian: ") + (herm ? "yes" : "no"));
    if (herm) {
      const linrel::HermitianReport rep = linrel::hermitian_report(t);
      line("lower bound: " + linrel::format_sig(rep.lower));
      line("upper bound: " + linrel::format_sig(rep.upper));
      line(std::string("definiteness: ") + linrel::to_string(rep.definiteness));
    }
    line("c constant: " + linrel::format_sig(linrel::c_constant(t)));
  }

  if (!x_json.empty()) {
    const linrel::Vector x = linrel::vector_from_json(x_json);
    // Membership errors surface as DomainError, exit code 2.
    const auto [y0, mul] = linrel::image_of(t, x);
    line("x: " + linrel::vector_to_json(x));
    line("point norm: " + linrel::format_sig(linrel::point_norm(t, x)));
    line("graph norm: " + linrel::format_sig(linrel::graph_norm(t, x)));
    line("representative: " + linrel::vector_to_json(y0));
    line("image offset dim: " + std::to_string(mul.dim()));
  }

  write_or_print(globals.out, text.substr(0, text.size() - 1));
  return kExitOk;
}

int run_verify(const GlobalArgs& globals, const std::vector<std::string>& suites,
               int trials, const std::string& dims) {
  linrel::TrialConfig config;
  config.seed = globals.seed;
  config.trials = trials;
  config.dims = linrel::parse_dims(dims);
  config.field = linrel::field_from_string(globals.field);
  config.tol = globals.tol >= 0.0 ? globals.tol : 1e-8;
  config.suites = suites;
  for (const std::string& id : suites) {
    if (id != "all" && !linrel::is_suite(id)) {
      throw linrel::DimensionError("unknown suite: " + id);
    }
  }

  const linrel::VerificationReport report = linrel::run_suites(config);
  bool all_passed = true;
  for (const linrel::SuiteResult& suite : report.suites) {
    std::printf("suite %-14s %4d/%-4d passed, worst residual %s\n",
                suite.suite.c_str(), suite.passes, suite.trials,
                linrel::format_sig(suite.worst_residual).c_str());
    if (suite.failures > 0) all_passed = false;
  }
  std::printf("total: %.3f s\n", report.total_seconds);
  if (!globals.out.empty()) {
    std::ofstream out(globals.out);
    if (!out) {
      throw linrel::DimensionError("cannot open file for writing: " + globals.out);
    }
    out << linrel::report_to_json(report) << "\n";
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

int run_demo(const GlobalArgs& globals, const std::string& orders_text) {
  std::vector<int> orders;
  {
    std::string item;
    std::istringstream stream(orders_text);
    while (std::getline(stream, item, ',')) {
      try {
        orders.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw linrel::DimensionError("orders must be a comma separated list of integers");
      }
    }
    if (orders.empty()) throw linrel::DimensionError("orders list is empty");
  }
  const std::vector<linrel::Remark24Row> rows = linrel::remark24_demo(orders);

  std::string text =
      "N      |T|            |S1|           |S2|           |S1-T|         |S2-T|\n";
  const double tol = globals.tol >= 0.0 ? globals.tol : 1e-9;
  bool ok = true;
  for (const linrel::Remark24Row& row : rows) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-6d %-14s %-14s %-14s %-14s %-14s\n",
                  row.order, linrel::format_sig(row.t_norm).c_str(),
                  linrel::format_sig(row.s1_norm).c_str(),
                  linrel::format_sig(row.s2_norm).c_str(),
                  linrel::format_sig(row.s1_minus_t_norm).c_str(),
                  linrel::format_sig(row.s2_minus_t_norm).c_str());
    text += buf;
    const double order = static_cast<double>(row.order);
    double r = std::abs(row.t_norm - order);
    r = std::max(r, std::abs(row.s1_norm));
    r = std::max(r, std::abs(row.s2_norm - 1.0));
    r = std::max(r, std::abs(row.s1_minus_t_norm));
    r = std::max(r, std::abs(row.s2_minus_t_norm - (order - 1.0)));
    if (r > tol) ok = false;
  }
  text += ok ? "norm growth matches the closed forms"
             : "norm growth deviates from the closed forms";
  write_or_print(globals.out, text);
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite dimensional linear relation calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalArgs globals;
  app.add_option("--tol", globals.tol,
                 "tolerance override (defaults per subcommand)");
  app.add_option("--seed", globals.seed, "random seed");
  app.add_option("--out", globals.out, "write output to this file");
  app.add_option("--field", globals.field, "scalar field: real or complex")
      ->check(CLI::IsMember({"real", "complex"}));

  auto* gen = app.add_subcommand("gen", "generate a random relation file");
  int gen_n = 4;
  int gen_m = 4;
  std::optional<int> dim_graph;
  std::optional<int> dim_mulpart;
  std::optional<int> dim_domain;
  bool hermitian = false;
  gen->add_option("--n", gen_n, "dimension of the left space");
  gen->add_option("--m", gen_m, "dimension of the right space");
  gen->add_option("--dim-graph", dim_graph, "graph dimension");
  gen->add_option("--dim-mulpart", dim_mulpart, "multivalued part dimension");
  gen->add_option("--dim-domain", dim_domain, "domain dimension");
  gen->add_flag("--hermitian", hermitian, "draw a Hermitian relation");

  auto* check = app.add_subcommand("check", "inspect a relation file");
  std::string check_path;
  std::string check_x;
  check->add_option("file", check_path, "relation file")->required();
  check->add_option("--x", check_x, "evaluate at this vector (JSON array)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites = {"all"};
  int trials = 200;
  std::string dims = "4x4";
  verify->add_option("--suite", suites, "suite ids, or \"all\"");
  verify->add_option("--trials", trials, "trials per dims entry");
  verify->add_option("--dims", dims, "comma separated sizes, e.g. 4x4,6x3");

  auto* demo = app.add_subcommand("demo-remark24",
                                  "norm growth of truncated diagonal operators");
  std::string orders = "4,16,64";
  demo->add_option("--orders", orders, "truncation orders");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (gen->parsed()) {
      return run_gen(globals, gen_n, gen_m, dim_graph, dim_mulpart, dim_domain,
                     hermitian);
    }
    if (check->parsed()) return run_check(globals, check_path, check_x);
    if (verify->parsed()) return run_verify(globals, suites, trials, dims);
    if (demo->parsed()) return run_demo(globals, orders);
  } catch (const linrel::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const linrel::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const linrel::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
