#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "liechain/chains.hpp"
#include "liechain/errors.hpp"
#include "liechain/formulas.hpp"
#include "liechain/json.hpp"
#include "liechain/oracle.hpp"
#include "liechain/parse.hpp"
#include "liechain/subgroup_db.hpp"
#include "liechain/theorems.hpp"

// Command-line front end. Exit codes: 0 success, 1 a check failed or a chain
// is invalid, 2 usage, parse or domain error.

namespace liechain::cli {

namespace detail {

inline int default_max_degree() {
  if (const char* env = std::getenv("LIECHAIN_MAX_DEGREE")) {
    try {
      const int v = std::stoi(env);
      if (v >= 2) return v;
    } catch (const std::exception&) {
    }
  }
  return 60;
}

inline void print_check(std::ostream& out, const CheckResult& c) {
  out << (c.pass ? "PASS " : "FAIL ") << c.claim << " [" << c.inputs << "] " << c.lhs << " vs " << c.rhs << " ("
      << c.statement << ")\n";
}

inline std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Length, depth and unrefinable chains of compact Lie groups", "liechain"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");

  std::string group_spec;
  auto* len_cmd = app.add_subcommand("len", "Length l(G)");
  len_cmd->add_option("group", group_spec, "Group spec, e.g. \"SU(3) x T^2\"")->required();
  auto* depth_cmd = app.add_subcommand("depth", "Depth of G, exact or as [lower, upper]");
  depth_cmd->add_option("group", group_spec)->required();
  auto* cd_cmd = app.add_subcommand("cd", "Chain difference l(G) - depth(G)");
  cd_cmd->add_option("group", group_spec)->required();
  auto* dims_cmd = app.add_subcommand("dims", "Dimension and rank");
  dims_cmd->add_option("group", group_spec)->required();
  auto* max_cmd = app.add_subcommand("maximals", "Maximal connected subgroups");
  max_cmd->add_option("group", group_spec)->required();

  auto* chain_cmd = app.add_subcommand("chain", "Witness chain of length l(G) or depth(G)");
  chain_cmd->add_option("group", group_spec)->required();
  bool want_max = false;
  bool want_min = false;
  auto* max_flag = chain_cmd->add_flag("--max", want_max, "Longest chain");
  chain_cmd->add_flag("--min", want_min, "Shortest chain")->excludes(max_flag);

  std::string chain_file;
  auto* verify_cmd = app.add_subcommand("verify-chain", "Check a chain file, one group per line ('-' for stdin)");
  verify_cmd->add_option("file", chain_file)->required();

  std::string suite = "all";
  int max_degree = detail::default_max_degree();
  std::int64_t max_dim = 60;
  auto* check_cmd = app.add_subcommand("check-theorems", "Run a theorem suite");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  check_cmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_choices));
  check_cmd->add_option("--max-degree", max_degree, "Largest classical degree scanned")->check(CLI::Range(2, 100000));
  check_cmd->add_option("--max-dim", max_dim, "Largest total dimension enumerated")->check(CLI::Range(0, 100000));

  std::vector<std::string> oracle_specs;
  bool cross = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force length and depth over the subgroup database");
  oracle_cmd->add_option("groups", oracle_specs, "Groups (default scope: curated products of <= 3 factors)");
  oracle_cmd->add_flag("--cross-validate", cross, "Compare with the closed formulas");

  std::vector<const char*> argv{"liechain"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    using json::Json;
    if (len_cmd->parsed()) {
      const GroupType g = parse_group(group_spec);
      if (as_json) {
        out << Json{{"group", g.spec()}, {"length", length(g)}}.dump() << "\n";
      } else {
        out << length(g) << "\n";
      }
      return 0;
    }
    if (depth_cmd->parsed() || cd_cmd->parsed()) {
      const GroupType g = parse_group(group_spec);
      Oracle oracle;
      const BoundsOrExact d = refined_depth(g, oracle);
      const BoundsOrExact value = depth_cmd->parsed() ? d : chain_difference(length(g), d);
      if (as_json) {
        out << Json{{"group", g.spec()}, {depth_cmd->parsed() ? "depth" : "cd", json::bounds(value)}}.dump() << "\n";
      } else {
        out << value.str() << "\n";
      }
      return 0;
    }
    if (dims_cmd->parsed()) {
      const GroupType g = parse_group(group_spec);
      const Dims d = dims(g);
      if (as_json) {
        out << Json{{"group", g.spec()}, {"dim", d.dim}, {"rank", d.rank}}.dump() << "\n";
      } else {
        out << "dim " << d.dim << " rank " << d.rank << "\n";
      }
      return 0;
    }
    if (max_cmd->parsed()) {
      const GroupType g = parse_group(group_spec);
      const MaximalSubgroups m = maximal_connected(g);
      if (as_json) {
        out << json::maximals(g, m).dump() << "\n";
      } else {
        for (const auto& e : m.entries) out << e.subgroup.spec() << "\t" << e.kind.describe() << "\n";
        out << (m.completeness.complete ? "complete" : "incomplete") << ": " << m.completeness.reason << "\n";
      }
      return 0;
    }
    if (chain_cmd->parsed()) {
      const GroupType g = parse_group(group_spec);
      Oracle oracle;
      std::optional<Chain> c = want_min ? min_chain(g, &oracle) : std::optional<Chain>(max_chain(g));
      if (!c) {
        err << "liechain: no minimal chain available for " << g.spec() << ": depth is only known within "
            << depth(g).str() << " and the group is outside the curated closure\n";
        return 2;
      }
      if (as_json) {
        out << json::chain(*c).dump() << "\n";
      } else {
        out << format_chain(*c);
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      const Chain c = parse_chain(detail::read_file(chain_file));
      const VerifyReport r = verify_chain(c);
      if (as_json) {
        out << json::verify(r).dump() << "\n";
      } else {
        for (std::size_t i = 0; i < r.steps.size(); ++i) {
          const auto& s = r.steps[i];
          out << i << "\t" << s.parent.spec() << " > " << s.child.spec() << "\t" << verdict_name(s.verdict) << "\n";
        }
        out << overall_name(r.overall);
        if (!r.reason.empty()) out << ": " << r.reason;
        out << "\n";
      }
      return r.overall == Overall::invalid ? 1 : 0;
    }
    if (check_cmd->parsed()) {
      const SuiteOptions options{max_degree, max_dim};
      Oracle oracle;
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        names.push_back(suite);
      }
      bool all_pass = true;
      for (const auto& name : names) {
        const Report r = run_suite(name, options, oracle);
        std::size_t failed = 0;
        for (const auto& c : r.checks) {
          if (!c.pass) ++failed;
        }
        all_pass = all_pass && failed == 0;
        if (as_json) {
          for (const auto& c : r.checks) out << json::check(c).dump() << "\n";
          out << Json{{"suite", name}, {"checks", r.checks.size()}, {"failed", failed}, {"pass", failed == 0}}.dump()
              << "\n";
        } else {
          for (const auto& c : r.checks) {
            if (!c.pass) detail::print_check(out, c);
          }
          out << "suite " << name << ": " << r.checks.size() << " checks, " << failed << " failed\n";
        }
      }
      return all_pass ? 0 : 1;
    }
    if (oracle_cmd->parsed()) {
      std::vector<GroupType> scope;
      for (const auto& s : oracle_specs) scope.push_back(parse_group(s));
      if (scope.empty()) scope = curated_scope(3);
      Oracle oracle;
      if (!cross) {
        for (const auto& g : scope) {
          const Oracle::Values v = oracle.evaluate(g);
          if (as_json) {
            out << Json{{"group", g.spec()}, {"length", v.length}, {"depth", v.depth}}.dump() << "\n";
          } else {
            out << g.spec() << "\tlength " << v.length << "\tdepth " << v.depth << "\n";
          }
        }
        return 0;
      }
      bool all_pass = true;
      for (const auto& row : cross_validate(scope, oracle)) {
        all_pass = all_pass && row.pass;
        if (as_json) {
          out << json::cross_validation(row).dump() << "\n";
        } else {
          out << (row.pass ? "PASS " : "FAIL ") << row.group.spec() << "\tl " << row.formula_length << "/"
              << row.oracle_length << "\tdepth " << row.formula_depth.str() << "/" << row.oracle_depth << "\n";
        }
      }
      return all_pass ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "liechain: parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "liechain: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace liechain::cli
