// Command-line front end: classify, table, check, count, verify.
//
// Exit codes: 0 success, 1 property or verification failure, 2 invalid input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "bolpq/classify.hpp"
#include "bolpq/errors.hpp"
#include "bolpq/iso_oracle.hpp"
#include "bolpq/loop_table.hpp"
#include "bolpq/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_check(const std::string& in, const std::string& props_arg) {
  const bolpq::LoopTable table = in == "-" ? bolpq::read_table(std::cin) : bolpq::import_table(in);
  const std::map<std::string, bool (*)(const bolpq::LoopTable&)> checks = {
      {"quasigroup", bolpq::is_latin}, {"loop", bolpq::is_loop},         {"bol", bolpq::is_bol},
      {"bruck", bolpq::is_bruck},      {"assoc", bolpq::is_associative}, {"comm", bolpq::is_commutative},
  };
  const auto props = split_csv(props_arg);
  for (const auto& name : props) {
    if (!checks.contains(name)) throw bolpq::InvalidInput("unknown property '" + name + "'");
  }
  // Identity checks beyond latin-ness presuppose a loop with identity 0.
  const bool loop = bolpq::is_loop(table);
  bool all = true;
  for (const auto& name : props) {
    const bool needs_loop = name != "quasigroup" && name != "loop" && name != "assoc" && name != "comm";
    const bool value = (needs_loop && !loop) ? false : checks.at(name)(table);
    std::cout << name << ": " << (value ? "yes" : "no") << "\n";
    all = all && value;
  }
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify Bol and Bruck loops of order pq"};
  app.require_subcommand(1);

  std::uint64_t p = 0;
  std::uint64_t q = 0;

  auto* classify_cmd =
      app.add_subcommand("classify", "List the loops of order pq up to isomorphism or isotopy");
  std::string upto = "isotopy";
  std::string emit = "text";
  std::size_t check_bound = 231;
  classify_cmd->add_option("-p", p, "larger prime")->required();
  classify_cmd->add_option("-q", q, "smaller prime")->required();
  classify_cmd->add_option("--upto", upto, "iso or isotopy")->check(CLI::IsMember({"iso", "isotopy"}));
  classify_cmd->add_option("--emit", emit, "text or json")->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_option("--check-bound", check_bound, "verify flags on Cayley tables when pq <= N");

  auto* table_cmd =
      app.add_subcommand("table", "Write the Cayley table for a gamma (cyclic group if omitted)");
  std::string gamma_arg;
  std::string out_path;
  table_cmd->add_option("-p", p, "larger prime")->required();
  table_cmd->add_option("-q", q, "smaller prime")->required();
  table_cmd->add_option("--gamma", gamma_arg, "A,B meaning A + B*sqrt(t)");
  table_cmd->add_option("--out", out_path, "output file (stdout if omitted)");

  auto* check_cmd = app.add_subcommand("check", "Check identities on a Cayley table file");
  std::string in_path;
  std::string props = "quasigroup,bol";
  check_cmd->add_option("--in", in_path, "table file, - for stdin")->required();
  check_cmd->add_option("--props", props, "comma list of quasigroup,loop,bol,bruck,assoc,comm");

  auto* count_cmd = app.add_subcommand("count", "Count classes for every prime p up to a bound");
  std::uint64_t p_max = 0;
  std::string count_emit = "text";
  count_cmd->add_option("-q", q, "smaller prime")->required();
  count_cmd->add_option("--pmax", p_max, "largest p")->required();
  count_cmd->add_option("--emit", count_emit, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check orbits, sequences and brute force");
  std::size_t oracle_bound = 33;
  verify_cmd->add_option("-p", p, "larger prime")->required();
  verify_cmd->add_option("-q", q, "smaller prime")->required();
  verify_cmd->add_option("--oracle-bound", oracle_bound, "run the table oracle when pq <= N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*classify_cmd) {
      const auto report =
          bolpq::classify(p, q, upto == "iso" ? bolpq::Upto::Isomorphism : bolpq::Upto::Isotopism,
                          {.table_check_bound = check_bound});
      if (emit == "json") {
        std::cout << bolpq::report_to_json(report).dump(2) << "\n";
      } else {
        std::cout << bolpq::report_to_text(report);
      }
      return kOk;
    }
    if (*table_cmd) {
      const bolpq::FieldParams params(p, q);
      const bolpq::LoopTable table =
          gamma_arg.empty() ? bolpq::build_loop(params, bolpq::cyclic_theta(q))
                            : bolpq::table_for_gamma(params, bolpq::parse_gamma(gamma_arg, params));
      if (out_path.empty()) {
        bolpq::write_table(std::cout, table);
      } else {
        bolpq::export_table(table, out_path);
      }
      return kOk;
    }
    if (*check_cmd) return run_check(in_path, props);
    if (*count_cmd) {
      const auto rows = bolpq::count_range(q, p_max);
      std::cout << (count_emit == "csv" ? bolpq::count_rows_to_csv(rows) : bolpq::count_rows_to_text(rows));
      return kOk;
    }
    if (*verify_cmd) {
      const auto summary = bolpq::cross_verify(p, q, oracle_bound);
      std::cout << bolpq::summary_to_text(summary);
      return summary.passed() ? kOk : kFailed;
    }
  } catch (const bolpq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
