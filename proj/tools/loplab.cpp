// loplab: generate, check, solve and benchmark linear-order instances
// against pluggable SSE oracle models.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loplab/loplab.hpp"

namespace {

using namespace loplab;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RejectedInputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RejectedInputError("cannot write " + path);
  out << content;
}

std::string verdict_json(const OrderVerdict& v) {
  if (v.valid()) return "{\"verdict\":\"VALID\"}";
  std::string out = "{\"verdict\":\"" + std::string(to_string(v.kind)) +
                    "\",\"x\":\"" + v.x.to_string() + "\",\"y\":\"" +
                    v.y.to_string() + "\"";
  if (v.kind == OrderVerdict::Kind::Triple)
    out += ",\"z\":\"" + v.z.to_string() + "\"";
  return out + "}";
}

struct OracleSpec {
  std::string model = "threshold";  // threshold | adversarial | memoizing
  std::string policy = "seeded_hash";
  std::uint64_t seed = 0;
};

GapPolicy parse_policy(const std::string& s) {
  if (s == "always_yes") return GapPolicy::AlwaysYes;
  if (s == "always_no") return GapPolicy::AlwaysNo;
  if (s == "seeded_hash") return GapPolicy::SeededHash;
  if (s == "alternating") return GapPolicy::Alternating;
  throw CLI::ValidationError("--policy", "unknown policy " + s);
}

std::unique_ptr<SseOracle> make_oracle(const OracleSpec& spec, unsigned cap) {
  if (spec.model == "threshold") return std::make_unique<ThresholdOracle>(cap);
  if (spec.model == "adversarial")
    return std::make_unique<AdversarialOracle>(parse_policy(spec.policy),
                                               spec.seed, cap);
  if (spec.model == "memoizing")
    return std::make_unique<MemoizingOracle>(
        std::make_unique<AdversarialOracle>(parse_policy(spec.policy),
                                            spec.seed, cap));
  throw CLI::ValidationError("--model", "unknown model " + spec.model);
}

int cmd_gen(const std::string& kind, unsigned n, std::uint64_t seed,
            const std::string& out_path) {
  auto kind_val = order_kind_from_string(kind);
  if (!kind_val) {
    std::cerr << "unknown kind: " << kind << "\n";
    return 2;
  }
  GeneratedOrder g = generate(OrderSpec::make(*kind_val, n, seed));
  write_file(out_path, serialize(g.order));
  write_file(out_path + ".json", sidecar_json(g) + "\n");
  std::cout << "wrote " << out_path << " and " << out_path << ".json\n";
  return 0;
}

int cmd_check(const std::string& path, unsigned cap) {
  OrderCircuit e = parse_order(read_file(path));
  OrderVerdict v = check_order(e, cap);
  std::cout << verdict_json(v) << "\n";
  return v.valid() ? 0 : 3;
}

int cmd_solve(const std::string& path, const OracleSpec& ospec,
              const std::string& driver_name,
              const std::optional<std::string>& eps_str,
              const std::string& trace_path, const std::string& log_path,
              unsigned cap) {
  OrderCircuit e = parse_order(read_file(path));
  auto oracle = make_oracle(ospec, cap);
  QueryLog log;
  if (!log_path.empty()) oracle->attach_log(&log);
  Driver driver = driver_name == "binary" ? Driver::Binary : Driver::Parallel;
  SolveOptions opts;
  opts.cap = cap;
  if (eps_str) opts.eps = Rat::parse(*eps_str);
  SolveResult result = solve(e, *oracle, driver, opts);
  if (!trace_path.empty())
    write_file(trace_path, trace_to_json(result.trace) + "\n");
  if (!log_path.empty()) write_file(log_path, to_jsonl(log));
  if (result.found_minimum()) {
    std::cout << "{\"minimum\":\"" << result.minimum->to_string()
              << "\",\"back_calls\":" << result.trace.back_calls
              << ",\"total_queries\":" << result.trace.total_queries << "}\n";
    return 0;
  }
  std::cout << verdict_json(*result.counterexample) << "\n";
  return 3;
}

int cmd_bench(const std::vector<std::string>& paths,
              const std::vector<std::uint64_t>& seeds,
              const std::string& out_path, bool timing, unsigned cap) {
  struct Cell {
    std::string name;
    OracleSpec spec;
  };
  std::vector<Cell> cells = {{"threshold", {"threshold", "", 0}},
                             {"always_yes", {"adversarial", "always_yes", 0}},
                             {"always_no", {"adversarial", "always_no", 0}},
                             {"alternating", {"adversarial", "alternating", 0}}};
  for (std::uint64_t s : seeds)
    cells.push_back({"seeded_hash:" + std::to_string(s),
                     {"adversarial", "seeded_hash", s}});
  cells.push_back({"memo_alternating", {"memoizing", "alternating", 0}});

  std::vector<std::string> rows;
  for (const std::string& path : paths) {
    OrderCircuit e = parse_order(read_file(path));
    for (const Cell& cell : cells) {
      for (Driver driver : {Driver::Parallel, Driver::Binary}) {
        auto oracle = make_oracle(cell.spec, cap);
        SolveOptions opts;
        opts.cap = cap;
        auto t0 = std::chrono::steady_clock::now();
        SolveResult result = solve(e, *oracle, driver, opts);
        auto t1 = std::chrono::steady_clock::now();
        std::string outcome =
            result.found_minimum()
                ? result.minimum->to_string()
                : "defect:" +
                      std::string(to_string(result.counterexample->kind));
        std::string row = path + "," + std::to_string(e.n()) + "," +
                          cell.name + "," + to_string(driver) + "," + outcome +
                          "," + std::to_string(result.trace.back_calls) + "," +
                          std::to_string(result.trace.total_queries);
        if (timing)
          row += "," + std::to_string(
                           std::chrono::duration_cast<std::chrono::milliseconds>(
                               t1 - t0)
                               .count());
        rows.push_back(row);
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  std::string csv = "# schema=1\n";
  csv += "instance,n,model,driver,result,back_calls,queries";
  if (timing) csv += ",wall_ms";
  csv += "\n";
  for (const std::string& row : rows) csv += row + "\n";
  if (out_path.empty())
    std::cout << csv;
  else
    write_file(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loplab: linear-order instances, oracle models, LOP solving"};
  app.require_subcommand(1);

  unsigned cap = loplab::kDefaultBruteForceCap;
  app.add_option("--cap", cap, "brute-force input limit (1..24)")
      ->envname("LOPLAB_CAP")
      ->check(CLI::Range(1u, 24u));

  auto* gen = app.add_subcommand("gen", "generate an instance + sidecar");
  std::string gen_kind, gen_out;
  unsigned gen_n = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--kind", gen_kind,
                  "lex|xor|affine|bitperm|broken2|broken3|empty")
      ->required();
  gen->add_option("--n", gen_n, "order bit width")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "instance output path")->required();

  auto* check = app.add_subcommand("check", "check the linear-order axioms");
  std::string check_in;
  check->add_option("instance", check_in, "instance file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "find the minimum via Back");
  std::string solve_in, solve_driver = "parallel", solve_trace, solve_log;
  OracleSpec solve_oracle;
  std::optional<std::string> solve_eps;
  solve_cmd->add_option("instance", solve_in, "instance file")->required();
  solve_cmd->add_option("--model", solve_oracle.model,
                        "threshold|adversarial|memoizing");
  solve_cmd->add_option("--policy", solve_oracle.policy,
                        "always_yes|always_no|seeded_hash|alternating");
  solve_cmd->add_option("--seed", solve_oracle.seed, "oracle seed");
  solve_cmd->add_option("--driver", solve_driver, "parallel|binary")
      ->check(CLI::IsMember({"parallel", "binary"}));
  solve_cmd->add_option("--eps", solve_eps,
                        "rank accuracy override, e.g. 1/16 (default 1/(8n))");
  solve_cmd->add_option("--trace", solve_trace, "write trace JSON here");
  solve_cmd->add_option("--log", solve_log, "write the query log (JSONL) here");

  auto* bench = app.add_subcommand("bench", "solve a corpus across models");
  std::vector<std::string> bench_in;
  std::vector<std::uint64_t> bench_seeds = {1};
  std::string bench_out;
  bool bench_no_timing = false;
  bench->add_option("instances", bench_in, "instance files");
  bench->add_option("--seeds", bench_seeds, "seeds for seeded_hash cells");
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");
  bench->add_flag("--no-timing", bench_no_timing,
                  "omit wall_ms for byte-reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_seed, gen_out);
    if (check->parsed()) return cmd_check(check_in, cap);
    if (solve_cmd->parsed())
      return cmd_solve(solve_in, solve_oracle, solve_driver, solve_eps,
                       solve_trace, solve_log, cap);
    if (bench->parsed())
      return cmd_bench(bench_in, bench_seeds, bench_out, !bench_no_timing, cap);
  } catch (const loplab::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 4;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const loplab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
