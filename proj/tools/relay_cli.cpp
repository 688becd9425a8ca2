// relay: generate, solve, validate and benchmark data-delivery instances.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relay/relay.hpp"

namespace fs = std::filesystem;
using namespace relay;

namespace {

enum Exit : int {
  kOk = 0,
  kInvalid = 1,
  kInfeasible = 2,
  kCapacity = 3,
  kBadInput = 4,
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

bool has_non_unit_weight(const DeliveryInstance& inst) {
  const auto& edges = inst.graph().edges();
  return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.weight != 1; });
}

DeliveryInstance maybe_relax(DeliveryInstance inst, bool relax) {
  if (!relax || !has_non_unit_weight(inst)) return inst;
  return relax_instance(inst).instance;
}

Energy default_beta(const DeliveryInstance& inst) {
  const Energy w = inst.path().total_weight();
  const auto k = static_cast<Energy>(inst.agent_count());
  return std::max<Energy>(1, (w + k - 1) / k);
}

// Maps library exceptions to exit codes; `body` does the work.
template <typename Body>
int guarded(Body&& body) {
  try {
    return body();
  } catch (const OracleCapacity& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const FractionalLanding& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InfeasibleLeg& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const GeneratorError& e) {
    std::cerr << "generator: " << e.what() << "\n";
    return kBadInput;
  } catch (const GraphError& e) {
    std::cerr << "bad instance: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kBadInput;
  }
}

struct GenerateOptions {
  std::string family;
  Energy total_weight = 0;
  std::size_t k = 3;
  std::uint64_t seed = 1;
  std::size_t n = 8;
  std::size_t extra_edges = 4;
  Energy max_weight = 8;
  Energy epsilon_scale = 1000;
  std::string output;
};

GenSpec to_spec(const GenerateOptions& o) {
  GenSpec spec;
  if (o.family == "prop1") {
    spec.family = Family::kProp1;
  } else if (o.family == "prop2") {
    spec.family = Family::kProp2;
  } else {
    spec.family = Family::kRandom;
  }
  spec.total_weight = o.total_weight;
  spec.k = o.k;
  spec.seed = o.seed;
  spec.n = o.n;
  spec.extra_edges = o.extra_edges;
  spec.max_weight = o.max_weight;
  spec.epsilon_scale = o.epsilon_scale;
  return spec;
}

int cmd_generate(const GenerateOptions& o) {
  return guarded([&] {
    if (o.family != "random" && o.total_weight <= 0) {
      throw GeneratorError(o.family + " needs --W");
    }
    const std::string text = serialize(generate(to_spec(o)));
    if (o.output.empty()) {
      std::cout << text;
    } else {
      write_file(o.output, text);
      std::cout << "wrote " << o.output << "\n";
    }
    return int{kOk};
  });
}

struct SolveOptions {
  std::string instance;
  std::string alg = "matching";
  std::optional<Energy> beta;
  bool relax = false;
  std::string output;
};

SolveResult run_solver(const DeliveryInstance& inst, const std::string& alg,
                       std::optional<Energy> beta) {
  if (alg == "greedy1") return greedy1(inst);
  if (alg == "greedy-beta") return greedy_beta(inst, beta.value_or(default_beta(inst)));
  if (alg == "matching") return beta ? matching_beta(inst, *beta) : matching_sweep(inst);
  return exact_opt(inst, OracleLimits::from_env()).result;
}

int cmd_solve(const SolveOptions& o) {
  return guarded([&] {
    const DeliveryInstance inst = maybe_relax(deserialize_instance(read_file(o.instance)), o.relax);
    const SolveResult result = run_solver(inst, o.alg, o.beta);
    std::string out = o.output;
    if (out.empty()) out = fs::path(o.instance).replace_extension(".dds").string();
    write_file(out, serialize(result));
    std::cout << result.solver_name;
    if (!result.parameters.empty()) std::cout << " (" << result.parameters << ")";
    std::cout << ": range " << result.range << ", " << result.schedule.legs.size()
              << " legs -> " << out << "\n";
    return int{kOk};
  });
}

struct ValidateOptions {
  std::string instance;
  std::string solution;
  bool relax = false;
};

int cmd_validate(const ValidateOptions& o) {
  return guarded([&] {
    const DeliveryInstance inst = maybe_relax(deserialize_instance(read_file(o.instance)), o.relax);
    const SolveResult result = deserialize_result(read_file(o.solution), inst);
    const ValidationReport report = validate_schedule(inst, result);
    if (!report.ok()) {
      for (const Violation& v : report.violations) {
        std::cout << to_string(v.kind) << ": " << v.detail << "\n";
      }
      return int{kInvalid};
    }
    std::cout << "OK: " << result.schedule.legs.size() << " legs, range " << result.range << "\n";
    if (inst.budgets()) {
      try {
        const FeasibilitySuite suite = simulate_feasibility(inst, result);
        std::cout << "feasibility suite: " << suite.steps() << " steps, final energy [";
        const auto& left = suite.final_energy();
        for (std::size_t a = 0; a < left.size(); ++a) std::cout << (a ? ", " : "") << left[a];
        std::cout << "]\n";
      } catch (const StrandedAgent& e) {
        std::cout << "stranded: " << e.what() << "\n";
        return int{kInvalid};
      } catch (const FeasibilityError& e) {
        std::cout << "infeasible replay: " << e.what() << "\n";
        return int{kInvalid};
      }
    }
    return int{kOk};
  });
}

struct BenchOptions {
  std::string dir;
  std::string family;
  std::vector<Energy> weights;
  std::vector<std::size_t> ks;
  std::uint64_t seed = 1;
  std::size_t count = 20;
  std::size_t n = 8;
  std::size_t extra_edges = 4;
  Energy max_weight = 8;
  Energy epsilon_scale = 1000;
  bool relax = false;
  std::string output = "bench.csv";
};

struct BenchInput {
  std::string id;
  std::optional<DeliveryInstance> instance;
  std::string error;
};

std::vector<BenchInput> bench_inputs(const BenchOptions& o) {
  std::vector<BenchInput> inputs;
  auto add = [&](std::string id, auto make) {
    BenchInput in{std::move(id), std::nullopt, {}};
    try {
      in.instance = maybe_relax(make(), o.relax);
    } catch (const Error& e) {
      in.error = e.what();
    }
    inputs.push_back(std::move(in));
  };

  if (!o.dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".ddi") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      add(f.filename().string(), [&] { return deserialize_instance(read_file(f.string())); });
    }
    return inputs;
  }

  if (o.family == "prop1") {
    const std::vector<Energy> weights = o.weights.empty() ? std::vector<Energy>{25, 100, 400}
                                                          : o.weights;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const Energy w = weights[i];
      const std::size_t k = i < o.ks.size() ? o.ks[i]
                                            : static_cast<std::size_t>(std::llround(std::sqrt(
                                                  static_cast<double>(w))));
      add("prop1-W" + std::to_string(w) + "-k" + std::to_string(k),
          [&] { return gen_prop1(w, k); });
    }
  } else if (o.family == "prop2") {
    const std::vector<std::size_t> ks = o.ks.empty() ? std::vector<std::size_t>{3, 5, 7, 9} : o.ks;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const std::size_t k = ks[i];
      const Energy w = i < o.weights.size() ? o.weights[i] : 10 * static_cast<Energy>(k);
      add("prop2-W" + std::to_string(w) + "-k" + std::to_string(k),
          [&] { return gen_prop2(k, w, o.epsilon_scale); });
    }
  } else {
    const std::size_t k = o.ks.empty() ? 3 : o.ks.front();
    for (std::size_t i = 0; i < o.count; ++i) {
      const std::uint64_t seed = o.seed + i;
      add("random-s" + std::to_string(seed), [&] {
        return gen_random(RandomSpec{o.n, o.extra_edges, k, o.max_weight, seed, 0});
      });
    }
  }
  return inputs;
}

struct BenchRow {
  std::string id;
  std::string w, k;
  std::string greedy1, greedy_wk, matching, exact;
  std::string ratio_g1, ratio_gwk, ratio_m;
};

std::string ratio(const std::string& num, const std::optional<Energy>& exact) {
  if (!exact || *exact == 0 || num.empty() || !std::isdigit(static_cast<unsigned char>(num[0]))) {
    return "";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(std::stoll(num)) /
                                             static_cast<double>(*exact));
  return buf;
}

// Runs one solver and renders its range, or a short error tag.
template <typename Solve>
std::string cell(Solve&& solve, std::optional<Energy>* keep = nullptr) {
  try {
    const Energy r = solve();
    if (keep) *keep = r;
    return std::to_string(r);
  } catch (const OracleCapacity&) {
    return "capacity";
  } catch (const InfeasibleInstance&) {
    return "infeasible";
  } catch (const Error&) {
    return "error";
  }
}

BenchRow bench_row(const BenchInput& in) {
  BenchRow row;
  row.id = in.id;
  if (!in.instance) {
    row.greedy1 = row.greedy_wk = row.matching = row.exact = "error";
    return row;
  }
  const DeliveryInstance& inst = *in.instance;
  row.w = std::to_string(inst.path().total_weight());
  row.k = std::to_string(inst.agent_count());
  row.greedy1 = cell([&] { return greedy1(inst).range; });
  row.greedy_wk = cell([&] { return greedy_beta(inst, default_beta(inst)).range; });
  row.matching = cell([&] { return matching_sweep(inst).range; });
  std::optional<Energy> exact;
  row.exact = cell([&] { return exact_opt(inst, OracleLimits::from_env()).result.range; }, &exact);
  row.ratio_g1 = ratio(row.greedy1, exact);
  row.ratio_gwk = ratio(row.greedy_wk, exact);
  row.ratio_m = ratio(row.matching, exact);
  return row;
}

std::vector<std::string> fields(const BenchRow& r) {
  return {r.id,       r.w,         r.k,     r.greedy1,  r.greedy_wk,
          r.matching, r.exact,     r.ratio_g1, r.ratio_gwk, r.ratio_m};
}

const std::vector<std::string> kHeader{"instance", "W",        "k",        "greedy1",
                                       "greedy_wk", "matching", "exact",    "ratio_g1",
                                       "ratio_gwk", "ratio_m"};

int cmd_bench(const BenchOptions& o) {
  return guarded([&] {
    if (o.dir.empty() && o.family.empty()) {
      throw std::invalid_argument("bench needs a directory or --family");
    }
    std::vector<BenchRow> rows;
    for (const BenchInput& in : bench_inputs(o)) rows.push_back(bench_row(in));

    std::ostringstream csv;
    auto csv_line = [&](const std::vector<std::string>& f) {
      for (std::size_t i = 0; i < f.size(); ++i) csv << (i ? "," : "") << f[i];
      csv << "\n";
    };
    csv_line(kHeader);
    for (const BenchRow& r : rows) csv_line(fields(r));
    write_file(o.output, csv.str());

    std::vector<std::size_t> width(kHeader.size());
    for (std::size_t i = 0; i < kHeader.size(); ++i) width[i] = kHeader[i].size();
    for (const BenchRow& r : rows) {
      const auto f = fields(r);
      for (std::size_t i = 0; i < f.size(); ++i) width[i] = std::max(width[i], f[i].size());
    }
    auto table_line = [&](const std::vector<std::string>& f) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::cout << (i ? "  " : "") << std::setw(static_cast<int>(width[i]))
                  << (i == 0 ? std::left : std::right) << f[i];
      }
      std::cout << "\n";
    };
    table_line(kHeader);
    for (const BenchRow& r : rows) table_line(fields(r));
    std::cout << "wrote " << o.output << "\n";
    return int{kOk};
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-hand-over data delivery along a fixed path"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a generated instance (.ddi)");
  generate->add_option("family", gen.family, "prop1, prop2 or random")
      ->required()
      ->check(CLI::IsMember({"prop1", "prop2", "random"}));
  generate->add_option("--W", gen.total_weight, "Total path weight (prop1, prop2)");
  generate->add_option("--k", gen.k, "Number of agents");
  generate->add_option("--seed", gen.seed, "Seed (random)");
  generate->add_option("--n", gen.n, "Vertex count (random)");
  generate->add_option("--extra-edges", gen.extra_edges, "Edges beyond the spanning tree (random)");
  generate->add_option("--max-weight", gen.max_weight, "Largest edge weight (random)");
  generate->add_option("--epsilon-scale", gen.epsilon_scale, "Weight scale (prop2)");
  generate->add_option("-o,--output", gen.output, "Output file; stdout when omitted");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and write a solution (.dds)");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--alg", solve.alg, "greedy1, greedy-beta, matching or exact")
      ->check(CLI::IsMember({"greedy1", "greedy-beta", "matching", "exact"}));
  solve_cmd->add_option("--beta", solve.beta, "Grid spacing (greedy-beta, matching)");
  solve_cmd->add_flag("--relax", solve.relax, "Solve on the unit relaxation");
  solve_cmd->add_option("-o,--output", solve.output, "Solution file; defaults next to the instance");

  ValidateOptions val;
  auto* validate = app.add_subcommand("validate", "Check a solution against an instance");
  validate->add_option("instance", val.instance, "Instance file")->required();
  validate->add_option("solution", val.solution, "Solution file")->required();
  validate->add_flag("--relax", val.relax, "Validate against the unit relaxation");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare every solver against the exact optimum");
  bench_cmd->add_option("dir", bench.dir, "Directory of .ddi files")->check(CLI::ExistingDirectory);
  bench_cmd->add_option("--family", bench.family, "Generator sweep instead of a directory")
      ->check(CLI::IsMember({"prop1", "prop2", "random"}));
  bench_cmd->add_option("--W", bench.weights, "Path weights of the sweep");
  bench_cmd->add_option("--k", bench.ks, "Agent counts of the sweep");
  bench_cmd->add_option("--seed", bench.seed, "First seed (random)");
  bench_cmd->add_option("--count", bench.count, "Number of random instances");
  bench_cmd->add_option("--n", bench.n, "Vertex count (random)");
  bench_cmd->add_option("--extra-edges", bench.extra_edges, "Extra edges (random)");
  bench_cmd->add_option("--max-weight", bench.max_weight, "Largest edge weight (random)");
  bench_cmd->add_option("--epsilon-scale", bench.epsilon_scale, "Weight scale (prop2)");
  bench_cmd->add_flag("--relax", bench.relax, "Benchmark on unit relaxations");
  bench_cmd->add_option("-o,--output", bench.output, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : int{kBadInput};
  }

  if (*generate) return cmd_generate(gen);
  if (*solve_cmd) return cmd_solve(solve);
  if (*validate) return cmd_validate(val);
  return cmd_bench(bench);
}
