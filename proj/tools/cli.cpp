#include "cli.hpp"

#include "sumsym/allocation_io.hpp"
#include "sumsym/circuit_io.hpp"
#include "sumsym/errors.hpp"
#include "sumsym/matrix_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sumsym::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Treatments in potency order, remembering where each came from in the file.
struct LoadedScenario {
  Scenario scenario;
  std::vector<std::size_t> file_index;  // sorted position -> file position
};

LoadedScenario load_scenario(const CommandRequest& req) {
  LoadedScenario loaded{parse_scenario_json(read_file(req.scenario_path), req.scenario_path), {}};
  auto& treatments = loaded.scenario.treatments;
  loaded.file_index.resize(treatments.size());
  std::iota(loaded.file_index.begin(), loaded.file_index.end(), std::size_t{0});
  if (req.sort_treatments) {
    std::stable_sort(loaded.file_index.begin(), loaded.file_index.end(),
                     [&](std::size_t a, std::size_t b) { return treatments[a].potency < treatments[b].potency; });
    std::vector<Treatment> sorted;
    for (auto i : loaded.file_index) sorted.push_back(treatments[i]);
    treatments = std::move(sorted);
  }
  try {
    validate(loaded.scenario);
  } catch (const ValidationError& e) {
    throw ValidationError(e.kind(), req.scenario_path + ": " + e.what());
  }
  return loaded;
}

// Scenario and allocation with treatments back in file order.
std::pair<Scenario, Allocation> in_file_order(const LoadedScenario& loaded, const Allocation& a) {
  const std::size_t k = loaded.file_index.size();
  Scenario sc = loaded.scenario;
  Allocation out = a;
  for (std::size_t pos = 0; pos < k; ++pos) {
    const auto f = loaded.file_index[pos];
    sc.treatments[f] = loaded.scenario.treatments[pos];
    out.class_sizes[f] = a.class_sizes[pos];
    out.class_masses[f] = a.class_masses[pos];
  }
  for (auto& c : out.classes) c = loaded.file_index[c];
  return {std::move(sc), std::move(out)};
}

Allocation load_claimed_allocation(const LoadedScenario& loaded, const AllocationClaim& claim) {
  std::vector<std::size_t> sorted_pos(loaded.file_index.size());
  for (std::size_t pos = 0; pos < sorted_pos.size(); ++pos) sorted_pos[loaded.file_index[pos]] = pos;
  std::map<std::string, std::size_t> assignment;
  for (const auto& [id, file_treatment] : claim.assignment) {
    // Out-of-range indices are left alone for make_allocation to report.
    assignment[id] = file_treatment <= sorted_pos.size() ? sorted_pos[file_treatment - 1] + 1 : file_treatment;
  }
  return make_allocation(loaded.scenario, assignment);
}

AnyMatrix load_matrix(const CommandRequest& req) {
  return parse_matrix_csv(read_file(req.matrix_path), req.matrix_path, req.domain);
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// Each command writes its report to `out` and returns the exit code.

int decompose(const CommandRequest& req, std::ostream& out) {
  return std::visit(
      [&](const auto& t) {
        using G = typename std::decay_t<decltype(t)>::value_type;
        const auto circuits = circuit_decompose(t);
        for (const auto& c : circuits) out << format_circuit(c) << '\n';
        const auto check = verify_decomposition(t, circuits);
        out << "SUMMARY domain=" << domain_name(DomainOf<G>::value) << " n=" << t.size()
            << " nnz=" << nonzero_count(t) << " circuits=" << circuits.size()
            << " reconstruction=" << pass_fail(check.passed) << '\n';
        if (!check) out << "# " << check.diagnostic << '\n';
        return check ? kSuccess : kVerificationFailed;
      },
      load_matrix(req));
}

int birkhoff(const CommandRequest& req, std::ostream& out) {
  return std::visit(
      [&](const auto& t) {
        using G = typename std::decay_t<decltype(t)>::value_type;
        const auto perms = birkhoff_decompose(t);
        std::vector<Circuit<G>> refined;
        G total{};
        for (const auto& p : perms) {
          out << format_permutation(p) << '\n';
          for (auto& c : permutation_to_circuits(p)) {
            out << "  " << format_circuit(c) << '\n';
            refined.push_back(std::move(c));
          }
          total += p.weight();
        }
        const auto check = verify_permutations(t, std::span<const WeightedPermutation<G>>(perms));
        const auto refined_check = verify_decomposition(t, refined);
        const G common = sums(t).row_sums[0];
        out << "SUMMARY domain=" << domain_name(DomainOf<G>::value) << " n=" << t.size()
            << " nnz=" << nonzero_count(t) << " permutations=" << perms.size() << " common_sum=" << to_string(common)
            << " weight_total=" << to_string(total) << " reconstruction=" << pass_fail(check.passed)
            << " refinement=" << pass_fail(refined_check.passed) << '\n';
        const bool ok = check && refined_check && total == common;
        return ok ? kSuccess : kVerificationFailed;
      },
      load_matrix(req));
}

int allocate(const CommandRequest& req, std::ostream& out) {
  const auto loaded = load_scenario(req);
  const auto [sc, a] = in_file_order(loaded, optimal_partition(loaded.scenario));
  out << format_allocation_json(sc, a, req.approximate);
  return kSuccess;
}

int score_command(const CommandRequest& req, std::ostream& out) {
  const auto loaded = load_scenario(req);
  const auto claim = parse_allocation_json(read_file(req.allocation_path), req.allocation_path);
  Allocation a;
  try {
    a = load_claimed_allocation(loaded, claim);
  } catch (const InfeasibleAllocation& e) {
    throw InfeasibleAllocation(req.allocation_path + ": " + e.what());
  }
  out << a.score.str() << '\n';
  if (req.approximate) out << "~" << approximate_decimal(a.score, 12) << " (approximate)\n";
  return kSuccess;
}

template <OrderedAbelianGroup G>
int verify_matrix(const SquareMatrix<G>& t, const CommandRequest& req, std::ostream& out) {
  const auto records = parse_decomposition<G>(read_file(req.decomposition_path), req.decomposition_path);
  std::vector<Circuit<G>> flat = records.circuits;
  std::vector<Circuit<G>> refined = records.circuits;
  bool has_refinement = false;
  for (std::size_t k = 0; k < records.permutations.size(); ++k) {
    const auto& p = records.permutations[k];
    if (p.size() != t.size()) {
      out << "FAIL: " << req.decomposition_path << ": permutation " << k + 1 << " acts on " << p.size()
          << " indices but the matrix has n = " << t.size() << '\n';
      return kVerificationFailed;
    }
    for (auto& c : permutation_to_circuits(p)) flat.push_back(std::move(c));
    has_refinement = has_refinement || !records.refinements[k].empty();
    refined.insert(refined.end(), records.refinements[k].begin(), records.refinements[k].end());
  }
  const std::size_t terms = records.circuits.size() + records.permutations.size();
  if (const auto check = verify_decomposition(t, flat); !check) {
    out << "FAIL: " << check.diagnostic << '\n';
    return kVerificationFailed;
  }
  if (has_refinement) {
    if (const auto check = verify_decomposition(t, refined); !check) {
      out << "FAIL: refinement circuits: " << check.diagnostic << '\n';
      return kVerificationFailed;
    }
  }
  out << "PASS: " << terms << " records reconstruct the " << t.size() << "x" << t.size() << " matrix exactly\n";
  return kSuccess;
}

int verify_allocation(const CommandRequest& req, std::ostream& out) {
  const auto loaded = load_scenario(req);
  const auto claim = parse_allocation_json(read_file(req.allocation_path), req.allocation_path);
  Allocation a;
  try {
    a = load_claimed_allocation(loaded, claim);
  } catch (const InfeasibleAllocation& e) {
    out << "FAIL: " << req.allocation_path << ": " << e.what() << '\n';
    return kVerificationFailed;
  }
  if (claim.score && *claim.score != a.score.str()) {
    out << "FAIL: " << req.allocation_path << ": score field says " << *claim.score << " but the assignment scores "
        << a.score.str() << '\n';
    return kVerificationFailed;
  }
  const auto best = brute_force_best(loaded.scenario, req.caps);
  const auto count = feasible_count(loaded.scenario);
  if (a.score != best.max_score) {
    const auto [sc, witness] = in_file_order(loaded, best.witness);
    std::string witness_text;
    for (std::size_t x = 0; x < sc.items.size(); ++x) {
      witness_text += (x ? ", " : "") + sc.items[x].id + "->" + std::to_string(witness.classes[x] + 1);
    }
    out << "FAIL: allocation score " << a.score.str() << " is below the exhaustive maximum " << best.max_score.str()
        << " over " << count.str() << " feasible allocations (witness: " << witness_text << ")\n";
    return kVerificationFailed;
  }
  out << "PASS: allocation score " << a.score.str() << " equals the exhaustive maximum over " << count.str()
      << " feasible allocations\n";
  return kSuccess;
}

int verify(const CommandRequest& req, std::ostream& out) {
  if (!req.matrix_path.empty()) {
    return std::visit([&](const auto& t) { return verify_matrix(t, req, out); }, load_matrix(req));
  }
  return verify_allocation(req, out);
}

int dispatch(const CommandRequest& req, std::ostream& out) {
  switch (req.command) {
    case Command::kDecompose: return decompose(req, out);
    case Command::kBirkhoff: return birkhoff(req, out);
    case Command::kAllocate: return allocate(req, out);
    case Command::kScore: return score_command(req, out);
    case Command::kVerify: return verify(req, out);
  }
  return kInputError;
}

std::string source_prefix(const CommandRequest& req) {
  // Matrix-level precondition errors do not know their file; name it here.
  switch (req.command) {
    case Command::kDecompose:
    case Command::kBirkhoff: return req.matrix_path + ": ";
    default: return "";
  }
}

}  // namespace

ParseOutcome parse_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact circuit and permutation decompositions, and optimal quota allocations", "sumsym"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  CommandRequest req;
  std::string domain;
  std::string output;

  auto add_domain = [&](CLI::App* cmd) {
    cmd->add_option("--domain", domain, "Scalar domain of the matrix: int, rational or lexpair")
        ->check(CLI::IsMember({"int", "rational", "lexpair"}));
  };
  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", output, "Write to this file instead of stdout"); };
  auto add_scenario_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--sort-treatments", req.sort_treatments,
                  "Reorder treatments by potency instead of rejecting unsorted input");
  };

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a sum-symmetric matrix into circuits");
  decompose_cmd->add_option("matrix", req.matrix_path, "Matrix CSV")->required()->check(CLI::ExistingFile);
  add_domain(decompose_cmd);
  add_output(decompose_cmd);

  auto* birkhoff_cmd = app.add_subcommand("birkhoff", "Decompose a doubly balanced matrix into permutations");
  birkhoff_cmd->add_option("matrix", req.matrix_path, "Matrix CSV")->required()->check(CLI::ExistingFile);
  add_domain(birkhoff_cmd);
  add_output(birkhoff_cmd);

  auto* allocate_cmd = app.add_subcommand("allocate", "Compute the optimal allocation for a scenario");
  allocate_cmd->add_option("scenario", req.scenario_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
  add_scenario_flags(allocate_cmd);
  allocate_cmd->add_flag("--approx", req.approximate, "Also print a decimal approximation of the score");
  add_output(allocate_cmd);

  auto* score_cmd = app.add_subcommand("score", "Score an allocation exactly");
  score_cmd->add_option("scenario", req.scenario_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
  score_cmd->add_option("allocation", req.allocation_path, "Allocation JSON")->required()->check(CLI::ExistingFile);
  add_scenario_flags(score_cmd);
  score_cmd->add_flag("--approx", req.approximate, "Also print a decimal approximation of the score");
  add_output(score_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition or an allocation with a brute-force oracle");
  auto* m = verify_cmd->add_option("--matrix", req.matrix_path, "Matrix CSV")->check(CLI::ExistingFile);
  auto* d = verify_cmd->add_option("--decomposition", req.decomposition_path, "Decomposition records")
                ->check(CLI::ExistingFile);
  auto* s = verify_cmd->add_option("--scenario", req.scenario_path, "Scenario JSON")->check(CLI::ExistingFile);
  auto* a = verify_cmd->add_option("--allocation", req.allocation_path, "Allocation JSON")->check(CLI::ExistingFile);
  m->needs(d);
  d->needs(m);
  s->needs(a);
  a->needs(s);
  m->excludes(s);
  verify_cmd->add_option("--max-items", req.caps.max_items, "Refuse exhaustive search beyond this many items")
      ->capture_default_str();
  verify_cmd->add_option("--max-allocations", req.caps.max_allocations,
                         "Refuse exhaustive search beyond this many feasible allocations")
      ->capture_default_str();
  add_domain(verify_cmd);
  add_scenario_flags(verify_cmd);
  add_output(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (verify_cmd->parsed() && req.matrix_path.empty() && req.scenario_path.empty()) {
      throw CLI::ValidationError("verify", "give either --matrix/--decomposition or --scenario/--allocation");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kSuccess : kInputError;
  }

  if (decompose_cmd->parsed()) req.command = Command::kDecompose;
  if (birkhoff_cmd->parsed()) req.command = Command::kBirkhoff;
  if (allocate_cmd->parsed()) req.command = Command::kAllocate;
  if (score_cmd->parsed()) req.command = Command::kScore;
  if (verify_cmd->parsed()) req.command = Command::kVerify;
  if (!domain.empty()) req.domain = parse_domain(domain);
  if (!output.empty()) req.output_path = output;
  return req;
}

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  std::ostringstream report;
  int code = kSuccess;
  try {
    code = dispatch(req, report);
  } catch (const CapExceeded& e) {
    err << "sumsym: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const TheoremViolated& e) {
    err << "sumsym: internal check failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const PreconditionError& e) {
    err << "sumsym: " << source_prefix(req) << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "sumsym: " << e.what() << '\n';
    return kInputError;
  }

  if (req.output_path) {
    std::ofstream file(*req.output_path, std::ios::binary);
    if (!file || !(file << report.str())) {
      err << "sumsym: " << *req.output_path << ": cannot write output\n";
      return kInputError;
    }
  } else {
    out << report.str();
  }
  return code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_command_line(args, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<CommandRequest>(parsed), out, err);
}

}  // namespace sumsym::cli
