#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lifecode/code_tables.hpp"
#include "lifecode/errors.hpp"
#include "lifecode/evolution_dynamics.hpp"
#include "lifecode/lattice_folding.hpp"
#include "lifecode/replication_model.hpp"
#include "lifecode/search_core.hpp"
#include "lifecode/table.hpp"
#include "lifecode/text_input.hpp"

namespace lifecode::cli {

namespace {

using io::Cell;
using io::Table;

struct GlobalOptions {
  std::string format = "csv";
  std::string output;
  std::optional<std::int64_t> seed;  // reserved; every computation is deterministic
};

io::Format output_format(const GlobalOptions& g) { return g.format == "json" ? io::Format::Json : io::Format::Csv; }

Cell count_cell(const std::optional<std::size_t>& v) {
  if (!v) return std::string("unreached");
  return static_cast<std::int64_t>(*v);
}

Cell int_cell(std::size_t v) { return static_cast<std::int64_t>(v); }

// --- grover -----------------------------------------------------------------

struct GroverArgs {
  std::size_t n = 0;
  std::size_t target = 0;
  bool one_based = false;
  std::optional<std::size_t> queries;
  bool optimal = false;
  bool trace = false;
};

std::size_t resolve_target(std::size_t target, bool one_based) {
  if (!one_based) return target;
  if (target == 0) throw InputError("one-based target must be at least 1");
  return target - 1;
}

Table grover_trace(const search::SearchProblem& problem, std::size_t q) {
  Table t{"grover_trace", {"iteration", "stage", "mean", "success_probability"}, {}};
  for (std::size_t i = 0; i < problem.size; ++i) t.columns.push_back("a" + std::to_string(i));

  auto emit = [&](std::size_t iteration, const char* stage, const search::SearchState& s) {
    double sum = 0.0;
    for (double a : s.amplitudes()) sum += a;
    std::vector<Cell> row{int_cell(iteration), std::string(stage), sum / static_cast<double>(s.size()),
                          search::target_probability(s, problem.target)};
    for (double a : s.amplitudes()) row.emplace_back(a);
    t.add_row(std::move(row));
  };

  search::SearchState state = search::uniform_state(problem.size);
  emit(0, "uniform", state);
  for (std::size_t i = 1; i <= q; ++i) {
    state = search::apply_oracle(std::move(state), problem.target);
    emit(i, "oracle", state);
    state = search::apply_diffusion(std::move(state));
    emit(i, "diffusion", state);
  }
  return t;
}

Table run_grover(const GroverArgs& a) {
  const search::SearchProblem problem{a.n, resolve_target(a.target, a.one_based)};
  if (problem.target >= problem.size) {
    throw ConstraintError("target " + std::to_string(problem.target) + " out of range for database of size " +
                          std::to_string(problem.size));
  }
  const search::QuerySolution sol = search::optimal_queries(problem.size);
  const std::size_t q = a.queries.value_or(sol.q_int);

  if (a.trace) return grover_trace(problem, q);

  if (a.queries && !a.optimal) {
    Table t{"grover", {"n", "target", "queries", "success_probability", "analytic_probability"}, {}};
    const auto state = search::grover_iterate(problem, q);
    t.add_row({int_cell(problem.size), int_cell(problem.target), int_cell(q),
               search::target_probability(state, problem.target), search::success_probability(problem, q)});
    return t;
  }

  const auto classical = search::classical_query_counts(problem.size);
  Table t{"optimal_queries",
          {"n", "target", "q_real", "q_int", "residual_error", "success_probability", "classical_sorted",
           "classical_unsorted_expected"},
          {}};
  t.add_row({int_cell(problem.size), int_cell(problem.target), sol.q_real, int_cell(sol.q_int), sol.residual_error,
             search::success_probability(problem, sol.q_int), classical.sorted, classical.unsorted_expected});
  return t;
}

// --- sizes ------------------------------------------------------------------

Table run_sizes(std::size_t q_max) {
  const auto summary = codes::alphabet_summary(q_max);
  Table t{"alphabet", {"queries", "exact_n", "rounded_alphabet", "interpretation"}, {}};
  for (const auto& row : summary.rows) {
    t.add_row({int_cell(row.queries), row.exact_n, int_cell(row.rounded_alphabet), row.interpretation});
  }
  return t;
}

// --- evolve -----------------------------------------------------------------

struct EvolveArgs {
  std::string matrix_file, matrix_values;
  std::string pop_file, pop_values;
  std::string perturbation_file, perturbation_values;
  std::optional<std::size_t> steps;
  std::string policy = "strict";
  evolution::ConvergenceOptions convergence;
  bool speedup = false;
  std::vector<double> lambdas;
  bool rate = false;
};

std::vector<std::vector<double>> load_rows(const std::string& file, const std::string& literal, const char* what) {
  if (!file.empty() && !literal.empty()) throw InputError(std::string("give either a file or a literal for ") + what);
  if (!file.empty()) return io::read_numeric_rows_file(file);
  if (!literal.empty()) return io::parse_inline_rows(literal);
  throw InputError(std::string("missing ") + what);
}

evolution::EvolutionMatrix load_matrix(const EvolveArgs& a) {
  try {
    return evolution::EvolutionMatrix::infer(
        evolution::DenseMatrix::from_rows(load_rows(a.matrix_file, a.matrix_values, "matrix")));
  } catch (const ColumnSumError& e) {
    throw InputError(std::string("matrix: ") + e.what() + " (offending column index " + std::to_string(e.column()) +
                     ")");
  } catch (const ConstraintError& e) {
    throw InputError(std::string("matrix: ") + e.what());
  }
}

evolution::PopulationVector load_population(const EvolveArgs& a) {
  try {
    return evolution::PopulationVector(io::flatten(load_rows(a.pop_file, a.pop_values, "population")));
  } catch (const ConstraintError& e) {
    throw InputError(std::string("population: ") + e.what());
  }
}

Table run_evolve(const EvolveArgs& a) {
  const auto m = load_matrix(a);
  const auto pop = load_population(a);
  if (pop.size() != m.size()) {
    throw ShapeError("population has " + std::to_string(pop.size()) + " species but the matrix is " +
                     std::to_string(m.size()) + "x" + std::to_string(m.size()));
  }
  const auto policy = a.policy == "projected" ? evolution::NegativityPolicy::Projected
                                              : evolution::NegativityPolicy::Strict;
  a.convergence.validate();

  if (a.speedup) {
    evolution::DenseMatrix perturbation;
    try {
      perturbation = evolution::DenseMatrix::from_rows(load_rows(a.perturbation_file, a.perturbation_values,
                                                                 "perturbation"));
    } catch (const ConstraintError& e) {
      throw InputError(std::string("perturbation: ") + e.what());
    }
    if (a.lambdas.empty()) throw InputError("--speedup needs --lambdas");
    std::vector<evolution::SpeedupRow> rows;
    try {
      rows = evolution::speedup_experiment(m, perturbation, a.lambdas, pop, policy, a.convergence);
    } catch (const ColumnSumError& e) {
      throw InputError(std::string("perturbation: ") + e.what() + " (offending column index " +
                       std::to_string(e.column()) + ")");
    }
    Table t{"speedup",
            {"lambda", "feasible", "steps_to_winner", "winner", "stationarity_steps", "negativity_events", "note"},
            {}};
    for (const auto& r : rows) {
      if (r.feasible) {
        t.add_row({r.lambda, true, count_cell(r.report.steps_to_winner), count_cell(r.report.winner),
                   count_cell(r.report.stationarity_steps), int_cell(r.report.negativity_events), std::string()});
      } else {
        t.add_row({r.lambda, false, std::string("infeasible"), std::string("infeasible"), std::string("infeasible"),
                   std::monostate{}, r.note});
      }
    }
    return t;
  }

  if (a.steps) {
    const auto traj = evolution::evolve(pop, m, *a.steps, policy);
    Table t{"trajectory", {"step", "total"}, {}};
    for (std::size_t i = 0; i < m.size(); ++i) t.columns.push_back("phi" + std::to_string(i));
    for (std::size_t s = 0; s < traj.states.size(); ++s) {
      const auto& p = traj.states[s];
      double total = 0.0;
      for (double v : p.phi()) total += v;
      std::vector<Cell> row{int_cell(s), total};
      for (double v : p.phi()) row.emplace_back(v);
      t.add_row(std::move(row));
    }
    return t;
  }

  const auto report = evolution::convergence_time(pop, m, policy, a.convergence);
  Table t{"convergence",
          {"steps_to_winner", "winner", "stationarity_steps", "negativity_events", "steps_run"},
          {}};
  std::vector<Cell> row{count_cell(report.steps_to_winner), count_cell(report.winner),
                        count_cell(report.stationarity_steps), int_cell(report.negativity_events),
                        int_cell(report.steps_run)};
  if (a.rate) {
    t.columns.push_back("convergence_rate");
    const auto r = evolution::measure_convergence_rate(m, pop);
    row.push_back(r ? Cell(*r) : Cell(std::monostate{}));
  }
  t.add_row(std::move(row));
  return t;
}

// --- fold -------------------------------------------------------------------

struct FoldArgs {
  std::optional<std::size_t> units;
  bool allow_cis = false;
  bool count_only = false;
  bool emit_coords = false;
  std::string coords_format = "table";
  double bond_length = 1.0;
  std::size_t cap = 12;
  int threads = 1;
  std::string input;  // discretize
};

std::string choices_text(const lattice::ChainConformation& c) {
  std::string s;
  for (std::size_t i = 0; i < c.choices.size(); ++i) s += (i ? " " : "") + c.choices[i].to_string();
  return s;
}

// Writes directly for the text/xyz exports; returns a table otherwise.
std::optional<Table> run_fold(const FoldArgs& a, std::ostream& out) {
  if (!a.units) throw InputError("fold needs --units");
  const lattice::EnumerationOptions options{*a.units, a.allow_cis, a.cap, a.threads};

  if (a.count_only) {
    const auto count = lattice::enumerate_conformations(options);
    Table t{"conformation_count", {"units", "allow_cis", "count"}, {}};
    t.add_row({int_cell(*a.units), a.allow_cis, static_cast<std::int64_t>(count)});
    return t;
  }

  if (a.emit_coords && a.coords_format != "table") {
    std::ostringstream text;
    std::size_t k = 0;
    lattice::enumerate_conformations(options, [&](const lattice::ChainConformation& c) {
      const auto coords = lattice::conformation_to_coordinates(c, a.bond_length);
      if (a.coords_format == "xyz") {
        text << coords.size() << "\nconformation " << k << " choices " << choices_text(c) << "\n";
        for (const auto& p : coords) {
          text << "C " << io::format_number(p.x) << ' ' << io::format_number(p.y) << ' ' << io::format_number(p.z)
               << '\n';
        }
      } else {
        text << "# conformation " << k << " choices " << choices_text(c) << "\n";
        for (std::size_t i = 0; i < coords.size(); ++i) {
          text << i << ' ' << io::format_number(coords[i].x) << ' ' << io::format_number(coords[i].y) << ' '
               << io::format_number(coords[i].z) << '\n';
        }
      }
      ++k;
    });
    out << text.str();
    return std::nullopt;
  }

  if (a.emit_coords) {
    Table t{"coordinates", {"conformation", "site", "x", "y", "z"}, {}};
    std::int64_t k = 0;
    lattice::enumerate_conformations(options, [&](const lattice::ChainConformation& c) {
      const auto coords = lattice::conformation_to_coordinates(c, a.bond_length);
      for (std::size_t i = 0; i < coords.size(); ++i) {
        t.add_row({k, int_cell(i), coords[i].x, coords[i].y, coords[i].z});
      }
      ++k;
    });
    return t;
  }

  Table t{"conformations", {"conformation", "choices", "end_to_end"}, {}};
  std::int64_t k = 0;
  lattice::enumerate_conformations(options, [&](const lattice::ChainConformation& c) {
    const auto coords = lattice::conformation_to_coordinates(c, a.bond_length);
    t.add_row({k++, choices_text(c), lattice::norm(coords.back() - coords.front())});
  });
  return t;
}

Table run_discretize(const FoldArgs& a) {
  std::vector<std::pair<double, double>> pairs;
  if (a.input.empty() || a.input == "-") {
    pairs = io::read_angle_csv(std::cin, "<stdin>");
  } else {
    std::ifstream in(a.input);
    if (!in) throw InputError("cannot open " + a.input);
    pairs = io::read_angle_csv(in, a.input);
  }
  std::vector<lattice::RamachandranPoint> points;
  points.reserve(pairs.size());
  for (const auto& [phi, psi] : pairs) points.push_back({phi, psi});
  const auto assigned = lattice::discretize_batch(points);

  Table t{"discretization", {"phi", "psi", "star_phi", "star_psi", "distance"}, {}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    t.add_row({points[i].phi_deg, points[i].psi_deg, assigned[i].star.phi_deg(), assigned[i].star.psi_deg(),
               assigned[i].distance_deg});
  }
  return t;
}

// --- replication ------------------------------------------------------------

struct ReplicationArgs {
  std::size_t n = 0;
  std::size_t target = 0;
  bool one_based = false;
  std::vector<double> ratios;
};

Table run_replication(const ReplicationArgs& a) {
  const std::size_t target = resolve_target(a.target, a.one_based);
  if (target >= a.n) throw ConstraintError("target out of range for database of size " + std::to_string(a.n));
  const auto rows = replication::hierarchy_sweep(a.n, target, a.ratios);
  Table t{"replication_sweep", {"ratio", "success_probability", "damping_factor"}, {}};
  for (const auto& r : rows) t.add_row({r.ratio, r.success_probability, r.damping_factor});
  return t;
}

// --- aminoacids -------------------------------------------------------------

Table amino_acid_table() {
  Table t{"amino_acids", {"code3", "name", "property", "mol_wt", "class"}, {}};
  for (const auto& r : codes::canonical_table()) {
    t.add_row({r.code3, r.name, std::string(codes::to_string(r.property)), r.mol_wt,
               std::string(codes::to_string(r.synthetase_class))});
  }
  return t;
}

std::string validation_output(io::Format format) {
  const auto report = codes::validate_partition(codes::canonical_table());
  Table t{"partition_checks", {"check", "passed", "detail"}, {}};
  for (const auto& c : report.checks) t.add_row({c.name, c.passed, c.detail});
  if (format == io::Format::Csv) return io::to_csv(t);

  auto doc = nlohmann::ordered_json::parse(io::to_json(t));
  doc["all_passed"] = report.all_passed();
  auto groups = nlohmann::ordered_json::array();
  for (const auto& gm : report.groups) {
    groups.push_back({{"property", std::string(codes::to_string(gm.property))},
                      {"class_i_count", gm.class_i_count},
                      {"class_ii_count", gm.class_ii_count},
                      {"class_i_mean", gm.class_i_mean},
                      {"class_ii_mean", gm.class_ii_mean}});
  }
  doc["groups"] = std::move(groups);
  return doc.dump(2) + "\n";
}

void emit(const std::string& text, const GlobalOptions& g, std::ostream& out) {
  if (g.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + g.output);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search, evolution and lattice-folding simulations behind genetic alphabet sizes", "lifecode"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", global.output, "Write to this file instead of standard output");
  app.add_option("--seed", global.seed, "Reserved; all computations are deterministic");

  GroverArgs grover;
  auto* grover_cmd = app.add_subcommand("grover", "Simulate amplitude-amplification search");
  grover_cmd->add_option("--n", grover.n, "Database size")->required()->check(CLI::PositiveNumber);
  grover_cmd->add_option("--target", grover.target, "Target index (zero-based unless --one-based)");
  grover_cmd->add_flag("--one-based", grover.one_based, "Interpret --target as one-based");
  auto* queries_opt = grover_cmd->add_option("--queries", grover.queries, "Number of search iterations");
  auto* optimal_flag = grover_cmd->add_flag("--optimal", grover.optimal, "Report the optimal query count");
  queries_opt->excludes(optimal_flag);
  grover_cmd->add_flag("--trace", grover.trace, "Emit amplitudes after every reflection");

  std::size_t q_max = 3;
  auto* sizes_cmd = app.add_subcommand("sizes", "Database sizes searched exactly with Q queries");
  sizes_cmd->add_option("--q-max", q_max, "Largest query count")->check(CLI::PositiveNumber);

  EvolveArgs evolve;
  auto* evolve_cmd = app.add_subcommand("evolve", "Population evolution under a column-normalised matrix");
  evolve_cmd->add_option("--matrix", evolve.matrix_file, "Matrix file, one row per line");
  evolve_cmd->add_option("--matrix-values", evolve.matrix_values, "Inline matrix, e.g. \"0.9,0.1;0.1,0.9\"");
  evolve_cmd->add_option("--pop", evolve.pop_file, "Population file");
  evolve_cmd->add_option("--pop-values", evolve.pop_values, "Inline population, e.g. \"1,0\"");
  evolve_cmd->add_option("--steps", evolve.steps, "Emit the trajectory for this many steps");
  evolve_cmd->add_option("--policy", evolve.policy, "Negativity policy")
      ->check(CLI::IsMember({"strict", "projected"}));
  evolve_cmd->add_option("--threshold", evolve.convergence.winner_threshold, "Winner population fraction");
  evolve_cmd->add_option("--stationarity-tol", evolve.convergence.stationarity_tol, "L1 change per step");
  evolve_cmd->add_option("--max-steps", evolve.convergence.max_steps, "Step limit")->check(CLI::PositiveNumber);
  evolve_cmd->add_flag("--rate", evolve.rate, "Add the measured geometric convergence rate");
  evolve_cmd->add_flag("--speedup", evolve.speedup, "Sweep base + lambda * perturbation");
  evolve_cmd->add_option("--perturbation", evolve.perturbation_file, "Perturbation matrix file (zero column sums)");
  evolve_cmd->add_option("--perturbation-values", evolve.perturbation_values, "Inline perturbation matrix");
  evolve_cmd->add_option("--lambdas", evolve.lambdas, "Perturbation strengths")->delimiter(',');

  FoldArgs fold;
  auto* fold_cmd = app.add_subcommand("fold", "Backbone conformations on the diamond lattice");
  fold_cmd->require_subcommand(0, 1);
  fold_cmd->add_option("--units", fold.units, "Peptide units in the chain")->check(CLI::PositiveNumber);
  fold_cmd->add_flag("--allow-cis", fold.allow_cis, "Allow the cis peptide switch");
  fold_cmd->add_flag("--count-only", fold.count_only, "Only count conformations");
  fold_cmd->add_flag("--emit-coords", fold.emit_coords, "Emit Cartesian coordinates");
  fold_cmd->add_option("--coords-format", fold.coords_format, "Coordinate export layout")
      ->check(CLI::IsMember({"table", "text", "xyz"}));
  fold_cmd->add_option("--bond-length", fold.bond_length, "Bond length for coordinates")->check(CLI::PositiveNumber);
  fold_cmd->add_option("--cap", fold.cap, "Largest chain the enumerator will attempt");
  fold_cmd->add_option("--threads", fold.threads, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  auto* discretize_cmd = fold_cmd->add_subcommand("discretize", "Snap (phi, psi) pairs to the nine star points");
  discretize_cmd->add_option("--input", fold.input, "CSV of phi,psi in degrees ('-' for stdin)");

  ReplicationArgs repl;
  auto* repl_cmd = app.add_subcommand("replication", "Damped-oscillation search step over t_osc/t_r ratios");
  repl_cmd->add_option("--n", repl.n, "Database size")->required()->check(CLI::PositiveNumber);
  repl_cmd->add_option("--target", repl.target, "Target index");
  repl_cmd->add_flag("--one-based", repl.one_based, "Interpret --target as one-based");
  repl_cmd->add_option("--ratios", repl.ratios, "t_osc/t_r values")->required()->delimiter(',');

  bool validate = false, export_table = false;
  auto* amino_cmd = app.add_subcommand("aminoacids", "Amino-acid class table and its partition checks");
  auto* validate_flag = amino_cmd->add_flag("--validate", validate, "Run the partition checks");
  auto* export_flag = amino_cmd->add_flag("--export", export_table, "Export the table (default)");
  validate_flag->excludes(export_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const io::Format format = output_format(global);
    std::string text;
    if (grover_cmd->parsed()) {
      text = io::render(run_grover(grover), format);
    } else if (sizes_cmd->parsed()) {
      text = io::render(run_sizes(q_max), format);
    } else if (evolve_cmd->parsed()) {
      text = io::render(run_evolve(evolve), format);
    } else if (fold_cmd->parsed()) {
      if (discretize_cmd->parsed()) {
        text = io::render(run_discretize(fold), format);
      } else {
        std::ostringstream direct;
        auto table = run_fold(fold, direct);
        text = table ? io::render(*table, format) : direct.str();
      }
    } else if (repl_cmd->parsed()) {
      text = io::render(run_replication(repl), format);
    } else if (amino_cmd->parsed()) {
      text = validate ? validation_output(format) : io::render(amino_acid_table(), format);
    }
    emit(text, global, out);
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace lifecode::cli
