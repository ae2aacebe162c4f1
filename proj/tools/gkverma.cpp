#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gkverma/output.hpp"
#include "gkverma/tableaux.hpp"

namespace {

using namespace gkverma;

// Grid bound of the form "c" or "cn" (c a rational, n the rank parameter),
// e.g. "-3n" means -3*n and "7/2" means 7/2 for every rank.
struct GridBound {
  Rational coefficient;
  bool times_n = false;

  Rational at(int n) const { return times_n ? coefficient * n : coefficient; }
};

GridBound parse_grid_bound(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty grid bound");
  GridBound bound;
  if (token.back() == 'n') {
    bound.times_n = true;
    token.remove_suffix(1);
    if (token.empty() || token == "-") token = token.empty() ? "1" : "-1";
  }
  bound.coefficient = parse_rational(token);
  return bound;
}

// "lo:hi:step" with rank-relative bounds, e.g. "-3n:n:1/2".
struct GridSpec {
  GridBound lo;
  GridBound hi;
  Rational step;
};

GridSpec parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos)
    throw std::invalid_argument("grid must look like lo:hi:step, e.g. -3n:n:1/2");
  GridSpec spec;
  spec.lo = parse_grid_bound(std::string_view(text).substr(0, first));
  spec.hi = parse_grid_bound(std::string_view(text).substr(first + 1, second - first - 1));
  spec.step = parse_rational(text.substr(second + 1));
  if (spec.step <= 0) throw std::invalid_argument("grid step must be positive");
  return spec;
}

// Arithmetic progression lo..hi plus the off-lattice probes k + 1/3 for
// every integer k in the range; the probes pin down behaviour away from
// (1/2)Z, where every module must stay irreducible.
std::vector<Rational> grid_points(const GridSpec& spec, int n) {
  const Rational lo = spec.lo.at(n);
  const Rational hi = spec.hi.at(n);
  std::vector<Rational> points;
  for (Rational z = lo; z <= hi; z += spec.step) points.push_back(z);
  const Rational third(1, 3);
  for (Integer k = -floor_rational(-lo); Rational(k) <= hi; ++k)
    points.push_back(Rational(k) + third);
  return points;
}

// Runs work(0..count-1), spreading indices over `jobs` threads.  Each index
// writes only its own result slot, so the output order never depends on the
// thread interleaving.
template <typename Work>
void run_indexed(std::size_t count, int jobs, Work&& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int used = std::min<std::size_t>(jobs, count);
  pool.reserve(used);
  for (int t = 0; t < used; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) work(i);
    });
  for (std::thread& thread : pool) thread.join();
}

int type_floor(LieType type) { return type == LieType::D ? 3 : 2; }

std::vector<ParabolicChoice> all_choices(const std::vector<LieType>& types, int n_max) {
  std::vector<ParabolicChoice> choices;
  for (LieType type : types)
    for (int n = type_floor(type); n <= n_max; ++n) {
      const LieAlgebra algebra(type, n);
      for (int p = 1; p <= algebra.rank(); ++p) choices.emplace_back(algebra, p);
    }
  return choices;
}

void emit(const std::vector<OutputRecord>& records, const std::string& format) {
  std::cout << (format == "json" ? to_json(records) : to_csv(records));
}

struct ComputeArgs {
  std::string type;
  int n = 0;
  int p = 0;
  std::string z;
  std::string weight;
  std::string format = "csv";
};

int run_compute(const ComputeArgs& args) {
  const LieAlgebra algebra(lie_type_from_letter(args.type.at(0)), args.n);
  OutputRecord record;
  record.type = algebra.type;
  record.n = algebra.n;
  record.source = Source::algorithm;
  if (!args.weight.empty()) {
    record.gkdim = gkdim_general(algebra, parse_rational_list(args.weight));
  } else {
    const ParabolicChoice choice(algebra, args.p);
    const Rational z = parse_rational(args.z);
    record.p = args.p;
    record.z = z;
    record.gkdim = gkdim_scalar(choice, z);
    record.dim_u = dim_nilradical(choice);
    record.reducible = *record.gkdim < *record.dim_u;
    record.wallach = wallach_annotation(choice, z);
  }
  emit({record}, args.format);
  return 0;
}

struct PointArgs {
  std::string type;
  int n = 0;
  int p = 0;
  std::string z;
  std::string format = "csv";
};

int run_reducible(const PointArgs& args) {
  const ParabolicChoice choice(LieAlgebra(lie_type_from_letter(args.type.at(0)), args.n), args.p);
  const Rational z = parse_rational(args.z);
  OutputRecord record;
  record.type = choice.algebra.type;
  record.n = choice.algebra.n;
  record.p = args.p;
  record.z = z;
  record.gkdim = gkdim_scalar(choice, z);
  record.dim_u = dim_nilradical(choice);
  record.reducible = *record.gkdim < *record.dim_u;
  record.source = Source::algorithm;
  emit({record}, args.format);
  return 0;
}

struct SetArgs {
  std::string type;
  int n = 0;
  int p = 0;
  std::string format = "csv";
};

int run_set(const SetArgs& args) {
  const ParabolicChoice choice(LieAlgebra(lie_type_from_letter(args.type.at(0)), args.n), args.p);
  OutputRecord record;
  record.type = choice.algebra.type;
  record.n = choice.algebra.n;
  record.p = args.p;
  record.dim_u = dim_nilradical(choice);
  record.set = reducibility_set(choice).components;
  record.first_points = first_reducible_point(choice);
  record.source = Source::closed_form;
  emit({record}, args.format);
  return 0;
}

struct FirstArgs {
  std::string type;
  int n = 0;
  int p = 0;
  bool search = false;
  std::string floor = "-3n";
  std::string format = "csv";
};

int run_first(const FirstArgs& args) {
  const ParabolicChoice choice(LieAlgebra(lie_type_from_letter(args.type.at(0)), args.n), args.p);
  OutputRecord record;
  record.type = choice.algebra.type;
  record.n = choice.algebra.n;
  record.p = args.p;
  if (args.search) {
    record.first_points = first_reducible_point_searched(choice, parse_grid_bound(args.floor).at(args.n));
    record.source = Source::algorithm;
  } else {
    record.first_points = first_reducible_point(choice);
    record.source = Source::closed_form;
  }
  emit({record}, args.format);
  return 0;
}

struct TableArgs {
  std::string type;
  int n_min = 0;  // 0 = type floor
  int n_max = 0;
  int jobs = 1;
  std::string format = "csv";
};

// One row per (n, p, lattice component); the first point column carries the
// minimum of that component.
int run_table(const TableArgs& args) {
  const LieType type = lie_type_from_letter(args.type.at(0));
  const int n_min = args.n_min > 0 ? args.n_min : type_floor(type);
  if (n_min < type_floor(type) || args.n_max < n_min)
    throw std::invalid_argument("table needs type-floor <= n-min <= n-max");
  std::vector<ParabolicChoice> choices;
  for (int n = n_min; n <= args.n_max; ++n) {
    const LieAlgebra algebra(type, n);
    for (int p = 1; p <= algebra.rank(); ++p) choices.emplace_back(algebra, p);
  }
  std::vector<std::vector<OutputRecord>> rows(choices.size());
  run_indexed(choices.size(), args.jobs, [&](std::size_t i) {
    const ParabolicChoice& choice = choices[i];
    const std::vector<FirstReduciblePoint> points = first_reducible_point(choice);
    for (std::size_t c = 0; c < points.size(); ++c) {
      OutputRecord record;
      record.type = choice.algebra.type;
      record.n = choice.algebra.n;
      record.p = choice.p;
      record.dim_u = dim_nilradical(choice);
      record.set = {reducibility_set(choice).components[c]};
      record.first_points = {points[c]};
      record.source = Source::closed_form;
      rows[i].push_back(std::move(record));
    }
  });
  std::vector<OutputRecord> flat;
  for (const auto& group : rows) flat.insert(flat.end(), group.begin(), group.end());
  emit(flat, args.format);
  return 0;
}

struct SelfcheckArgs {
  int n_max = 10;
  std::string grid = "-3n:n:1/2";
  int jobs = 1;
};

constexpr std::array<std::string_view, 10> kSuiteNames = {
    "oracle_equivalence",    "table_equivalence", "first_point_coincidence",
    "plateau_below_minimum", "dominant_vanishing", "monotonicity",
    "integral_coherence",    "congruence_sufficiency", "type_A_dominance",
    "gkdim_bounds"};

struct SuiteStat {
  long checked = 0;
  std::vector<std::string> bad;
};

using Suites = std::array<SuiteStat, kSuiteNames.size()>;

void record_check(SuiteStat& stat, bool ok, const std::string& witness) {
  ++stat.checked;
  if (!ok) stat.bad.push_back(witness);
}

std::string cell_name(const ParabolicChoice& choice, const Rational& z) {
  std::ostringstream out;
  out << lie_type_letter(choice.algebra.type) << " n=" << choice.algebra.n << " p=" << choice.p
      << " z=" << format_rational(z);
  return out.str();
}

std::string weight_name(const LieAlgebra& algebra, const Weight& weight) {
  std::ostringstream out;
  out << lie_type_letter(algebra.type) << " n=" << algebra.n << " weight=";
  for (std::size_t i = 0; i < weight.size(); ++i)
    out << (i ? "," : "") << format_rational(weight[i]);
  return out.str();
}

std::vector<Rational> random_block(std::mt19937& gen, int length, bool strictly_decreasing) {
  std::uniform_int_distribution<int> start(-4, 8);
  std::uniform_int_distribution<int> gap(strictly_decreasing ? 1 : 0, 3);
  std::vector<Rational> block;
  int value = start(gen);
  for (int i = 0; i < length; ++i) {
    block.emplace_back(value);
    value -= gap(gen);
  }
  return block;
}

void check_random_weights(const LieAlgebra& algebra, Suites& suites) {
  std::seed_seq seed{static_cast<int>(algebra.type), algebra.n, 17};
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int round = 0; round < 60; ++round) {
    Weight weight(algebra.coord_length());
    const bool half = round % 2 == 1;
    for (Rational& value : weight) {
      value = entry(gen);
      if (half) value += Rational(1, 2);
    }
    const long fast = gkdim_integral(algebra, weight);
    const long general = gkdim_general(algebra, weight);
    record_check(suites[6], fast == general,
                 "integral_coherence " + weight_name(algebra, weight) + ": integral=" +
                     std::to_string(fast) + " general=" + std::to_string(general));
  }
}

void check_type_a_dominance(const ParabolicChoice& choice, Suites& suites) {
  const LieAlgebra& algebra = choice.algebra;
  const int p = choice.p;
  const int q = algebra.n - p;
  std::seed_seq seed{static_cast<int>(algebra.type), algebra.n, p, 29};
  std::mt19937 gen(seed);
  for (int round = 0; round < 30; ++round) {
    Weight weight = random_block(gen, p, true);
    const Weight tail = random_block(gen, q, true);
    weight.insert(weight.end(), tail.begin(), tail.end());
    const bool integral = round % 2 == 0;
    if (!integral)
      for (int i = 0; i < p; ++i) weight[i] += Rational(1, 3);
    const long general = gkdim_general(algebra, weight);
    long expected = 0;
    if (integral) {
      const Partition columns = dual_partition(rs_shape(weight));
      const long m = columns.rows.size() > 1 ? columns.rows[1] : 0;
      expected = m * (algebra.n - m);
    } else {
      expected = static_cast<long>(p) * q;
    }
    record_check(suites[8], general == expected,
                 "type_A_dominance " + weight_name(algebra, weight) + ": gkdim=" +
                     std::to_string(general) + " expected=" + std::to_string(expected));
  }
}

Suites check_choice(const ParabolicChoice& choice, const GridSpec& grid) {
  Suites suites;
  const int n = choice.algebra.n;
  const bool has_table = choice.algebra.type != LieType::C;
  const long dim_u = dim_nilradical(choice);
  const ReducibilitySet set = reducibility_set(choice);

  std::map<Rational, long> values;
  for (const Rational& z : grid_points(grid, n)) {
    const long gk = gkdim_scalar(choice, z);
    values.emplace(z, gk);
    record_check(suites[0], is_reducible(choice, z) == set.contains(z),
                 "oracle_equivalence " + cell_name(choice, z) + ": algorithm=" +
                     std::to_string(is_reducible(choice, z)) + " closed_form=" +
                     std::to_string(set.contains(z)));
    if (has_table) {
      const std::optional<long> table = gkdim_closed_form(choice, z);
      record_check(suites[1], table && *table == gk,
                   "table_equivalence " + cell_name(choice, z) + ": algorithm=" +
                       std::to_string(gk) + " closed_form=" +
                       (table ? std::to_string(*table) : std::string("absent")));
    }
    record_check(suites[9], gk >= 0 && gk <= dim_u,
                 "gkdim_bounds " + cell_name(choice, z) + ": gkdim=" + std::to_string(gk) +
                     " dim_u=" + std::to_string(dim_u));
  }

  const auto searched = first_reducible_point_searched(choice, grid.lo.at(n));
  const auto closed = first_reducible_point(choice);
  {
    std::ostringstream witness;
    witness << "first_point_coincidence " << cell_name(choice, 0) << ":";
    for (const auto& point : closed)
      witness << " " << lattice_tag_name(point.lattice) << ":" << format_rational(point.z);
    witness << " vs";
    for (const auto& point : searched)
      witness << " " << lattice_tag_name(point.lattice) << ":" << format_rational(point.z);
    record_check(suites[2], closed == searched, witness.str());
  }

  Rational z_min = set.components.front().base;
  for (const LatticeComponent& component : set.components) z_min = std::min(z_min, component.base);
  for (int step = 1; step <= 3; ++step) {
    const Rational z = z_min - Rational(step, 2);
    const long gk = gkdim_scalar(choice, z);
    record_check(suites[3], gk == dim_u,
                 "plateau_below_minimum " + cell_name(choice, z) + ": gkdim=" +
                     std::to_string(gk) + " dim_u=" + std::to_string(dim_u));
  }

  for (int z = 0; z <= 3; ++z)
    record_check(suites[4], gkdim_scalar(choice, z) == 0,
                 "dominant_vanishing " + cell_name(choice, z) + ": gkdim=" +
                     std::to_string(gkdim_scalar(choice, z)));

  for (const auto& [z, gk] : values) {
    const auto above = values.find(z + 1);
    if (above == values.end()) continue;
    record_check(suites[5], above->second <= gk,
                 "monotonicity " + cell_name(choice, z) + ": gkdim(z)=" + std::to_string(gk) +
                     " gkdim(z+1)=" + std::to_string(above->second));
  }

  for (const Rational& z : {Rational(1, 3), Rational(1, 5), Rational(-7, 3)})
    record_check(suites[7], gkdim_scalar(choice, z) == dim_u && !set.contains(z),
                 "congruence_sufficiency " + cell_name(choice, z) + ": gkdim=" +
                     std::to_string(gkdim_scalar(choice, z)) + " dim_u=" + std::to_string(dim_u));

  if (choice.p == 1 && n <= 8) check_random_weights(choice.algebra, suites);
  if (choice.algebra.type == LieType::A) check_type_a_dominance(choice, suites);
  return suites;
}

int run_selfcheck(const SelfcheckArgs& args) {
  const GridSpec grid = parse_grid(args.grid);
  const std::vector<ParabolicChoice> choices =
      all_choices({LieType::A, LieType::B, LieType::C, LieType::D}, args.n_max);
  std::vector<Suites> results(choices.size());
  run_indexed(choices.size(), args.jobs, [&](std::size_t i) {
    results[i] = check_choice(choices[i], grid);
  });

  Suites total;
  for (const Suites& part : results)
    for (std::size_t s = 0; s < total.size(); ++s) {
      total[s].checked += part[s].checked;
      for (const std::string& witness : part[s].bad)
        if (total[s].bad.size() < 10) total[s].bad.push_back(witness);
    }

  long grand_total = 0;
  bool all_ok = true;
  for (std::size_t s = 0; s < total.size(); ++s) {
    const bool ok = total[s].bad.empty();
    all_ok = all_ok && ok;
    grand_total += total[s].checked;
    std::cout << "suite " << kSuiteNames[s] << ": " << total[s].checked << " checks, "
              << total[s].bad.size() << (total[s].bad.size() == 10 ? "+" : "")
              << " mismatches [" << (ok ? "ok" : "FAIL") << "]\n";
  }
  for (const SuiteStat& stat : total)
    for (const std::string& witness : stat.bad) std::cout << "counterexample: " << witness << "\n";
  std::cout << "selfcheck: " << (all_ok ? "PASS" : "FAIL") << " (" << total.size() << " suites, "
            << grand_total << " checks)\n";
  return all_ok ? 0 : 1;
}

std::string now_string() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%S%z", std::localtime(&now));
  return buffer;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GK dimensions and scalar-type generalized Verma reducibility for classical Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --timestamps appear after the subcommand as well
  bool timestamps = false;
  app.add_flag("--timestamps", timestamps, "log start/end times to stderr");

  const auto type_check = CLI::IsMember({"A", "B", "C", "D"});
  const auto format_check = CLI::IsMember({"csv", "json"});

  ComputeArgs compute;
  CLI::App* cmd_compute = app.add_subcommand(
      "compute", "GK dimension of one module, from --weight or from --p/--z");
  cmd_compute->add_option("--type", compute.type, "A, B, C or D")->required()->check(type_check);
  cmd_compute->add_option("--n", compute.n, "rank parameter; type A means sl(n)")->required();
  CLI::Option* opt_p = cmd_compute->add_option("--p", compute.p, "crossed-out simple root");
  CLI::Option* opt_z = cmd_compute->add_option("--z", compute.z, "scalar parameter, rational a/b");
  CLI::Option* opt_weight =
      cmd_compute->add_option("--weight", compute.weight, "comma-separated lambda+rho");
  cmd_compute->add_option("--format", compute.format, "csv or json")->check(format_check);
  opt_weight->excludes(opt_p)->excludes(opt_z);
  opt_p->needs(opt_z);
  opt_z->needs(opt_p);

  PointArgs reducible;
  CLI::App* cmd_reducible =
      app.add_subcommand("reducible", "reducibility verdict for one scalar parameter");
  cmd_reducible->add_option("--type", reducible.type, "A, B, C or D")->required()->check(type_check);
  cmd_reducible->add_option("--n", reducible.n, "rank parameter")->required();
  cmd_reducible->add_option("--p", reducible.p, "crossed-out simple root")->required();
  cmd_reducible->add_option("--z", reducible.z, "scalar parameter, rational a/b")->required();
  cmd_reducible->add_option("--format", reducible.format, "csv or json")->check(format_check);

  SetArgs set_args;
  CLI::App* cmd_set = app.add_subcommand("set", "full reducibility set of one parabolic");
  cmd_set->add_option("--type", set_args.type, "A, B, C or D")->required()->check(type_check);
  cmd_set->add_option("--n", set_args.n, "rank parameter")->required();
  cmd_set->add_option("--p", set_args.p, "crossed-out simple root")->required();
  cmd_set->add_option("--format", set_args.format, "csv or json")->check(format_check);

  FirstArgs first;
  CLI::App* cmd_first = app.add_subcommand("first", "first reducible point per lattice");
  cmd_first->add_option("--type", first.type, "A, B, C or D")->required()->check(type_check);
  cmd_first->add_option("--n", first.n, "rank parameter")->required();
  cmd_first->add_option("--p", first.p, "crossed-out simple root")->required();
  cmd_first->add_flag("--search", first.search, "scan upward instead of using the closed form");
  cmd_first->add_option("--floor", first.floor, "scan start, rational or rank-relative like -3n");
  cmd_first->add_option("--format", first.format, "csv or json")->check(format_check);

  TableArgs table;
  CLI::App* cmd_table = app.add_subcommand("table", "reducibility atlas over a range of ranks");
  cmd_table->add_option("--type", table.type, "A, B, C or D")->required()->check(type_check);
  cmd_table->add_option("--n-min", table.n_min, "smallest rank (default: type floor)");
  cmd_table->add_option("--n-max", table.n_max, "largest rank")->required();
  cmd_table->add_option("--jobs", table.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd_table->add_option("--format", table.format, "csv or json")->check(format_check);

  SelfcheckArgs selfcheck;
  CLI::App* cmd_selfcheck =
      app.add_subcommand("selfcheck", "cross-validate the algorithm against every closed form");
  cmd_selfcheck->add_option("--n-max", selfcheck.n_max, "largest rank (default 10)");
  cmd_selfcheck->add_option("--grid", selfcheck.grid, "z grid lo:hi:step (default -3n:n:1/2)");
  cmd_selfcheck->add_option("--jobs", selfcheck.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (timestamps) std::cerr << "# start " << now_string() << "\n";
  int status = 2;
  try {
    if (cmd_compute->parsed()) {
      if (compute.weight.empty() == compute.z.empty())
        throw std::invalid_argument("compute needs exactly one of --weight or --p/--z");
      status = run_compute(compute);
    } else if (cmd_reducible->parsed()) {
      status = run_reducible(reducible);
    } else if (cmd_set->parsed()) {
      status = run_set(set_args);
    } else if (cmd_first->parsed()) {
      status = run_first(first);
    } else if (cmd_table->parsed()) {
      status = run_table(table);
    } else if (cmd_selfcheck->parsed()) {
      status = run_selfcheck(selfcheck);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = 2;
  }
  if (timestamps) std::cerr << "# end " << now_string() << "\n";
  return status;
}
