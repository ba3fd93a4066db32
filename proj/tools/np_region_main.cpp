// np-region: Neyman-Pearson region toolkit. Emits figure-ready CSV (or a
// JSON mirror) for boundaries, divergence bounds and realization queries.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "np/decision.hpp"
#include "np/divergences.hpp"
#include "np/io.hpp"
#include "np/parallel.hpp"
#include "np/realization.hpp"
#include "np/upper_bounds.hpp"

namespace {

using namespace np;

struct Output {
  std::string format = "csv";
  std::string path;  // empty -> stdout

  void emit_table(const CsvTable& table) const {
    if (format == "json")
      emit_text(csv_to_json(table) + "\n");
    else {
      std::ostringstream ss;
      write_csv(ss, table);
      emit_text(ss.str());
    }
  }

  void emit_text(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("IoError", "cannot write " + path);
    out << text;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "Output path (default: stdout)");
}

std::size_t default_grid() {
  if (const char* env = std::getenv("NP_REGION_GRID")) {
    const long v = std::atol(env);
    if (v >= 2) return static_cast<std::size_t>(v);
  }
  return 201;
}

std::vector<double> alpha_column(std::size_t grid) {
  std::vector<double> xs(grid);
  const double step = 1.0 / static_cast<double>(grid - 1);
  for (std::size_t i = 0; i < grid; ++i) xs[i] = static_cast<double>(i) * step;
  return xs;
}

CsvTable curve_table(const std::vector<std::string>& names,
                     const std::vector<std::function<double(double)>>& curves,
                     std::size_t grid) {
  CsvTable table;
  table.header.push_back("alpha");
  for (const auto& n : names) table.header.push_back(n);
  const auto xs = alpha_column(grid);
  std::vector<std::vector<double>> cols;
  for (const auto& c : curves) cols.push_back(sample_unit_grid(c, grid));
  table.rows.resize(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    table.rows[i].push_back(xs[i]);
    for (const auto& col : cols) table.rows[i].push_back(col[i]);
  }
  return table;
}

CsvTable boundary_table(const PiecewiseLinearBoundary& b) {
  CsvTable table;
  table.header = {"alpha", "beta"};
  for (const auto& v : b.vertices) table.rows.push_back({v.alpha, v.beta});
  return table;
}

// ---- subcommand state ----

struct DivergenceArgs {
  std::string pair_path, gen_spec;
  Output out;
} g_div;

struct BoundaryArgs {
  std::string pair_path;
  bool brute = false;
  Output out;
} g_boundary;

struct LowerArgs {
  std::string kind;
  double value = -1.0;
  double rho = -1.0;
  double q = 0.5;
  double l = 0.0, u = 2.0;
  unsigned n = 1;
  std::size_t grid = 0;
  Output out;
} g_lower;

struct UpperArgs {
  double q = 0.5;
  double rho = 0.8;
  unsigned n = 1;
  std::size_t grid = 0;
  std::size_t hull_grid = 4097;
  Output out;
} g_upper;

struct RealizeArgs {
  std::string vertices_path;
  bool cdf = false;
  std::size_t knots = 1001;
  Output out;
} g_realize;

struct BerArgs {
  std::string pair_path;
  double prior = 0.5;
  double rho = -1.0;
  double q = 0.5;
  unsigned n = 1;
  std::size_t grid = 0;
  Output out;
} g_ber;

struct SampleSizeArgs {
  double q = 0.5;
  double rho = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  Output out;
} g_samplesize;

struct FigureArgs {
  int index = 0;
  std::vector<double> values{0.2, 0.5, 0.8};
  double rho = -1.0;
  double q = 0.5;
  std::vector<unsigned> samples{1, 40, 160};
  std::string p_spec = "gaussian:0,1";
  std::string q_spec = "gaussian:0,2";
  std::size_t cells = 4096;
  std::size_t grid = 0;
  Output out;
} g_figure;

std::size_t pick_grid(std::size_t flag_value) {
  return flag_value >= 2 ? flag_value : default_grid();
}

void run_divergence() {
  const CategoricalPair pair = pair_from_json(read_file(g_div.pair_path));
  const FGenerator gen = FGenerator::parse(g_div.gen_spec);
  const DivergenceValue d = f_divergence(pair, gen);
  if (g_div.out.format == "json")
    g_div.out.emit_text("{\"generator\":\"" + gen.spec_string() +
                        "\",\"value\":" + (d.finite() ? format_number(d.value) : "\"inf\"") +
                        "}\n");
  else
    g_div.out.emit_text(format_number(d.value) + "\n");
}

void run_boundary() {
  const CategoricalPair pair = pair_from_json(read_file(g_boundary.pair_path));
  const PiecewiseLinearBoundary b =
      g_boundary.brute ? brute_force_boundary(pair) : exact_boundary(pair);
  if (g_boundary.out.format == "json")
    g_boundary.out.emit_text(boundary_to_json(b) + "\n");
  else
    g_boundary.out.emit_table(boundary_table(b));
}

void run_lower() {
  const LowerKind kind = parse_lower_kind(g_lower.kind);
  LowerParams params;
  params.q = g_lower.q;
  params.l = g_lower.l;
  params.u = g_lower.u;
  params.n = g_lower.n;
  if (kind == LowerKind::Hellinger || kind == LowerKind::Alpha) {
    if (g_lower.rho < 0.0) throw CLI::RequiredError("--rho (for kind " + g_lower.kind + ")");
    params.value = g_lower.rho;
  } else if (kind != LowerKind::Indicator) {
    if (g_lower.value < 0.0) throw CLI::RequiredError("--value (for kind " + g_lower.kind + ")");
    params.value = g_lower.value;
  }
  const BoundCurve curve = named_lower_curve(kind, params);
  g_lower.out.emit_table(curve_table({"beta"}, {curve.eval}, pick_grid(g_lower.grid)));
}

void run_upper() {
  const BoundCurve raw = chernoff_envelope_curve(g_upper.q, g_upper.rho, g_upper.n);
  const BoundCurve refined = refined_chernoff_curve(g_upper.q, g_upper.rho, g_upper.n);
  const PiecewiseLinearBoundary hull = convex_refine(
      [&](double a) { return a == 0.0 ? kInf : raw.eval(a); }, g_upper.hull_grid);
  const auto hull_eval = [hull](double a) { return eval_boundary(hull, a); };
  const auto raw_eval = [raw](double a) { return a == 0.0 ? kInf : raw.eval(a); };
  g_upper.out.emit_table(curve_table({"raw", "refined", "hull"},
                                     {raw_eval, refined.eval, hull_eval},
                                     pick_grid(g_upper.grid)));
}

void run_realize() {
  const auto vertices = vertices_from_json(read_file(g_realize.vertices_path));
  if (!g_realize.cdf) {
    const CategoricalPair pair = realize_categorical(vertices);
    g_realize.out.emit_text(pair_to_json(pair) + "\n");
    return;
  }
  const CategoricalPair pair = realize_categorical(vertices);
  const PiecewiseLinearBoundary b = exact_boundary(pair);
  const CdfTable table = realize_unit_interval(b, g_realize.knots);
  CsvTable csv;
  csv.header = {"x", "F"};
  for (std::size_t i = 0; i < table.knots.size(); ++i)
    csv.rows.push_back({table.knots[i], table.values[i]});
  g_realize.out.emit_table(csv);
}

void run_ber() {
  const PriorPair prior = make_prior(g_ber.prior);
  CsvTable table;
  if (!g_ber.pair_path.empty()) {
    const CategoricalPair pair = pair_from_json(read_file(g_ber.pair_path));
    const BayesError be = bayes_error(exact_boundary(pair), prior);
    table.header = {"ber", "alpha_star", "beta_star"};
    table.rows.push_back({be.ber, be.argmin.alpha, be.argmin.beta});
  } else {
    if (g_ber.rho < 0.0) throw CLI::RequiredError("--rho or --pair");
    LowerParams params;
    params.value = g_ber.rho;
    params.q = g_ber.q;
    params.n = g_ber.n;
    const BoundCurve lower = named_lower_curve(LowerKind::Alpha, params);
    const BoundCurve upper = refined_chernoff_curve(g_ber.q, g_ber.rho, g_ber.n);
    const BerInterval iv = ber_bounds(lower.eval, upper.eval, prior, pick_grid(g_ber.grid));
    table.header = {"lb", "ub"};
    table.rows.push_back({iv.lb, iv.ub});
  }
  g_ber.out.emit_table(table);
}

void run_samplesize() {
  const unsigned exclusion =
      min_sample_size(g_samplesize.q, g_samplesize.rho, g_samplesize.alpha, g_samplesize.beta);
  const unsigned achievable = achievable_sample_size(g_samplesize.q, g_samplesize.rho,
                                                     g_samplesize.alpha, g_samplesize.beta);
  CsvTable table;
  table.header = {"exclusion_n", "achievability_n"};
  table.rows.push_back({static_cast<double>(exclusion),
                        achievable == 0 ? kInf : static_cast<double>(achievable)});
  g_samplesize.out.emit_table(table);
}

void run_figure() {
  const std::size_t grid = pick_grid(g_figure.grid);
  const auto ignorance = [](double a) { return 1.0 - a; };
  switch (g_figure.index) {
    case 1: {
      if (g_figure.values.size() != 3) fail("ValueOutOfRange", "figure 1 needs three --values");
      std::vector<std::string> names;
      std::vector<std::function<double(double)>> curves;
      for (double v : g_figure.values) {
        names.push_back("kl_" + format_number(v));
        curves.push_back(named_lower_curve(LowerKind::Kl, {.value = v}).eval);
      }
      for (double v : g_figure.values) {
        names.push_back("h2_" + format_number(v));
        // Figure labels carry the divergence value; H^2 = 1 - rho.
        curves.push_back(named_lower_curve(LowerKind::Hellinger, {.value = 1.0 - v}).eval);
      }
      for (double v : g_figure.values) {
        names.push_back("tvd_" + format_number(v));
        curves.push_back(named_lower_curve(LowerKind::Tvd, {.value = v}).eval);
      }
      names.push_back("ignorance");
      curves.push_back(ignorance);
      g_figure.out.emit_table(curve_table(names, curves, grid));
      return;
    }
    case 2: {
      const double rho = g_figure.rho < 0.0 ? 0.99 : g_figure.rho;
      std::vector<std::string> names;
      std::vector<std::function<double(double)>> curves;
      for (unsigned n : g_figure.samples) {
        names.push_back("beta_n" + std::to_string(n));
        curves.push_back(
            named_lower_curve(LowerKind::Hellinger, {.value = rho, .n = n}).eval);
      }
      names.push_back("ignorance");
      curves.push_back(ignorance);
      g_figure.out.emit_table(curve_table(names, curves, grid));
      return;
    }
    case 4: {
      const double rho = g_figure.rho < 0.0 ? 0.8 : g_figure.rho;
      const auto raw = chernoff_envelope_curve(g_figure.q, rho, 1);
      const auto refined = refined_chernoff_curve(g_figure.q, rho, 1);
      const auto raw_eval = [raw](double a) { return a == 0.0 ? kInf : raw.eval(a); };
      g_figure.out.emit_table(
          curve_table({"raw", "refined", "ignorance"}, {raw_eval, refined.eval, ignorance}, grid));
      return;
    }
    case 5: {
      const AnalyticFamily pf = parse_family(g_figure.p_spec);
      const AnalyticFamily qf = parse_family(g_figure.q_spec);
      const auto [plo, phi] = pf.support();
      const auto [qlo, qhi] = qf.support();
      const GridSpec window{std::min(plo, qlo), std::max(phi, qhi), g_figure.cells};
      const CategoricalPair pair = discretize_analytic(pf, qf, window).pair;

      const PiecewiseLinearBoundary b = exact_boundary(pair);
      const double tvd = f_divergence(pair, FGenerator::tvd()).value;
      const double rho = chernoff_coefficient(pair, 0.5);
      const double kl = f_divergence(pair, FGenerator::kl()).value;
      const double chi2 = f_divergence(pair, FGenerator::chi2()).value;
      g_figure.out.emit_table(curve_table(
          {"boundary", "tvd", "h2", "kl", "chi2", "ignorance"},
          {[b](double a) { return eval_boundary(b, a); },
           named_lower_curve(LowerKind::Tvd, {.value = tvd}).eval,
           named_lower_curve(LowerKind::Hellinger, {.value = rho}).eval,
           named_lower_curve(LowerKind::Kl, {.value = kl}).eval,
           named_lower_curve(LowerKind::Chi2Fwd, {.value = chi2}).eval, ignorance},
          grid));
      return;
    }
    default:
      throw CLI::ValidationError("figure", "figure index must be one of {1, 2, 4, 5}");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neyman-Pearson region bounds, boundaries and realizations"};
  app.require_subcommand(1);

  auto* div = app.add_subcommand("divergence", "Evaluate an f-divergence on a pair");
  div->add_option("--pair", g_div.pair_path, "Pair JSON file")->required();
  div->add_option("--gen", g_div.gen_spec,
                  "Generator spec: tvd|kl|rkl|h2|alpha:q|hs:gamma|chi2|ind:l,u")
      ->required();
  add_output_flags(div, g_div.out);
  div->callback(run_divergence);

  auto* bnd = app.add_subcommand("boundary", "Exact Neyman-Pearson boundary vertices");
  bnd->add_option("--pair", g_boundary.pair_path, "Pair JSON file")->required();
  bnd->add_flag("--brute-force", g_boundary.brute, "Use the 2^n subset-enumeration oracle");
  add_output_flags(bnd, g_boundary.out);
  bnd->callback(run_boundary);

  auto* low = app.add_subcommand("lower", "Lower-bound curve from a divergence value");
  low->add_option("--kind", g_lower.kind,
                  "tvd|hellinger|kl|alpha|chi2_fwd|chi2_rev|pinsker|indicator")
      ->required();
  low->add_option("--value", g_lower.value, "Divergence value (tvd/kl/pinsker/chi2 kinds)");
  low->add_option("--rho", g_lower.rho, "Coefficient rho (hellinger/alpha kinds)");
  low->add_option("--q", g_lower.q, "Order q for the alpha kind")->capture_default_str();
  low->add_option("--l", g_lower.l, "Indicator essinf")->capture_default_str();
  low->add_option("--u", g_lower.u, "Indicator esssup")->capture_default_str();
  low->add_option("--n", g_lower.n, "Sample count (hellinger/alpha only)")
      ->capture_default_str();
  low->add_option("--grid", g_lower.grid, "Curve grid size (default 201 or NP_REGION_GRID)");
  add_output_flags(low, g_lower.out);
  low->callback(run_lower);

  auto* up = app.add_subcommand("upper", "Chernoff upper bound: raw, refined and hull curves");
  up->add_option("--q", g_upper.q, "Coefficient order")->capture_default_str();
  up->add_option("--rho", g_upper.rho, "Chernoff coefficient")->required();
  up->add_option("--n", g_upper.n, "Sample count")->capture_default_str();
  up->add_option("--grid", g_upper.grid, "Curve grid size");
  up->add_option("--hull-grid", g_upper.hull_grid, "Hull sampling grid")->capture_default_str();
  add_output_flags(up, g_upper.out);
  up->callback(run_upper);

  auto* re = app.add_subcommand("realize", "Construct a pair (or cdf) from boundary vertices");
  re->add_option("--vertices", g_realize.vertices_path, "Vertex-list JSON file")->required();
  re->add_flag("--cdf", g_realize.cdf, "Emit the unit-interval cdf instead of a pair");
  re->add_option("--knots", g_realize.knots, "Cdf knot count")->capture_default_str();
  add_output_flags(re, g_realize.out);
  re->callback(run_realize);

  auto* ber = app.add_subcommand("ber", "Bayes error rate (exact from a pair, or bounds)");
  ber->add_option("--pair", g_ber.pair_path, "Pair JSON file (exact mode)");
  ber->add_option("--prior", g_ber.prior, "Class prior pi_p")->required();
  ber->add_option("--rho", g_ber.rho, "Chernoff coefficient (bound mode)");
  ber->add_option("--q", g_ber.q, "Coefficient order")->capture_default_str();
  ber->add_option("--n", g_ber.n, "Sample count")->capture_default_str();
  ber->add_option("--grid", g_ber.grid, "Scan grid");
  add_output_flags(ber, g_ber.out);
  ber->callback(run_ber);

  auto* ss = app.add_subcommand("samplesize", "Sample-size bounds for a target (alpha, beta)");
  ss->add_option("--q", g_samplesize.q, "Coefficient order")->capture_default_str();
  ss->add_option("--rho", g_samplesize.rho, "Chernoff coefficient")->required();
  ss->add_option("--alpha", g_samplesize.alpha, "Target false positive rate")->required();
  ss->add_option("--beta", g_samplesize.beta, "Target false negative rate")->required();
  add_output_flags(ss, g_samplesize.out);
  ss->callback(run_samplesize);

  auto* fig = app.add_subcommand("figure", "Emit a figure-ready curve bundle");
  fig->add_option("index", g_figure.index, "Figure index: 1, 2, 4 or 5")->required();
  fig->add_option("--values", g_figure.values, "Three divergence levels (figure 1)")
      ->delimiter(',');
  fig->add_option("--rho", g_figure.rho, "Coefficient (figures 2 and 4)");
  fig->add_option("--q", g_figure.q, "Coefficient order (figure 4)")->capture_default_str();
  fig->add_option("--samples", g_figure.samples, "Sample counts (figure 2)")->delimiter(',');
  fig->add_option("--p", g_figure.p_spec, "First family spec (figure 5)")->capture_default_str();
  fig->add_option("--q-family", g_figure.q_spec, "Second family spec (figure 5)")
      ->capture_default_str();
  fig->add_option("--cells", g_figure.cells, "Discretization cells (figure 5)")
      ->capture_default_str();
  fig->add_option("--grid", g_figure.grid, "Curve grid size");
  add_output_flags(fig, g_figure.out);
  fig->callback(run_figure);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const np::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
