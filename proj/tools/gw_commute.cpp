#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gwc/catalog.hpp"
#include "gwc/estimates.hpp"
#include "gwc/hermite.hpp"
#include "gwc/io.hpp"
#include "gwc/suite.hpp"

using namespace gwc;

namespace {

// Writes `table` to `out` atomically, or to stdout when `out` is empty.
void emit(const CsvTable& table, const std::string& out, const std::string& hash) {
  const std::string text = table.render(hash);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(out, text);
  }
}

std::string command_hash(int argc, char** argv) {
  std::string line;
  for (int i = 1; i < argc; ++i) line += std::string(argv[i]) + '\n';
  return content_hash(line);
}

bool all_pass(const CsvTable& t) {
  for (const auto& row : t.rows) {
    if (row.back() != "true") return false;
  }
  return true;
}

std::vector<Exponent> exponents(const std::string& list) {
  std::vector<Exponent> out;
  for (const auto& s : split_list(list)) out.push_back(Exponent::parse(s));
  return out;
}

template <typename T>
std::vector<T> numbers(const std::string& list) {
  std::vector<T> out;
  for (const auto& s : split_list(list)) out.push_back(static_cast<T>(std::stod(s)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutators of polynomial weights with the complex Gauss-Weierstrass semigroup"};
  app.set_version_flag("--version", std::string(kVersionString));
  app.require_subcommand(1);
  const std::string hash = command_hash(argc, argv);
  int status = 0;

  auto* hermite = app.add_subcommand("hermite", "print a Hermite polynomial as beta<TAB>laurent lines");
  std::string h_alpha, h_flavor = "h";
  bool h_recurrence = false;
  hermite->add_option("--alpha", h_alpha, "multi-index a1.a2...")->required();
  hermite->add_option("--flavor", h_flavor, "h or H")->check(CLI::IsMember({"h", "H"}));
  hermite->add_flag("--recurrence", h_recurrence, "generate by the three-term recurrence");
  hermite->callback([&] {
    const MultiIndex a = parse_multiindex(h_alpha);
    const Flavor f = h_flavor == "h" ? Flavor::h : Flavor::H;
    const HermitePoly p = h_recurrence ? hermite_from_recurrence(a, f) : hermite_closed_form(a, f);
    std::cout << format_polynomial(p.poly);
  });

  auto* identity = app.add_subcommand("verify-identity", "compare the three commutator evaluators");
  std::string i_alpha, i_omega = "1,0", i_testfn = "gaussian", i_grid, i_out;
  identity->add_option("--alpha", i_alpha, "multi-index a1.a2...")->required();
  identity->add_option("--omega", i_omega, "RE,IM");
  identity->add_option("--testfn", i_testfn, "catalog id");
  identity->add_option("--grid", i_grid, "N,L (default box per dimension)");
  identity->add_option("--out", i_out, "CSV path (stdout if omitted)");
  identity->callback([&] {
    const MultiIndex a = parse_multiindex(i_alpha);
    const std::size_t n = a.dim();
    const Grid g = i_grid.empty() ? Grid::default_for(n) : parse_grid(i_grid, n);
    const GridFunction phi = catalog_lookup(i_testfn, n).sample(g);
    const CsvTable t = identity_table(verify_identity(a, ComplexParam(parse_complex(i_omega)), phi));
    emit(t, i_out, hash);
    if (!all_pass(t)) status = 1;
  });

  auto* estimate = app.add_subcommand("verify-estimate", "check the weighted commutator estimate");
  std::size_t e_n = 1;
  std::string e_m = "1,2,3", e_p = "2", e_q = "1", e_omega = "1,0", e_testfn = "gaussian", e_grid, e_out;
  estimate->add_option("--n", e_n, "dimension")->check(CLI::Range(1, 3));
  estimate->add_option("--m", e_m, "weight orders, comma-separated");
  estimate->add_option("--p", e_p, "target exponent (number or inf)");
  estimate->add_option("--q", e_q, "source exponent, q <= p");
  estimate->add_option("--omega", e_omega, "RE,IM");
  estimate->add_option("--testfn", e_testfn, "catalog id");
  estimate->add_option("--grid", e_grid, "N,L");
  estimate->add_option("--out", e_out, "CSV path (stdout if omitted)");
  estimate->callback([&] {
    const Grid g = e_grid.empty() ? Grid::default_for(e_n) : parse_grid(e_grid, e_n);
    const GridFunction phi = catalog_lookup(e_testfn, e_n).sample(g);
    const ExponentTriple pq(Exponent::parse(e_p), Exponent::parse(e_q));
    const ComplexParam w(parse_complex(e_omega));
    std::vector<EstimateReport> reps;
    for (int m : numbers<int>(e_m)) reps.push_back(verify_theorem_1_2(m, pq, w, phi, e_testfn));
    const CsvTable t = estimate_table(reps);
    emit(t, e_out, hash);
    if (!all_pass(t)) status = 1;
  });

  auto* constants = app.add_subcommand("constants", "tabulate the estimate constants A and A-tilde");
  std::string c_n = "1,2,3", c_m = "1,2,3,4", c_r = "1,2,inf", c_theta = "0,0.5,1,1.5", c_out;
  constants->add_option("--n", c_n, "dimensions");
  constants->add_option("--m", c_m, "weight orders");
  constants->add_option("--r", c_r, "exponents r (number or inf)");
  constants->add_option("--theta", c_theta, "arguments theta, |theta| < pi/2");
  constants->add_option("--out", c_out, "CSV path (stdout if omitted)");
  constants->callback([&] {
    emit(constants_table(numbers<std::size_t>(c_n), numbers<int>(c_m), exponents(c_r), numbers<double>(c_theta)),
         c_out, hash);
  });

  auto* norms = app.add_subcommand("kernel-norms", "closed-form and quadrature norms of x^beta G_w");
  std::string k_beta, k_omega = "1,0", k_r = "1,2,inf", k_out;
  norms->add_option("--beta", k_beta, "multi-index b1.b2...")->required();
  norms->add_option("--omega", k_omega, "RE,IM");
  norms->add_option("--r", k_r, "exponents");
  norms->add_option("--out", k_out, "CSV path (stdout if omitted)");
  norms->callback([&] {
    emit(kernel_norm_table(parse_multiindex(k_beta), parse_complex(k_omega), exponents(k_r)), k_out, hash);
  });

  auto* cgl = app.add_subcommand("cgl", "small-data Ginzburg-Landau run with decay and weighted probes");
  std::string g_nu = "1,0", g_lambda = "-1,0", g_q = "1", g_out = "cgl";
  double g_p = 4, g_eps = 0.01, g_sigma = 1, g_T = 100, g_dt = 0.01;
  int g_m = 1;
  cgl->add_option("--nu", g_nu, "RE,IM with RE > 0");
  cgl->add_option("--lambda", g_lambda, "RE,IM");
  cgl->add_option("--p", g_p, "nonlinearity power, p > 1 + 2/n");
  cgl->add_option("--eps", g_eps, "data size, u0 = eps G_sigma");
  cgl->add_option("--sigma", g_sigma, "data width");
  cgl->add_option("--T", g_T, "final time");
  cgl->add_option("--dt", g_dt, "time step");
  cgl->add_option("--m", g_m, "weight order")->check(CLI::Range(0, 6));
  cgl->add_option("--q", g_q, "weighted norm exponent");
  cgl->add_option("--out", g_out, "output prefix");
  cgl->callback([&] {
    CGLConfig cfg = CGLConfig::gaussian_data(g_eps, g_sigma);
    cfg.nu = parse_complex(g_nu);
    cfg.lambda = parse_complex(g_lambda);
    cfg.p = g_p;
    cfg.T = g_T;
    cfg.dt = g_dt;
    cfg.validate();
    const auto snaps = simulate(cfg);
    const DecayProbe decay = decay_records(snaps, {Exponent::finite(1), Exponent::finite(2), Exponent::infinity()});
    const WeightedProbe w = weighted_series(snaps, g_m, Exponent::parse(g_q), cfg.T);
    write_file_atomic(g_out + "_decay.csv", decay_table(decay).render(hash));
    write_file_atomic(g_out + "_weighted.csv", weighted_table(w).render(hash));
    write_file_atomic(g_out + ".plt", gnuplot_script(g_out, g_m));
    std::printf("slope %s (m/2 = %s), ratio bound %s, decay bounded %s\n", format_double(w.slope).c_str(),
                format_double(g_m / 2.0).c_str(), format_double(w.ratio_bound).c_str(),
                decay.bounded() ? "yes" : "no");
    if (!(w.ratio_ok() && decay.bounded())) status = 1;
  });

  auto* suite = app.add_subcommand("suite", "run the harnesses listed in an INI config");
  std::string s_config, s_out;
  suite->add_option("--config", s_config, "INI file")->required();
  suite->add_option("--out", s_out, "artifact directory (overrides [suite] output)");
  suite->callback([&] {
    const SuiteResult r = run_suite(s_config, s_out);
    for (const auto& m : r.messages) std::cerr << m << '\n';
    status = r.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return status;
}
