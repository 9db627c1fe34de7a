#include "gwc/suite.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "gwc/catalog.hpp"
#include "gwc/estimates.hpp"
#include "gwc/io.hpp"
#include "gwc/parallel.hpp"

namespace gwc {

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("malformed number '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("malformed number '" + text + "'");
  return v;
}

int parse_int(const std::string& text) {
  const double v = parse_number(text);
  if (v != std::floor(v) || std::abs(v) > 1e6) throw ConfigError("expected an integer, got '" + text + "'");
  return static_cast<int>(v);
}

Exponent parse_exponent(const std::string& text) {
  try {
    return Exponent::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

ComplexParam parse_omega(const std::string& text) {
  const Complex w = parse_complex(text);
  if (!(w.real() > 0)) throw ConfigError("parameter range: omega = " + text + " needs a positive real part");
  return ComplexParam(w);
}

void check_theta(double theta) {
  if (!(std::abs(theta) < std::numbers::pi / 2)) {
    throw ConfigError("parameter range: theta = " + format_double(theta) + " must satisfy |theta| < pi/2");
  }
}

// Keys of one INI section with defaults.
class Section {
 public:
  Section(const boost::property_tree::ptree& root, const std::string& name) : name_(name) {
    if (const auto child = root.get_child_optional(name)) tree_ = *child;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    return tree_.get<std::string>(key, fallback);
  }
  std::vector<std::string> list(const std::string& key, const std::string& fallback,
                                std::string_view separators = ",") const {
    return split_list(text(key, fallback), separators);
  }
  double number(const std::string& key, double fallback) const {
    const auto v = tree_.get_optional<std::string>(key);
    return v ? parse_number(*v) : fallback;
  }
  std::vector<int> ints(const std::string& key, const std::string& fallback) const {
    std::vector<int> out;
    for (const auto& s : list(key, fallback)) out.push_back(parse_int(s));
    return out;
  }
  std::vector<std::size_t> dims(const std::string& key, const std::string& fallback) const {
    std::vector<std::size_t> out;
    for (int d : ints(key, fallback)) {
      if (d < 1 || d > 3) throw ConfigError("[" + name_ + "] " + key + ": dimension must be 1, 2 or 3");
      out.push_back(std::size_t(d));
    }
    return out;
  }
  std::vector<ComplexParam> omegas(const std::string& key, const std::string& fallback) const {
    std::vector<ComplexParam> out;
    for (const auto& s : list(key, fallback, ";")) out.push_back(parse_omega(s));
    return out;
  }
  std::vector<std::string> test_functions(const std::vector<std::size_t>& dims) const {
    auto ids = list("test_functions", "gaussian, gaussian-shifted");
    for (const auto& id : ids) {
      for (std::size_t n : dims) {
        try {
          catalog_lookup(id, n);
        } catch (const std::invalid_argument& e) {
          throw ConfigError("[" + name_ + "] " + e.what());
        }
      }
    }
    return ids;
  }

 private:
  std::string name_;
  boost::property_tree::ptree tree_;
};

struct IdentityPlan {
  std::vector<std::size_t> dims;
  int min_order = 1, max_order = 4;
  std::vector<ComplexParam> omegas;
  std::vector<std::string> test_functions;
};

struct EstimatePlan {
  std::vector<std::size_t> dims;
  std::vector<int> orders;
  std::vector<ExponentTriple> pq;
  std::vector<ComplexParam> omegas;
  std::vector<std::string> test_functions;
};

struct ConstantsPlan {
  std::vector<std::size_t> dims;
  std::vector<int> orders;
  std::vector<Exponent> rs;
  std::vector<double> thetas;
};

struct CglPlan {
  CGLConfig config;
  std::vector<int> orders;
  Exponent q = Exponent::finite(1);
  double probe_interval = 1;
};

IdentityPlan plan_identity(const boost::property_tree::ptree& root) {
  const Section s(root, "identity");
  IdentityPlan p;
  p.dims = s.dims("dims", "1,2");
  p.min_order = parse_int(s.text("min_order", "1"));
  p.max_order = parse_int(s.text("max_order", "4"));
  if (p.min_order < 0 || p.max_order < p.min_order || p.max_order > 10) {
    throw ConfigError("[identity] orders must satisfy 0 <= min_order <= max_order <= 10");
  }
  p.omegas = s.omegas("omegas", "1,0; 2,0; 1,0.99; 0.1,0.05");
  p.test_functions = s.test_functions(p.dims);
  return p;
}

EstimatePlan plan_estimate(const boost::property_tree::ptree& root) {
  const Section s(root, "estimate");
  EstimatePlan p;
  p.dims = s.dims("dims", "1,2");
  p.orders = s.ints("orders", "1,2,3");
  for (int m : p.orders) {
    if (m < 1 || m > 10) throw ConfigError("[estimate] orders must lie in 1..10");
  }
  for (const auto& pair : s.list("pq", "1:1, 2:1, inf:1, 2:2, inf:2, inf:inf")) {
    const auto parts = split_list(pair, ":");
    if (parts.size() != 2) throw ConfigError("[estimate] pq entries look like P:Q, got '" + pair + "'");
    try {
      p.pq.emplace_back(parse_exponent(parts[0]), parse_exponent(parts[1]));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("[estimate] " + std::string(e.what()));
    }
  }
  p.omegas = s.omegas("omegas", "1,0; 1,0.9");
  p.test_functions = s.test_functions(p.dims);
  return p;
}

ConstantsPlan plan_constants(const boost::property_tree::ptree& root) {
  const Section s(root, "constants");
  ConstantsPlan p;
  p.dims = s.dims("dims", "1,2,3");
  p.orders = s.ints("orders", "1,2,3,4");
  for (int m : p.orders) {
    if (m < 1) throw ConfigError("[constants] orders must be positive");
  }
  for (const auto& r : s.list("r", "1,2,inf")) p.rs.push_back(parse_exponent(r));
  for (const auto& t : s.list("thetas", "0, 0.5, 1, 1.5")) {
    p.thetas.push_back(parse_number(t));
    check_theta(p.thetas.back());
  }
  return p;
}

CglPlan plan_cgl(const boost::property_tree::ptree& root) {
  const Section s(root, "cgl");
  CglPlan p;
  const double eps = s.number("eps", 0.01);
  const double sigma = s.number("sigma", 1.0);
  if (!(sigma > 0)) throw ConfigError("[cgl] sigma must be positive");
  try {
    p.config = CGLConfig::gaussian_data(eps, sigma);
    p.config.nu = parse_complex(s.text("nu", "1,0"));
    p.config.lambda = parse_complex(s.text("lambda", "-1,0"));
    p.config.p = s.number("p", 4);
    p.config.T = s.number("T", 100);
    p.config.dt = s.number("dt", 0.01);
    p.config.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("[cgl] " + std::string(e.what()));
  }
  if (!(p.config.T > 0) || !(p.config.dt > 0)) throw ConfigError("[cgl] T and dt must be positive");
  p.orders = s.ints("orders", "1,2");
  for (int m : p.orders) {
    if (m < 0 || m > 6) throw ConfigError("[cgl] orders must lie in 0..6");
  }
  p.q = parse_exponent(s.text("q", "1"));
  p.probe_interval = s.number("probe_interval", 1.0);
  if (!(p.probe_interval > 0)) throw ConfigError("[cgl] probe_interval must be positive");
  return p;
}

std::vector<IdentityReport> run_identity(const IdentityPlan& plan) {
  struct Case {
    MultiIndex alpha;
    ComplexParam omega;
    std::string id;
  };
  std::vector<Case> cases;
  for (std::size_t n : plan.dims) {
    for (int m = plan.min_order; m <= plan.max_order; ++m) {
      for (const auto& a : enumerate_level(n, m)) {
        for (const auto& w : plan.omegas) {
          for (const auto& id : plan.test_functions) cases.push_back({a, w, id});
        }
      }
    }
  }
  const auto blocks = parallel_map(cases, [](const Case& c) {
    const std::size_t n = c.alpha.dim();
    return verify_identity(c.alpha, c.omega, catalog_lookup(c.id, n).sample(Grid::default_for(n)));
  });
  std::vector<IdentityReport> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<EstimateReport> run_estimate(const EstimatePlan& plan) {
  struct Case {
    std::size_t n;
    std::string id;
    int m;
    ComplexParam omega;
  };
  std::vector<Case> cases;
  for (std::size_t n : plan.dims) {
    for (const auto& id : plan.test_functions) {
      for (int m : plan.orders) {
        for (const auto& w : plan.omegas) cases.push_back({n, id, m, w});
      }
    }
  }
  const auto blocks = parallel_map(cases, [&](const Case& c) {
    const GridFunction phi = catalog_lookup(c.id, c.n).sample(Grid::default_for(c.n));
    std::vector<EstimateReport> reps;
    for (const auto& pq : plan.pq) reps.push_back(verify_theorem_1_2(c.m, pq, c.omega, phi, c.id));
    return reps;
  });
  std::vector<EstimateReport> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool table_passes(const CsvTable& t) {
  if (t.header.empty() || t.header.back() != "pass") return true;
  for (const auto& row : t.rows) {
    if (row.back() != "true") return false;
  }
  return true;
}

}  // namespace

std::string CsvTable::render(std::string_view config_hash) const {
  std::string out = boost::algorithm::join(header, ",") + "\n";
  for (const auto& row : rows) out += boost::algorithm::join(row, ",") + "\n";
  return out + csv_footer(config_hash);
}

CsvTable identity_table(const std::vector<IdentityReport>& reports) {
  CsvTable t{{"alpha", "omega_re", "omega_im", "pair", "rel_l2_err", "pass"}, {}};
  for (const auto& r : reports) {
    t.rows.push_back({to_string(r.alpha), format_double(r.omega.real()), format_double(r.omega.imag()), r.pair,
                      format_double(r.rel_l2_err), flag(r.pass)});
  }
  return t;
}

CsvTable estimate_table(const std::vector<EstimateReport>& reports) {
  CsvTable t{{"n", "m", "p", "q", "r", "omega_re", "omega_im", "theta", "lhs", "rhs", "constant", "margin", "pass"},
             {}};
  for (const auto& r : reports) {
    t.rows.push_back({std::to_string(r.n), std::to_string(r.m), r.p, r.q, r.r, format_double(r.omega.real()),
                      format_double(r.omega.imag()), format_double(r.theta), format_double(r.lhs),
                      format_double(r.rhs), format_double(r.constant), format_double(r.margin), flag(r.pass)});
  }
  return t;
}

CsvTable constants_table(const std::vector<std::size_t>& dims, const std::vector<int>& orders,
                         const std::vector<Exponent>& rs, const std::vector<double>& thetas) {
  for (double th : thetas) check_theta(th);
  CsvTable t{{"n", "m", "r", "theta", "A", "A_tilde", "pass"}, {}};
  for (std::size_t n : dims) {
    for (int m : orders) {
      for (const auto& r : rs) {
        for (double th : thetas) {
          const double a = constant_A(n, m, r, th);
          const double at = constant_A_tilde(n, m, r, th);
          const bool ok = std::isfinite(a) && a > 0 && at > 0 && at <= a && a == constant_A(n, m, r, -th);
          t.rows.push_back({std::to_string(n), std::to_string(m), to_string(r), format_double(th), format_double(a),
                            format_double(at), flag(ok)});
        }
      }
    }
  }
  return t;
}

CsvTable kernel_norm_table(const MultiIndex& beta, Complex omega, const std::vector<Exponent>& rs) {
  CsvTable t{{"beta", "omega_re", "omega_im", "r", "closed_form", "quadrature", "rel_diff"}, {}};
  for (const auto& r : rs) {
    const double exact = kernel_moment_norm(beta, omega, r);
    const double quad = kernel_moment_norm_quadrature(beta, omega, r);
    t.rows.push_back({to_string(beta), format_double(omega.real()), format_double(omega.imag()), to_string(r),
                      format_double(exact), format_double(quad), format_double(std::abs(quad - exact) / exact)});
  }
  return t;
}

CsvTable decay_table(const DecayProbe& probe) {
  CsvTable t{{"t", "r", "record"}, {}};
  for (const auto& d : probe.records) t.rows.push_back({format_double(d.t), to_string(d.r), format_double(d.value)});
  return t;
}

CsvTable weighted_table(const WeightedProbe& probe) {
  CsvTable t{{"t", "W", "W_normalized"}, {}};
  for (const auto& s : probe.series) {
    t.rows.push_back({format_double(s.t), format_double(s.W), format_double(s.normalized)});
  }
  return t;
}

std::string gnuplot_script(const std::string& prefix, int m) {
  const std::string name = std::filesystem::path(prefix).filename().string();
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set datafile commentschars '#'\n"
    << "set terminal pngcairo size 900,1000\n"
    << "set output '" << name << ".png'\n"
    << "set multiplot layout 2,1\n"
    << "set logscale xy\n"
    << "set xlabel 't'\n"
    << "set ylabel '(1+t)^{(n/2)(1-1/r)} ||u(t)||_r'\n"
    << "set key bottom right\n"
    << "plot for [r in \"1 2 inf\"] '" << name << "_decay.csv' every ::1 "
    << "using ($1 > 0 ? $1 : 1/0):(strcol(2) eq r ? $3 : 1/0) with linespoints title 'r = '.r\n"
    << "set ylabel 'W(t)'\n"
    << "plot '" << name << "_weighted.csv' every ::1 using ($1 > 0 ? $1 : 1/0):2 with linespoints title 'W, m = "
    << m << "', \\\n"
    << "     '' every ::1 using ($1 > 0 ? $1 : 1/0):3 with linespoints title 'W / (1 + t^{" << m << "/2})'\n"
    << "unset multiplot\n";
  return s.str();
}

Complex parse_complex(std::string_view text) {
  const auto parts = split_list(text, ",");
  if (parts.empty() || parts.size() > 2) throw ConfigError("expected RE,IM, got '" + std::string(text) + "'");
  return {parse_number(parts[0]), parts.size() == 2 ? parse_number(parts[1]) : 0.0};
}

Grid parse_grid(std::string_view text, std::size_t dim) {
  const auto parts = split_list(text, ",");
  if (parts.size() != 2) throw ConfigError("expected N,L, got '" + std::string(text) + "'");
  const int n = parse_int(parts[0]);
  const double l = parse_number(parts[1]);
  if (n < 2 || !(l > 0)) throw ConfigError("grid needs N >= 2 and L > 0");
  return Grid(dim, std::size_t(n), l);
}

std::vector<std::string> split_list(std::string_view text, std::string_view separators) {
  std::vector<std::string> parts;
  const std::string s(text);
  boost::algorithm::split(parts, s, boost::algorithm::is_any_of(std::string(separators)));
  std::vector<std::string> out;
  for (auto& p : parts) {
    boost::algorithm::trim(p);
    if (!p.empty()) out.push_back(p);
  }
  return out;
}

SuiteResult run_suite(const std::filesystem::path& config, const std::filesystem::path& out_dir) {
  std::ifstream in(config, std::ios::binary);
  if (!in) return {2, {}, {"cannot read config " + config.string()}};
  std::ostringstream text;
  text << in.rdbuf();
  std::filesystem::path dir = out_dir;
  if (dir.empty()) {
    boost::property_tree::ptree root;
    std::istringstream probe(text.str());
    try {
      boost::property_tree::read_ini(probe, root);
    } catch (const boost::property_tree::ini_parser_error& e) {
      return {2, {}, {"config parse error: " + std::string(e.what())}};
    }
    dir = config.parent_path() / root.get<std::string>("suite.output", "suite_out");
  }
  return run_suite_text(text.str(), dir);
}

SuiteResult run_suite_text(const std::string& text, const std::filesystem::path& out_dir) {
  SuiteResult result;
  boost::property_tree::ptree root;
  std::vector<std::string> harnesses;
  IdentityPlan identity;
  EstimatePlan estimate;
  ConstantsPlan constants;
  CglPlan cgl;
  try {
    std::istringstream in(text);
    try {
      boost::property_tree::read_ini(in, root);
    } catch (const boost::property_tree::ini_parser_error& e) {
      throw ConfigError("config parse error: " + std::string(e.what()));
    }
    harnesses = split_list(root.get<std::string>("suite.harnesses", ""));
    for (const auto& h : harnesses) {
      if (h == "identity") {
        identity = plan_identity(root);
      } else if (h == "estimate") {
        estimate = plan_estimate(root);
      } else if (h == "constants") {
        constants = plan_constants(root);
      } else if (h == "cgl") {
        cgl = plan_cgl(root);
      } else {
        throw ConfigError("unknown harness '" + h + "'");
      }
    }
  } catch (const ConfigError& e) {
    return {2, {}, {e.what()}};
  }
  if (harnesses.empty()) return result;

  const std::string hash = content_hash(text);
  std::filesystem::create_directories(out_dir);
  auto emit = [&](const std::string& name, const CsvTable& table) {
    const auto path = out_dir / name;
    write_file_atomic(path, table.render(hash));
    result.artifacts.push_back(path);
    const bool ok = table_passes(table);
    std::size_t failed = 0;
    if (!ok) {
      for (const auto& row : table.rows) failed += row.back() != "true";
    }
    result.messages.push_back(name + ": " + std::to_string(table.rows.size()) + " rows, " +
                              std::to_string(failed) + " failed");
    if (!ok) result.exit_code = 1;
  };

  for (const auto& h : harnesses) {
    if (h == "identity") {
      emit("identity.csv", identity_table(run_identity(identity)));
    } else if (h == "estimate") {
      emit("estimate.csv", estimate_table(run_estimate(estimate)));
    } else if (h == "constants") {
      emit("constants.csv", constants_table(constants.dims, constants.orders, constants.rs, constants.thetas));
    } else if (h == "cgl") {
      std::vector<Snapshot> snaps;
      try {
        snaps = simulate(cgl.config, cgl.probe_interval);
      } catch (const BlowUpError& e) {
        result.exit_code = 1;
        result.messages.push_back(std::string("cgl: ") + e.what());
        continue;
      }
      const DecayProbe decay = decay_records(snaps, {Exponent::finite(1), Exponent::finite(2), Exponent::infinity()});
      emit("cgl_decay.csv", decay_table(decay));
      CsvTable summary{{"m", "q", "slope", "target", "ratio_bound", "boundary_fraction", "decay_bounded", "pass"}, {}};
      for (int m : cgl.orders) {
        const WeightedProbe w = weighted_series(snaps, m, cgl.q, cgl.config.T);
        emit("cgl_weighted_m" + std::to_string(m) + ".csv", weighted_table(w));
        const bool ok = std::abs(w.slope - m / 2.0) <= 0.1 && w.ratio_ok() && decay.bounded();
        summary.rows.push_back({std::to_string(m), to_string(cgl.q), format_double(w.slope), format_double(m / 2.0),
                                format_double(w.ratio_bound), format_double(w.max_boundary_fraction),
                                flag(decay.bounded()), flag(ok)});
      }
      emit("cgl_summary.csv", summary);
    }
  }
  return result;
}

}  // namespace gwc
