#include "floq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "floq/csv.hpp"
#include "floq/linalg.hpp"

namespace floq {

namespace {

constexpr double pi = std::numbers::pi;

struct HelpRequest {
  std::string text;
};

struct RawArgs {
  std::string model;
  std::string mu, omega, delta2, k1, k2, delta, mu_chem, j;
  std::string sweep_spec;
  std::vector<std::string> lambdas;
  std::vector<int> la_list;
  int L = 0;
  int N = 0;
  int LA = 0;
  int grid = 1 << 14;
  bool offset_grid = false;
  bool spectrum = false;
  std::string filling = "consecutive";
  std::string out;
  std::string format = "csv";
};

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

Subcommand subcommand_from_name(const std::string& name) {
  if (name == "qmt") return Subcommand::qmt;
  if (name == "winding") return Subcommand::winding;
  if (name == "gee") return Subcommand::gee;
  if (name == "scaling") return Subcommand::scaling;
  if (name == "sweep") return Subcommand::sweep;
  return Subcommand::check;
}

bool takes_filling(Subcommand s) {
  return s == Subcommand::gee || s == Subcommand::scaling ||
         s == Subcommand::sweep;
}

bool takes_grid(Subcommand s) {
  return s == Subcommand::qmt || s == Subcommand::winding ||
         s == Subcommand::sweep;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

int sweep_value_count(double start, double stop, double step) {
  const double span = (stop - start) / step;
  if (span < -1e-9) throw UsageError("--sweep: step moves away from stop");
  const int count = static_cast<int>(std::floor(span + 1e-9)) + 1;
  if (count > 1000000) throw UsageError("--sweep: more than 1e6 points");
  return count;
}

std::vector<double> sweep_values(double start, double stop, double step) {
  const int count = sweep_value_count(start, stop, step);
  std::vector<double> v(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<size_t>(i)] = start + i * step;
  return v;
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << v;
  return os.str();
}

FillingSpec cfg_filling(const ModelSpec& m, const RunConfig& cfg) {
  const double off = cfg.offset_grid ? pi / cfg.L : 0.0;
  return cfg.order == FillingOrder::consecutive
             ? make_filling(cfg.L, cfg.N, Band::minus, off)
             : make_filling_energy_ordered(m, cfg.L, cfg.N, Band::minus, off);
}

int with_output(const RunConfig& cfg,
                const std::function<void(std::ostream&)>& writer) {
  if (cfg.out_path.empty()) {
    writer(std::cout);
    return 0;
  }
  std::ofstream os(cfg.out_path, std::ios::binary);
  if (!os) {
    throw UsageError("--out: cannot open '" + cfg.out_path + "' for writing");
  }
  writer(os);
  os.flush();
  if (!os) {
    std::cerr << "error: failed writing " << cfg.out_path << "\n";
    return 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

int run_qmt(const RunConfig& cfg) {
  const ModelSpec m = cfg.params.build();
  const IntegratedMetric g = integrated_metric(m, cfg.grid_size);
  return with_output(cfg, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::csv) {
      os << "G,grid,critical_flag\n"
         << format_double(g.value) << "," << g.grid_size << ","
         << (g.critical_flag ? "1" : "0") << "\n";
    } else {
      nlohmann::ordered_json jj;
      jj["G"] = g.value;
      jj["grid"] = g.grid_size;
      jj["critical_flag"] = g.critical_flag;
      os << jj.dump(2) << "\n";
    }
  });
}

int run_winding(const RunConfig& cfg) {
  const ModelSpec m = cfg.params.build();
  const WindingResult w = winding_number(m, cfg.grid_size);
  return with_output(cfg, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::csv) {
      os << "w,raw\n" << w.w << "," << format_double(w.raw) << "\n";
    } else {
      nlohmann::ordered_json jj;
      jj["w"] = w.w;
      jj["raw"] = w.raw;
      os << jj.dump(2) << "\n";
    }
  });
}

int run_gee(const RunConfig& cfg) {
  const ModelSpec m = cfg.params.build();
  GeeOptions opts;
  opts.renyi_lambdas = cfg.renyi_lambdas;
  opts.want_spectrum = cfg.want_spectrum;
  const EntanglementResult r = gee(m, cfg_filling(m, cfg), cfg.L_A, opts);
  return with_output(cfg, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::csv) {
      os << "S_A,S_A0,S_QG";
      for (const RenyiEntry& e : r.renyi) {
        const std::string tag = format_double(e.lambda);
        os << ",S_A_renyi_" << tag << ",S_A0_renyi_" << tag << ",S_QG_renyi_"
           << tag;
      }
      os << "\n"
         << format_double(r.s_a) << "," << format_double(r.s_a0) << ","
         << format_double(r.s_qg);
      for (const RenyiEntry& e : r.renyi) {
        os << "," << format_double(e.s_a) << "," << format_double(e.s_a0)
           << "," << format_double(e.s_qg);
      }
      os << "\n";
    } else {
      nlohmann::ordered_json jj;
      jj["S_A"] = r.s_a;
      jj["S_A0"] = r.s_a0;
      jj["S_QG"] = r.s_qg;
      if (!r.renyi.empty()) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const RenyiEntry& e : r.renyi) {
          nlohmann::ordered_json je;
          je["lambda"] = e.lambda;
          je["S_A"] = e.s_a;
          je["S_A0"] = e.s_a0;
          je["S_QG"] = e.s_qg;
          arr.push_back(std::move(je));
        }
        jj["renyi"] = std::move(arr);
      }
      jj["eta"] = r.eta;
      if (r.ent_spectrum) {
        jj["ent_spectrum"] = *r.ent_spectrum;
        jj["spectrum_pos_inf"] = r.spectrum_pos_inf;
        jj["spectrum_neg_inf"] = r.spectrum_neg_inf;
      }
      os << jj.dump(2) << "\n";
    }
  });
}

int run_scaling_cmd(const RunConfig& cfg) {
  ScalingConfig sc;
  sc.base = cfg.params;
  sc.L = cfg.L;
  sc.N = cfg.N;
  sc.L_A_values = cfg.L_A_values;
  sc.offset_grid = cfg.offset_grid;
  sc.order = cfg.order;
  const ScalingResult r = run_scaling(sc);
  return with_output(cfg, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::csv) {
      write_scaling_csv(r, os);
    } else {
      write_scaling_json(r, os);
    }
  });
}

int run_sweep_cmd(const RunConfig& cfg) {
  SweepConfig sw;
  sw.base = cfg.params;
  sw.swept_param = cfg.swept_param;
  sw.values = sweep_values(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_step);
  sw.L = cfg.L;
  sw.N = cfg.N;
  sw.L_A = cfg.L_A;
  sw.grid_size = cfg.grid_size;
  sw.renyi_lambdas = cfg.renyi_lambdas;
  sw.offset_grid = cfg.offset_grid;
  sw.order = cfg.order;
  const SweepResult r = run_sweep(sw);
  return with_output(cfg, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::csv) {
      write_sweep_csv(r, os);
    } else {
      write_sweep_json(r, os);
    }
  });
}

// ---------------------------------------------------------------------------
// check: built-in self-check suite
// ---------------------------------------------------------------------------

struct CheckOutcome {
  bool pass = false;
  std::string detail;
};

ModelSpec gapped_spin() { return spin_chain(spin_chain_params_from_mu(0.9)); }
ModelSpec gapped_ordkr() { return ordkr(OrdkrParams{4.5 * pi, 0.5 * pi}); }
ModelSpec gapped_pqkc() { return pqkc(PqkcParams{0.5 * pi, 0.25 * pi, 5 * pi}); }

CheckOutcome check_unitary_products() {
  std::mt19937 rng(12345u);
  std::uniform_real_distribution<double> uk(-pi, pi);
  std::uniform_real_distribution<double> ukick(0.05, 5.0 * pi);
  std::uniform_real_distribution<double> umu(-pi, pi);
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    const OrdkrParams po{ukick(rng), ukick(rng)};
    worst = std::max(worst, ordkr_unitary_check(po, uk(rng)));
    const PqkcParams pp{ukick(rng) / 2.5, umu(rng), ukick(rng)};
    worst = std::max(worst, pqkc_unitary_check(pp, uk(rng)));
  }
  return {worst <= 1e-12, "max deviation " + sci(worst)};
}

CheckOutcome check_trace_identity() {
  const ModelSpec models[] = {gapped_spin(), gapped_ordkr(), gapped_pqkc()};
  double worst = 0.0;
  for (const ModelSpec& m : models) {
    for (int N = 1; N <= 8; ++N) {
      const FillingSpec f = make_filling(8, N);
      for (int la = 1; la <= 8; ++la) {
        worst = std::max(worst, trace_identity_check(m, f, la, 4));
      }
    }
  }
  return {worst <= 1e-10, "max mismatch " + sci(worst)};
}

CheckOutcome check_metric_closed_form() {
  double worst = 0.0;
  for (double mu : {0.0, 0.5, 2.0}) {
    const ModelSpec m = spin_chain(spin_chain_params_from_mu(mu));
    const double g = integrated_metric(m, 1 << 14).value;
    worst = std::max(worst, std::abs(g - spin_chain_G_analytic(mu)));
  }
  return {worst <= 1e-8, "max error " + sci(worst)};
}

CheckOutcome check_metric_identities() {
  const ModelSpec models[] = {gapped_spin(), gapped_ordkr(), gapped_pqkc()};
  std::mt19937 rng(67890u);
  std::uniform_real_distribution<double> uk(-pi, pi);
  std::uniform_int_distribution<int> pick(0, 2);
  double worst_fd = 0.0;
  double worst_id = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ModelSpec& m = models[pick(rng)];
    const double k = uk(rng);
    worst_fd = std::max(
        worst_fd, std::abs(metric_fd_check(m, k, 1e-4) - metric_at(m, k)));
    worst_id = std::max(worst_id, metric_winding_identity_check(m, k));
  }
  const bool pass = worst_fd <= 1e-4 && worst_id <= 1e-10;
  return {pass, "fd " + sci(worst_fd) + ", chiral identity " + sci(worst_id)};
}

CheckOutcome check_unit_filling_kernel() {
  const FillingSpec f = make_filling(24, 24);
  double worst_eig = 0.0;
  double worst_s = 0.0;
  bool counts_ok = true;
  for (int la : {1, 5, 12, 23}) {
    const std::vector<double> zeta = hermitian_eigenvalues(kernel_a0(f, la));
    int ones = 0;
    for (double z : zeta) {
      worst_eig = std::max(worst_eig, std::min(std::abs(z), std::abs(z - 1.0)));
      if (z > 0.5) ++ones;
    }
    counts_ok = counts_ok && ones == la;
    worst_s = std::max(worst_s, vn_entropy_from_spectrum(zeta));
  }
  const bool pass = worst_eig <= 1e-10 && counts_ok && worst_s <= 1e-10;
  return {pass, "eigenvalue gap " + sci(worst_eig) + ", entropy " + sci(worst_s)};
}

int run_check() {
  const std::pair<const char*, CheckOutcome (*)()> checks[] = {
      {"unitary-products", check_unitary_products},
      {"trace-identity-L8", check_trace_identity},
      {"integrated-metric-closed-form", check_metric_closed_form},
      {"metric-identities", check_metric_identities},
      {"unit-filling-kernel", check_unit_filling_kernel},
  };
  bool all = true;
  for (const auto& [label, fn] : checks) {
    CheckOutcome o;
    try {
      o = fn();
    } catch (const FloqError& e) {
      o = {false, e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << label;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  return all ? 0 : 2;
}

}  // namespace

double parse_real(const std::string& text, const std::string& flag) {
  std::string body = text;
  double scale = 1.0;
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
    scale = pi;
    body.erase(body.size() - 2);
    if (body.empty() || body == "+") return scale;
    if (body == "-") return -scale;
  }
  double v = 0.0;
  const char* first = body.data();
  const char* last = body.data() + body.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw UsageError(flag + ": cannot parse '" + text + "' as a real number");
  }
  return v * scale;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{
      "floquet-geom: quantum geometry and geometric entanglement entropy\n"
      "of driven two-band lattice models"};
  app.require_subcommand(1);
  RawArgs raw;

  const auto add_model = [&raw](CLI::App* s) {
    s->add_option("--model", raw.model, "spin-chain | ordkr | pqkc")
        ->required();
    s->add_option("--mu", raw.mu, "spin chain: mu (= delta2 - omega)");
    s->add_option("--omega", raw.omega, "spin chain: drive frequency");
    s->add_option("--delta2", raw.delta2, "spin chain: second amplitude");
    s->add_option("--k1", raw.k1, "ordkr: first kick strength");
    s->add_option("--k2", raw.k2, "ordkr: second kick strength");
    s->add_option("--delta", raw.delta, "pqkc: pairing amplitude");
    s->add_option("--mu-chem", raw.mu_chem, "pqkc: chemical potential");
    s->add_option("--j", raw.j, "pqkc: hopping strength");
  };
  const auto add_grid = [&raw](CLI::App* s) {
    s->add_option("--grid", raw.grid,
                  "quadrature points over the BZ (power of two, >= 16)");
  };
  const auto add_filling = [&raw](CLI::App* s, bool la_list) {
    s->add_option("--L", raw.L, "unit cells on the ring");
    s->add_option("--N", raw.N, "occupied states (default: L)");
    if (la_list) {
      s->add_option("--LA", raw.la_list,
                    "subsystem sizes (repeatable; default: L/10 .. 9L/10)");
    } else {
      s->add_option("--LA", raw.LA, "subsystem cells (default: L/2)");
    }
    s->add_option("--lambda", raw.lambdas,
                  "extra Renyi orders (repeatable; > 0, != 1)");
    s->add_flag("--offset-grid", raw.offset_grid,
                "shift filling momenta by pi/L");
    s->add_option("--filling-order", raw.filling, "consecutive | energy");
  };
  const auto add_out = [&raw](CLI::App* s) {
    s->add_option("--out", raw.out, "output file (default: stdout)");
    s->add_option("--format", raw.format, "csv | json");
  };

  CLI::App* s_qmt =
      app.add_subcommand("qmt", "BZ-averaged quantum metric G at one point");
  add_model(s_qmt);
  add_grid(s_qmt);
  add_out(s_qmt);

  CLI::App* s_wind =
      app.add_subcommand("winding", "winding number of a chiral model");
  add_model(s_wind);
  add_grid(s_wind);
  add_out(s_wind);

  CLI::App* s_gee =
      app.add_subcommand("gee", "entanglement entropies at one (L, N, L_A)");
  add_model(s_gee);
  add_filling(s_gee, false);
  s_gee->add_flag("--spectrum", raw.spectrum,
                  "include the entanglement spectrum (json only)");
  add_out(s_gee);

  CLI::App* s_scal =
      app.add_subcommand("scaling", "entropies vs subsystem size L_A");
  add_model(s_scal);
  add_filling(s_scal, true);
  add_out(s_scal);

  CLI::App* s_sweep =
      app.add_subcommand("sweep", "G and entropies vs one swept parameter");
  add_model(s_sweep);
  s_sweep
      ->add_option("--sweep", raw.sweep_spec,
                   "<param>:<start>:<stop>:<step> (values accept a pi suffix)")
      ->required();
  add_filling(s_sweep, false);
  add_grid(s_sweep);
  add_out(s_sweep);

  app.add_subcommand("check", "run the built-in self-check suite");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("floquet-geom");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequest{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* fired = app.get_subcommands().front();
  RunConfig cfg;
  cfg.sub = subcommand_from_name(fired->get_name());
  if (cfg.sub == Subcommand::check) return cfg;

  if (raw.model == "spin-chain") {
    cfg.params.family = ModelFamily::spin_chain;
  } else if (raw.model == "ordkr") {
    cfg.params.family = ModelFamily::ordkr;
  } else if (raw.model == "pqkc") {
    cfg.params.family = ModelFamily::pqkc;
  } else {
    throw UsageError("--model: unknown model '" + raw.model +
                     "' (expected spin-chain, ordkr, or pqkc)");
  }

  // Model parameters: reject flags from the wrong family, apply the rest.
  // omega/delta2 precede mu so that --mu always wins for the geometry.
  struct ParamFlag {
    const char* flag;
    const std::string* text;
    ModelFamily family;
    const char* name;
  };
  const ParamFlag param_flags[] = {
      {"--omega", &raw.omega, ModelFamily::spin_chain, "omega"},
      {"--delta2", &raw.delta2, ModelFamily::spin_chain, "delta2"},
      {"--mu", &raw.mu, ModelFamily::spin_chain, "mu"},
      {"--k1", &raw.k1, ModelFamily::ordkr, "k1"},
      {"--k2", &raw.k2, ModelFamily::ordkr, "k2"},
      {"--delta", &raw.delta, ModelFamily::pqkc, "delta"},
      {"--mu-chem", &raw.mu_chem, ModelFamily::pqkc, "mu_chem"},
      {"--j", &raw.j, ModelFamily::pqkc, "j"},
  };
  for (const ParamFlag& p : param_flags) {
    if (fired->count(p.flag) == 0) continue;
    if (cfg.params.family != p.family) {
      throw UsageError(std::string(p.flag) + " does not apply to model '" +
                       raw.model + "'");
    }
    cfg.params.set(p.name, parse_real(*p.text, p.flag));
  }

  if (takes_grid(cfg.sub)) {
    cfg.grid_size = raw.grid;
    if (!is_pow2(cfg.grid_size) || cfg.grid_size < 16) {
      throw UsageError("--grid: must be a power of two, at least 16");
    }
  }

  if (takes_filling(cfg.sub)) {
    const int default_L = cfg.sub == Subcommand::sweep ? 200 : 400;
    cfg.L = fired->count("--L") ? raw.L : default_L;
    if (cfg.L < 2) throw UsageError("--L: need at least 2 unit cells");
    cfg.N = fired->count("--N") ? raw.N : cfg.L;
    if (cfg.N < 1 || cfg.N > cfg.L) {
      throw UsageError("--N: need 1 <= N <= L");
    }
    if (cfg.sub == Subcommand::scaling) {
      if (raw.la_list.empty()) {
        const int step = std::max(1, cfg.L / 20);
        for (int la = std::max(1, cfg.L / 10); la <= 9 * cfg.L / 10;
             la += step) {
          cfg.L_A_values.push_back(la);
        }
      } else {
        cfg.L_A_values = raw.la_list;
        for (size_t i = 0; i < cfg.L_A_values.size(); ++i) {
          const int la = cfg.L_A_values[i];
          if (la < 1 || la > cfg.L) {
            throw UsageError("--LA: values must lie in [1, L]");
          }
          if (i > 0 && la <= cfg.L_A_values[i - 1]) {
            throw UsageError("--LA: values must be strictly increasing");
          }
        }
      }
    } else {
      cfg.L_A = fired->count("--LA") ? raw.LA : cfg.L / 2;
      if (cfg.L_A < 1 || cfg.L_A > cfg.L) {
        throw UsageError("--LA: need 1 <= L_A <= L");
      }
    }
    for (const std::string& text : raw.lambdas) {
      const double lambda = parse_real(text, "--lambda");
      if (!(lambda > 0.0) || lambda == 1.0) {
        throw UsageError("--lambda: Renyi order must be > 0 and != 1");
      }
      cfg.renyi_lambdas.push_back(lambda);
    }
    cfg.offset_grid = raw.offset_grid;
    if (raw.filling == "consecutive") {
      cfg.order = FillingOrder::consecutive;
    } else if (raw.filling == "energy") {
      cfg.order = FillingOrder::energy_ordered;
    } else {
      throw UsageError("--filling-order: expected 'consecutive' or 'energy'");
    }
  }

  if (cfg.sub == Subcommand::sweep) {
    const std::vector<std::string> parts = split(raw.sweep_spec, ':');
    if (parts.size() != 4 || parts[0].empty()) {
      throw UsageError("--sweep: expected <param>:<start>:<stop>:<step>");
    }
    cfg.swept_param = parts[0];
    std::replace(cfg.swept_param.begin(), cfg.swept_param.end(), '-', '_');
    cfg.sweep_start = parse_real(parts[1], "--sweep");
    cfg.sweep_stop = parse_real(parts[2], "--sweep");
    cfg.sweep_step = parse_real(parts[3], "--sweep");
    if (cfg.sweep_step == 0.0) throw UsageError("--sweep: step must be nonzero");
    sweep_value_count(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_step);
    try {
      FamilyParams probe = cfg.params;
      probe.set(cfg.swept_param, cfg.sweep_start);
    } catch (const UnknownModelError& e) {
      throw UsageError(std::string("--sweep: ") + e.what());
    }
  }

  cfg.want_spectrum = raw.spectrum;
  cfg.out_path = raw.out;
  if (raw.format == "csv") {
    cfg.format = OutputFormat::csv;
  } else if (raw.format == "json") {
    cfg.format = OutputFormat::json;
  } else {
    throw UsageError("--format: expected 'csv' or 'json'");
  }
  if (cfg.want_spectrum && cfg.format == OutputFormat::csv) {
    throw UsageError("--spectrum requires --format json");
  }
  return cfg;
}

int run(const RunConfig& cfg) {
  try {
    switch (cfg.sub) {
      case Subcommand::qmt:
        return run_qmt(cfg);
      case Subcommand::winding:
        return run_winding(cfg);
      case Subcommand::gee:
        return run_gee(cfg);
      case Subcommand::scaling:
        return run_scaling_cmd(cfg);
      case Subcommand::sweep:
        return run_sweep_cmd(cfg);
      case Subcommand::check:
        return run_check();
    }
  } catch (const UsageError&) {
    throw;
  } catch (const GridError& e) {
    std::cerr << "error: " << e.what() << "\nhint: rerun with --offset-grid\n";
    return 2;
  } catch (const FloqError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    return run(parse_args(args));
  } catch (const HelpRequest& h) {
    std::cout << h.text;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const FloqError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace floq
