#include "fracheat/cli.hpp"

#include "fracheat/calibration.hpp"
#include "fracheat/closed_kernels.hpp"
#include "fracheat/domain_io.hpp"
#include "fracheat/error.hpp"
#include "fracheat/harness.hpp"
#include "fracheat/montecarlo.hpp"
#include "fracheat/report_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fracheat {

namespace {

struct Common {
  int d = 1;
  double alpha = 1.0;
  std::uint64_t seed = 1;
  long long n = 100000;
  double h = StepPolicy{}.h;
  double adaptive = 0.0;
  double slab_factor = 1.0;
  int workers = 0;
  std::string out = "reports";
  std::string calibration;
  std::optional<double> lambda1;
  std::optional<double> beta;
  bool force_c11 = false;

  StableParams params() const { return StableParams(d, alpha); }
  StepPolicy step() const {
    StepPolicy s;
    s.h = h;
    s.adaptive = adaptive;
    s.slab_factor = slab_factor;
    return s;
  }
  McConfig mc() const {
    McConfig c;
    c.n = n;
    c.seed = seed;
    c.workers = workers;
    c.step = step();
    return c;
  }
};

void add_params(CLI::App* app, Common& c) {
  app->add_option("--d", c.d, "Dimension")->capture_default_str();
  app->add_option("--alpha", c.alpha, "Stability index in (0, 2)")->capture_default_str();
}

void add_mc(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "64-bit seed")->capture_default_str();
  app->add_option("--n", c.n, "Sample count")->capture_default_str();
  app->add_option("--h", c.h, "Time step (smallest step with --adaptive)")->capture_default_str();
  app->add_option("--adaptive", c.adaptive, "Step = max(h, adaptive * delta^alpha)")->capture_default_str();
  app->add_option("--slab-factor", c.slab_factor, "Exit when delta <= factor * h^(1/alpha) for thin complements");
  app->add_option("--workers", c.workers, "Worker threads (default: FRACHEAT_WORKERS or all cores)");
}

void add_profile(CLI::App* app, Common& c) {
  app->add_option("--lambda1", c.lambda1, "Principal eigenvalue of the unit ball");
  app->add_option("--beta", c.beta, "Cone exponent");
  app->add_option("--calibration", c.calibration, "Calibration file for lambda1 and beta");
  app->add_flag("--force-c11", c.force_c11, "Use the C^{1,1} bracket");
}

std::vector<double> split_numbers(const std::string& text, const char* what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string("cannot parse ") + what + " value '" + item + "'");
    }
  }
  if (v.empty()) throw ConfigError(std::string("empty ") + what + " list");
  return v;
}

std::vector<double> positive_times(const std::string& text) {
  std::vector<double> t = split_numbers(text, "time");
  for (double v : t) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("times must be positive and finite");
  }
  return t;
}

ProfileOptions profile_options(const Common& c, const Domain& domain) {
  ProfileOptions o;
  o.lambda1 = c.lambda1;
  o.beta = c.beta;
  o.force_c11 = c.force_c11;
  if (!c.calibration.empty()) {
    const auto entries = load_calibration(c.calibration);
    if (!o.lambda1) {
      if (auto e = find_calibration(entries, "lambda1", c.d, c.alpha, "ball")) o.lambda1 = e->value;
    }
    if (!o.beta) {
      if (auto e = find_calibration(entries, "beta", c.d, c.alpha, domain.describe())) o.beta = e->value;
    }
  }
  return o;
}

std::vector<Point> parse_points(const std::vector<std::string>& texts, int d) {
  std::vector<Point> pts;
  for (const auto& s : texts) pts.push_back(parse_point(s, d));
  return pts;
}

struct Cli {
  std::ostream& out;
  std::ostream& err;
  CLI::App app{"Dirichlet heat kernels of the fractional Laplacian", "fracheat"};
  std::function<int()> action;

  Common c;
  std::string t_text = "1", x_text, y_text, v_text, center_text, domain_spec, window_text;
  double radius = 1.0, R = 2.0, tol = 1e-6, noise = 0.25, near_boundary = 0.1, stable_tol = 0.15, scale_r = 1.0;
  long long mc_n = 0;
  int fit_points = 9;
  bool mc = false, profile = false, bracket = false, profile_form = false, no_doubling = false, no_time_scaling = false;
  std::optional<double> min_valid_time;
  std::vector<std::string> point_texts;
  std::string p_text = "0.25,0.5,0.75";

  Cli(std::ostream& o, std::ostream& e) : out(o), err(e) {
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    setup_density();
    setup_ball();
    setup_survival();
    setup_heatkernel();
    setup_verify();
    setup_calibrate();
  }

  Point point_or_origin(const std::string& text) const {
    return text.empty() ? Point(Point::Zero(c.d)) : parse_point(text, c.d);
  }

  void setup_density() {
    auto* s = app.add_subcommand("density", "Free stable density p(t, x, y)");
    add_params(s, c);
    s->add_option("--t", t_text, "Time")->required();
    s->add_option("--x", x_text, "Start point (default origin)");
    s->add_option("--y", y_text, "End point (default origin)");
    s->callback([this] {
      action = [this] {
        const StableParams p = c.params();
        const double t = split_numbers(t_text, "time").at(0);
        const DensityEval e = free_density(p, t, point_or_origin(x_text), point_or_origin(y_text));
        out << "value,rel_err\n" << format_number(e.value) << ',' << format_number(e.rel_err) << '\n';
        return 0;
      };
    });
  }

  void setup_ball() {
    auto* s = app.add_subcommand("ball", "Closed-form kernels of a ball");
    s->require_subcommand(1);
    auto common = [this](CLI::App* q) {
      add_params(q, c);
      q->add_option("--r", radius, "Ball radius")->capture_default_str();
      q->add_option("--center", center_text, "Ball center (default origin)");
      q->add_option("--x", x_text, "Start point (default origin)");
    };
    auto* g = s->add_subcommand("green", "Green function G(x, v)");
    common(g);
    g->add_option("--v", v_text, "Second point")->required();
    g->callback([this] {
      action = [this] {
        const StableParams p = c.params();
        print_value(ball_green(p, point_or_origin(center_text), radius, point_or_origin(x_text),
                               parse_point(v_text, c.d)));
        return 0;
      };
    });
    auto* pk = s->add_subcommand("poisson", "Poisson kernel P(x, y)");
    common(pk);
    pk->add_option("--y", y_text, "Exit point outside the closed ball")->required();
    pk->callback([this] {
      action = [this] {
        const StableParams p = c.params();
        print_value(ball_poisson(p, point_or_origin(center_text), radius, point_or_origin(x_text),
                                 parse_point(y_text, c.d)));
        return 0;
      };
    });
    auto* et = s->add_subcommand("exit-time", "Expected exit time E^x tau");
    common(et);
    et->callback([this] {
      action = [this] {
        const StableParams p = c.params();
        print_value(expected_exit_time_ball(p, point_or_origin(center_text), radius, point_or_origin(x_text)));
        return 0;
      };
    });
    auto* tl = s->add_subcommand("tail", "P^x(|X_tau| > R) for the unit ball");
    add_params(tl, c);
    tl->add_option("--x", x_text, "Start point (default origin)");
    tl->add_option("--R", R, "Radius, >= 1")->capture_default_str();
    tl->add_flag("--bracket", bracket, "Also print the comparator (1-|x|)^{alpha/2} R^{-alpha} bracket");
    tl->callback([this] {
      action = [this] {
        const StableParams p = c.params();
        const Point x = point_or_origin(x_text);
        if (!bracket) {
          print_value(ball_exit_tail_exact(p, x, R));
          return 0;
        }
        const Bracket b = ball_exit_tail(p, x, R);
        out << "value,lower,upper\n"
            << format_number(ball_exit_tail_exact(p, x, R)) << ',' << format_number(b.lower) << ','
            << format_number(b.upper) << '\n';
        return 0;
      };
    });
  }

  void print_value(double v) { out << "value\n" << format_number(v) << '\n'; }

  void setup_survival() {
    auto* s = app.add_subcommand("survival", "Survival probability P^x(tau_D > t)");
    add_params(s, c);
    add_mc(s, c);
    add_profile(s, c);
    s->add_option("--domain", domain_spec, "Domain document (path or inline JSON)")->required();
    s->add_option("--t", t_text, "Comma separated times")->required();
    s->add_option("--x", x_text, "Start point")->required();
    auto* fm = s->add_flag("--mc", mc, "Monte Carlo estimate");
    auto* fp = s->add_flag("--profile", profile, "Closed profile");
    fm->excludes(fp);
    s->callback([this] {
      action = [this] {
        if (!mc && !profile) throw ConfigError("survival needs --mc or --profile");
        const StableParams p = c.params();
        const Domain domain = load_domain(domain_spec, c.d);
        const std::vector<double> times = positive_times(t_text);
        const Point x = parse_point(x_text, c.d);
        if (profile) {
          const SurvivalProfile prof = survival_profile(domain, p, profile_options(c, domain));
          out << "t,x,lower,upper,form\n";
          for (double t : times) {
            const Bracket b = prof.bounds(t, x);
            out << format_number(t) << ',' << format_point(x) << ',' << format_number(b.lower) << ','
                << format_number(b.upper) << ',' << prof.form_name() << '\n';
          }
          return 0;
        }
        if (!contains(domain, x)) throw ConfigError("start point is not in the domain");
        const double tmax = *std::max_element(times.begin(), times.end());
        const ExitBatch batch = simulate_exit_batch(domain, p, x, tmax, c.mc());
        out << "t,x," << mc_header() << '\n';
        for (double t : times) {
          out << format_number(t) << ',' << format_point(x) << ',' << mc_row(survival_from_batch(batch, t)) << '\n';
        }
        return 0;
      };
    });
  }

  void setup_heatkernel() {
    auto* s = app.add_subcommand("heatkernel", "Killed heat kernel p_D(t, x, y)");
    add_params(s, c);
    add_mc(s, c);
    add_profile(s, c);
    s->add_option("--domain", domain_spec, "Domain document (path or inline JSON)")->required();
    s->add_option("--t", t_text, "Comma separated times")->required();
    s->add_option("--x", x_text, "Start point")->required();
    s->add_option("--y", y_text, "End point")->required();
    auto* fm = s->add_flag("--mc", mc, "Monte Carlo estimate");
    auto* fp = s->add_flag("--profile-bracket", bracket, "S(t,x) p(t,x,y) S(t,y) with the profile comparators");
    fm->excludes(fp);
    s->callback([this] {
      action = [this] {
        if (!mc && !bracket) throw ConfigError("heatkernel needs --mc or --profile-bracket");
        const StableParams p = c.params();
        const Domain domain = load_domain(domain_spec, c.d);
        const std::vector<double> times = positive_times(t_text);
        const Point x = parse_point(x_text, c.d);
        const Point y = parse_point(y_text, c.d);
        if (bracket) {
          const SurvivalProfile prof = survival_profile(domain, p, profile_options(c, domain));
          out << "t,x,y,lower,upper,free\n";
          for (double t : times) {
            const Bracket b = heat_kernel_profile(prof, t, x, y);
            out << format_number(t) << ',' << format_point(x) << ',' << format_point(y) << ','
                << format_number(b.lower) << ',' << format_number(b.upper) << ','
                << format_number(free_density_value(p, t, (x - y).norm())) << '\n';
          }
          return 0;
        }
        if (!contains(domain, x)) throw ConfigError("start point is not in the domain");
        const double tmax = *std::max_element(times.begin(), times.end());
        const ExitBatch batch = simulate_exit_batch(domain, p, x, tmax, c.mc());
        out << "t,x,y,free," << mc_header() << '\n';
        for (double t : times) {
          out << format_number(t) << ',' << format_point(x) << ',' << format_point(y) << ','
              << format_number(free_density_value(p, t, (x - y).norm())) << ','
              << mc_row(heat_kernel_from_batch(batch, p, y, t)) << '\n';
        }
        return 0;
      };
    });
  }

  void setup_verify() {
    auto* s = app.add_subcommand("verify", "Verification suites; exit 0 iff the suite passes");
    s->require_subcommand(1);

    auto* id = s->add_subcommand("identities", "Exact identities at quadrature tolerance");
    add_params(id, c);
    id->add_option("--tol", tol, "Tolerance of the quadrature identities")->capture_default_str();
    id->add_option("--mc-n", mc_n, "Also run the Monte Carlo identities with this many paths");
    id->add_option("--seed", c.seed, "Seed of the Monte Carlo identities");
    id->add_option("--workers", c.workers, "Worker threads");
    id->add_option("--out", c.out, "Report directory")->capture_default_str();
    id->callback([this] {
      action = [this] {
        IdentityOptions o;
        o.tol = tol;
        o.mc_n = mc_n;
        o.seed = c.seed;
        o.workers = c.workers;
        const IdentityReport rep = verify_identities(c.params(), o);
        for (const auto& chk : rep.checks) {
          out << (chk.pass ? "PASS " : "FAIL ") << chk.name << " error=" << format_number(chk.error)
              << " tol=" << format_number(chk.tolerance) << (chk.detail.empty() ? "" : " " + chk.detail) << '\n';
        }
        const auto path = write_report(c.out, "identities_d" + std::to_string(c.d) + "_a" + format_number(c.alpha),
                                       identity_csv(rep), identity_sidecar(rep));
        out << "report " << path.string() << '\n';
        return rep.pass() ? 0 : 1;
      };
    });

    auto sweep_options = [this](CLI::App* q) {
      add_params(q, c);
      add_mc(q, c);
      add_profile(q, c);
      q->add_option("--domain", domain_spec, "Domain document (path or inline JSON)")->required();
      q->add_option("--t", t_text, "Comma separated times")->required();
      q->add_option("--point", point_texts, "Grid point, repeatable")->required();
      q->add_option("--noise", noise, "Relative stderr above which a cell is noisy")->capture_default_str();
      q->add_option("--near-boundary", near_boundary, "delta below which a cell is near the boundary")
          ->capture_default_str();
      q->add_option("--stable-tol", stable_tol, "Allowed relative change of C under n doubling")
          ->capture_default_str();
      q->add_option("--min-valid-time", min_valid_time,
                    "Cells with t below this are annotated (default: diam(D^c)^alpha for bounded complements)");
      q->add_flag("--no-doubling", no_doubling, "Skip the n-doubling stability check");
      q->add_flag("--no-time-scaling", no_time_scaling, "Keep points and step fixed on scale-invariant domains");
      q->add_option("--out", c.out, "Report directory")->capture_default_str();
    };

    auto* fz = s->add_subcommand("factorization", "p_D / (S p S) ratio sweep");
    sweep_options(fz);
    fz->add_flag("--profile-form", profile_form, "Use the closed profile instead of Monte Carlo survival");
    fz->callback([this] { action = [this] { return run_sweep(true); }; });

    auto* pf = s->add_subcommand("profiles", "Survival / profile ratio sweep");
    sweep_options(pf);
    pf->callback([this] { action = [this] { return run_sweep(false); }; });

    auto* bh = s->add_subcommand("bhp", "Boundary Harnack cross-ratios on R minus [-1, 1]");
    add_params(bh, c);
    bh->add_option("--p", p_text, "Comma separated positions p, x1 = 1 + p/2")->capture_default_str();
    bh->add_option("--n", c.n, "Walks per start point")->capture_default_str();
    bh->add_option("--seed", c.seed, "64-bit seed")->capture_default_str();
    bh->add_option("--workers", c.workers, "Worker threads");
    bh->add_option("--out", c.out, "Report directory")->capture_default_str();
    bh->callback([this] {
      action = [this] {
        const StableParams p = c.params();
        if (c.d != 1) throw ConfigError("verify bhp uses the one-dimensional interval family; pass --d 1");
        std::vector<BhpConfiguration> configs;
        for (double v : split_numbers(p_text, "p")) {
          if (!(v > 0.0 && v <= 1.0)) throw ConfigError("p must lie in (0, 1]");
          configs.push_back(interval_bhp_configuration(v));
        }
        const RatioReport rep = bhp_sweep(configs, p, c.n, c.seed, c.workers);
        out << "x1,x2,ratio,stderr,exact\n";
        for (std::size_t i = 0; i < configs.size(); ++i) {
          const double exact = interval_bhp_exact(p, configs[i], {2.5, 4.0}, {-INFINITY, -2.0});
          out << format_point(configs[i].x1) << ',' << format_point(configs[i].x2) << ','
              << format_number(rep.cells[i].ratio) << ',' << format_number(rep.cells[i].std_err) << ','
              << format_number(exact) << '\n';
        }
        const auto path = write_report(c.out, "bhp_interval", ratio_csv(rep), ratio_sidecar(rep));
        out << "empirical_C " << format_number(rep.empirical_C) << "\nreport " << path.string() << '\n';
        return rep.finite() ? 0 : 1;
      };
    });
  }

  int run_sweep(bool factorization) {
    const StableParams p = c.params();
    const Domain domain = load_domain(domain_spec, c.d);
    SweepConfig cfg;
    cfg.times = positive_times(t_text);
    cfg.points = parse_points(point_texts, c.d);
    cfg.n = c.n;
    cfg.seed = c.seed;
    cfg.workers = c.workers;
    cfg.step = c.step();
    const bool scale = domain.is_scale_invariant() && !no_time_scaling;
    cfg.scale_points_with_time = scale;
    cfg.scale_step_with_time = scale;
    cfg.n_doubling = !no_doubling;
    cfg.theorem_form = !profile_form;
    cfg.profile = profile_options(c, domain);
    cfg.noise_threshold = noise;
    cfg.near_boundary = near_boundary;
    const double diam = domain.complement_diameter();
    if (min_valid_time) {
      cfg.min_valid_time = *min_valid_time;
    } else if (std::isfinite(diam)) {
      cfg.min_valid_time = std::nextafter(std::pow(diam, c.alpha), INFINITY);
    }
    const RatioReport rep = factorization ? factorization_sweep(domain, p, cfg) : profile_sweep(domain, p, cfg);
    const std::string stem = rep.kind + "_" + domain.type_name();
    const auto path = write_report(c.out, stem, ratio_csv(rep), ratio_sidecar(rep));
    const bool stable = no_doubling || rep.stable(stable_tol);
    const bool boundary = !factorization || rep.boundary_ok();
    out << "empirical_C " << format_number(rep.empirical_C);
    if (rep.empirical_C_half) out << " (n/2: " << format_number(*rep.empirical_C_half) << ")";
    out << "\nratio range [" << format_number(rep.min_ratio) << ", " << format_number(rep.max_ratio) << "] median "
        << format_number(rep.q50) << "\nnoisy cells " << rep.stderr_flags << ", outside range " << rep.outside_range
        << "\nfinite " << rep.finite() << " stable " << stable << " boundary " << boundary << "\nreport "
        << path.string() << '\n';
    return rep.finite() && stable && boundary ? 0 : 1;
  }

  void setup_calibrate() {
    auto* s = app.add_subcommand("calibrate", "Measure lambda1 or a cone exponent and store it with provenance");
    s->require_subcommand(1);
    auto common = [this](CLI::App* q) {
      add_params(q, c);
      add_mc(q, c);
      q->add_option("--calibration", c.calibration, "Calibration file")->required();
      q->add_option("--window", window_text, "Fit window t1,t2");
      q->add_option("--points", fit_points, "Log-spaced fit times")->capture_default_str();
    };
    auto* l1 = s->add_subcommand("lambda1", "Principal eigenvalue of the unit ball from survival decay");
    common(l1);
    l1->add_option("--r", scale_r, "Ball radius of the run")->capture_default_str();
    l1->callback([this] {
      action = [this] {
        const StableParams p = c.params();
        const auto window = window_text.empty() ? default_lambda1_window(p, scale_r) : parse_window();
        const DecayFit fit = estimate_lambda1(p, scale_r, window, c.mc(), fit_points);
        return store(fit, "lambda1", "ball", window, scale_r);
      };
    });
    auto* be = s->add_subcommand("beta", "Cone exponent from the power-law survival decay");
    common(be);
    be->add_option("--domain", domain_spec, "Scale-invariant domain document")->required();
    be->add_option("--x", x_text, "Probe point")->required();
    be->callback([this] {
      action = [this] {
        const StableParams p = c.params();
        const Domain domain = load_domain(domain_spec, c.d);
        if (!domain.is_scale_invariant()) throw ConfigError("beta calibration needs a scale-invariant domain");
        if (window_text.empty()) throw ConfigError("beta calibration needs --window t1,t2");
        const auto window = parse_window();
        const DecayFit fit = estimate_beta(p, domain, parse_point(x_text, c.d), window, c.mc(), fit_points);
        return store(fit, "beta", domain.describe(), window, 1.0);
      };
    });
  }

  std::pair<double, double> parse_window() const {
    const std::vector<double> w = split_numbers(window_text, "window");
    if (w.size() != 2 || !(w[0] > 0.0) || !(w[1] > w[0])) throw ConfigError("--window must be t1,t2 with 0 < t1 < t2");
    return {w[0], w[1]};
  }

  int store(const DecayFit& fit, const std::string& kind, const std::string& key, std::pair<double, double> window,
            double scale) {
    CalibrationEntry e;
    e.kind = kind;
    e.d = c.d;
    e.alpha = c.alpha;
    e.domain = key;
    e.value = fit.estimate.mean;
    e.std_err = fit.estimate.std_err;
    e.seed = c.seed;
    e.n = c.n;
    e.window_lo = window.first;
    e.window_hi = window.second;
    e.scale = scale;
    e.h = c.h;
    e.adaptive = c.adaptive;
    e.first_half = fit.first_half.mean;
    e.second_half = fit.second_half.mean;
    out << "kind,value,stderr,first_half,second_half\n"
        << kind << ',' << format_number(e.value) << ',' << format_number(e.std_err) << ','
        << format_number(e.first_half) << ',' << format_number(e.second_half) << '\n';
    if (!fit.estimate.diagnostic.empty()) err << "note: " << fit.estimate.diagnostic << '\n';
    if (!fit.halves_agree) {
      err << "error: the two halves of the fit window disagree (" << format_number(e.first_half) << " vs "
          << format_number(e.second_half) << "); the value was not stored\n";
      return kExitFail;
    }
    const auto entries = load_calibration(c.calibration);
    if (auto prev = find_same_run(entries, e)) {
      if (prev->value == e.value) {
        out << "reproduced stored value\n";
        return kExitOk;
      }
      err << "error: stored value " << format_number(prev->value) << " from the same run configuration differs\n";
      return kExitFail;
    }
    append_calibration(c.calibration, e);
    out << "stored in " << c.calibration << '\n';
    return kExitOk;
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << cli.app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << cli.app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (!cli.action) {
    err << "error: no command given\n";
    return kExitConfig;
  }
  try {
    return cli.action();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnsupportedRegime& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const MissingParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InconclusiveReport& e) {
    err << "inconclusive: " << e.what() << "; rerun with n >= " << e.required_n() << '\n';
    return kExitInconclusive;
  } catch (const InsufficientSamples& e) {
    err << "inconclusive: " << e.what() << "; rerun with n >= " << e.required_n() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace fracheat
